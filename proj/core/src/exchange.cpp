#include "figgie/exchange.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace figgie {

bool OrderBook::bid_below(const Key& a, const Key& b) noexcept {
  if (a.price != b.price) return a.price < b.price;
  if (a.placed_at != b.placed_at) return a.placed_at > b.placed_at;
  return raw(a.id) > raw(b.id);
}

bool OrderBook::ask_below(const Key& a, const Key& b) noexcept {
  if (a.price != b.price) return a.price > b.price;
  if (a.placed_at != b.placed_at) return a.placed_at > b.placed_at;
  return raw(a.id) > raw(b.id);
}

void OrderBook::push(const Order& order) {
  orders_.insert_or_assign(raw(order.id), order);
  const Key key{order.price, order.placed_at, order.id};
  if (order.side == Side::kBuy) {
    bids_.push_back(key);
    std::push_heap(bids_.begin(), bids_.end(), bid_below);
  } else {
    asks_.push_back(key);
    std::push_heap(asks_.begin(), asks_.end(), ask_below);
  }
}

void OrderBook::pop_top(Side side) {
  auto& heap = side == Side::kBuy ? bids_ : asks_;
  const OrderId id = heap.front().id;
  if (side == Side::kBuy) {
    std::pop_heap(heap.begin(), heap.end(), bid_below);
  } else {
    std::pop_heap(heap.begin(), heap.end(), ask_below);
  }
  heap.pop_back();
  orders_.erase(raw(id));
}

void OrderBook::sweep(Side side) {
  auto& heap = side == Side::kBuy ? bids_ : asks_;
  while (!heap.empty() && orders_.at(raw(heap.front().id)).deleted) pop_top(side);
}

Order* OrderBook::top(Side side) {
  auto& heap = side == Side::kBuy ? bids_ : asks_;
  if (heap.empty()) return nullptr;
  return &orders_.at(raw(heap.front().id));
}

std::vector<Trade> OrderBook::add_order(const Order& order, Holdings& holdings, SimTime now) {
  if (order.asset != asset_) throw std::invalid_argument("order routed to the wrong book");
  removed_.clear();
  std::vector<Trade> trades;
  push(order);

  const std::size_t suit = index(asset_);
  for (;;) {
    Order* bid = top(Side::kBuy);
    Order* ask = top(Side::kSell);
    if (bid == nullptr || ask == nullptr || bid->price < ask->price) break;

    const int inventory = holdings.cards[ask->agent][suit];
    const int v = std::min({bid->volume, ask->volume, inventory});
    if (v <= 0) {
      // The seller has nothing left to deliver; drop the ask, keep the bid.
      voided_.push_back(*ask);
      removed_.push_back(*ask);
      pop_top(Side::kSell);
      sweep(Side::kSell);
      continue;
    }

    holdings.cards[ask->agent][suit] -= v;
    holdings.cards[bid->agent][suit] += v;
    const double amount = v * bid->price;
    holdings.cash[bid->agent] -= amount;
    holdings.cash[ask->agent] += amount;
    trades.push_back(Trade{now, asset_, bid->agent, ask->agent, bid->price, v});

    bid->volume -= v;
    ask->volume -= v;
    if (bid->volume == 0) {
      removed_.push_back(*bid);
      pop_top(Side::kBuy);
      sweep(Side::kBuy);
    }
    if (ask->volume == 0) {
      removed_.push_back(*ask);
      pop_top(Side::kSell);
      sweep(Side::kSell);
    }
  }
  return trades;
}

std::optional<double> OrderBook::best_bid() const {
  if (bids_.empty()) return std::nullopt;
  return bids_.front().price;
}

std::optional<double> OrderBook::best_ask() const {
  if (asks_.empty()) return std::nullopt;
  return asks_.front().price;
}

void OrderBook::mark_deleted(OrderId id) {
  auto it = orders_.find(raw(id));
  if (it == orders_.end()) {
    throw std::out_of_range("order " + std::to_string(raw(id)) + " is not resting in the " +
                            std::string(suit_name(asset_)) + " book");
  }
  if (it->second.deleted) return;
  it->second.deleted = true;
  // Keep the tops live so best_bid/best_ask can be read without mutation.
  sweep(it->second.side);
}

const Order* OrderBook::find(OrderId id) const {
  auto it = orders_.find(raw(id));
  return it == orders_.end() ? nullptr : &it->second;
}

bool OrderBook::is_live(OrderId id) const {
  const Order* o = find(id);
  return o != nullptr && !o->deleted;
}

std::vector<Order> OrderBook::resting(Side side) const {
  std::vector<Order> out;
  for (const auto& [id, o] : orders_) {
    if (o.side == side && !o.deleted) out.push_back(o);
  }
  return out;
}

Exchange::Exchange()
    : books_{OrderBook(Suit::kSpades), OrderBook(Suit::kClubs), OrderBook(Suit::kHearts),
             OrderBook(Suit::kDiamonds)} {}

std::vector<Trade> Exchange::submit(AgentId agent, const OrderRequest& request, Holdings& holdings, SimTime now) {
  if (agent >= kNumPlayers) throw std::out_of_range("agent id out of range");
  Order order;
  order.id = static_cast<OrderId>(asset_of_.size());
  order.agent = agent;
  order.side = request.side;
  order.asset = request.asset;
  order.price = request.price;
  order.volume = request.volume;
  order.placed_at = now;
  asset_of_.push_back(request.asset);
  history_[agent][index(request.asset)][request.side == Side::kBuy ? 0 : 1].push_back(request.price);
  own(order).emplace(order.price, raw(order.id));

  OrderBook& book = books_[index(request.asset)];
  std::vector<Trade> trades = book.add_order(order, holdings, now);
  for (const Order& gone : book.last_removed()) own(gone).erase({gone.price, raw(gone.id)});
  auto& log = trades_[index(request.asset)];
  log.insert(log.end(), trades.begin(), trades.end());
  tape_.insert(tape_.end(), trades.begin(), trades.end());
  return trades;
}

void Exchange::mark_deleted(OrderId id) {
  if (raw(id) >= asset_of_.size()) throw std::out_of_range("unknown order id " + std::to_string(raw(id)));
  OrderBook& book = books_[index(asset_of_[raw(id)])];
  const Order* o = book.find(id);
  if (o == nullptr || o->deleted) return;
  own(*o).erase({o->price, raw(o->id)});
  book.mark_deleted(id);
}

std::optional<double> Exchange::last_trade_price(Suit s) const {
  const auto& log = trades_[index(s)];
  if (log.empty()) return std::nullopt;
  return log.back().price;
}

std::size_t Exchange::voided_count() const {
  std::size_t n = 0;
  for (const auto& b : books_) n += b.voided().size();
  return n;
}

std::size_t Exchange::resting_count() const {
  std::size_t n = 0;
  for (const auto& b : books_) n += b.resting(Side::kBuy).size() + b.resting(Side::kSell).size();
  return n;
}

}  // namespace figgie
