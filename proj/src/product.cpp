#include "goursat/product.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace goursat {

namespace {

std::vector<std::size_t> make_strides(const std::vector<GroupPtr>& factors) {
  std::vector<std::size_t> strides(factors.size());
  std::size_t s = 1;
  for (std::size_t i = factors.size(); i-- > 0;) {
    strides[i] = s;
    s *= factors[i]->order();
  }
  return strides;
}

}  // namespace

GroupPtr pair_product(const GroupPtr& left, const GroupPtr& right) {
  const std::size_t nl = left->order();
  const std::size_t nr = right->order();
  const std::size_t n = nl * nr;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto al = static_cast<Element>(a / nr);
    const auto ar = static_cast<Element>(a % nr);
    for (std::size_t b = 0; b < n; ++b) {
      const auto bl = static_cast<Element>(b / nr);
      const auto br = static_cast<Element>(b % nr);
      table[a * n + b] = static_cast<Element>(
          static_cast<std::size_t>(left->mul(al, bl)) * nr +
          static_cast<std::size_t>(right->mul(ar, br)));
    }
  }
  // Names flatten "(a,b)" x "c" into "(a,b,c)" so every prefix reads as a
  // plain coordinate tuple.
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string l = left->name(static_cast<Element>(a / nr));
    const std::string& r = right->name(static_cast<Element>(a % nr));
    if (!l.empty() && l.front() == '(' && l.back() == ')') {
      l.pop_back();
      names.push_back(l + "," + r + ")");
    } else {
      names.push_back("(" + l + "," + r + ")");
    }
  }
  return std::make_shared<const FiniteGroup>(left->label() + "x" + right->label(),
                                             n, std::move(table), std::move(names));
}

DirectProduct::DirectProduct(std::vector<GroupPtr> factors, std::size_t max_order)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("direct product needs a factor");
  std::size_t order = 1;
  for (const GroupPtr& f : factors_) {
    if (!f) throw std::invalid_argument("null factor");
    order *= f->order();
    if (order > max_order) throw CapExceeded(order, max_order);
  }
  strides_ = make_strides(factors_);
  auto prefixes = std::make_shared<std::vector<GroupPtr>>();
  prefixes->push_back(factors_.front());
  for (std::size_t k = 1; k < factors_.size(); ++k) {
    prefixes->push_back(pair_product(prefixes->back(), factors_[k]));
  }
  prefixes_ = std::move(prefixes);
}

DirectProduct::DirectProduct(std::vector<GroupPtr> factors,
                             std::shared_ptr<const std::vector<GroupPtr>> prefixes)
    : factors_(std::move(factors)),
      strides_(make_strides(factors_)),
      prefixes_(std::move(prefixes)) {}

Element DirectProduct::encode(std::span<const Element> coords) const {
  if (coords.size() != factors_.size()) {
    throw std::invalid_argument("coordinate count does not match factor count");
  }
  std::size_t x = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!factors_[i]->valid(coords[i])) {
      throw std::invalid_argument("coordinate out of range for factor " +
                                  std::to_string(i + 1));
    }
    x = x * factors_[i]->order() + static_cast<std::size_t>(coords[i]);
  }
  return static_cast<Element>(x);
}

std::vector<Element> DirectProduct::decode(Element x) const {
  if (!group()->valid(x)) throw std::invalid_argument("element index out of range");
  std::vector<Element> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) coords[i] = coordinate(x, i);
  return coords;
}

DirectProduct DirectProduct::prefix(std::size_t k) const {
  if (k == 0 || k > factors_.size()) throw std::out_of_range("prefix length");
  if (k == factors_.size()) return *this;
  auto sub = std::make_shared<std::vector<GroupPtr>>(prefixes_->begin(),
                                                     prefixes_->begin() + k);
  return DirectProduct(
      std::vector<GroupPtr>(factors_.begin(), factors_.begin() + k), std::move(sub));
}

DirectProduct DirectProduct::select(std::span<const std::size_t> positions) const {
  if (positions.empty()) throw std::invalid_argument("empty factor selection");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= factors_.size() || (i > 0 && positions[i] <= positions[i - 1])) {
      throw std::invalid_argument("factor positions must be increasing and in range");
    }
  }
  if (positions.back() + 1 == positions.size()) return prefix(positions.size());
  std::vector<GroupPtr> chosen;
  for (std::size_t p : positions) chosen.push_back(factors_[p]);
  return DirectProduct(std::move(chosen));
}

Element DirectProduct::embed(const DirectProduct& sub,
                             std::span<const std::size_t> positions,
                             Element sub_element) const {
  std::vector<Element> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) coords[i] = factors_[i]->identity();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    coords[positions[i]] = sub.coordinate(sub_element, i);
  }
  return encode(coords);
}

Element DirectProduct::project(const DirectProduct& sub,
                               std::span<const std::size_t> positions,
                               Element x) const {
  std::size_t y = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    y = y * sub.factor(i)->order() + static_cast<std::size_t>(coordinate(x, positions[i]));
  }
  return static_cast<Element>(y);
}

}  // namespace goursat
