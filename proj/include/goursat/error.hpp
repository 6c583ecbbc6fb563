#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goursat {

// Default size limits. Construction is cheap; subgroup enumeration is not.
inline constexpr std::size_t kDefaultMaxGroupOrder = 2000;
inline constexpr std::size_t kDefaultMaxEnumerationOrder = 400;

/// A group or enumeration would exceed the configured order cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t order, std::size_t cap)
      : std::runtime_error("order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  std::size_t order() const { return order_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t order_;
  std::size_t cap_;
};

/// A structural result that must hold for every input failed. Always a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace goursat
