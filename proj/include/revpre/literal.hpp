#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace revpre {

/// Boolean literal over a 0-based variable id.
struct Literal {
  std::uint32_t var;
  bool positive = true;

  constexpr Literal operator~() const noexcept { return {var, !positive}; }
  friend constexpr bool operator==(const Literal&, const Literal&) = default;

  /// Signed 1-based DIMACS form.
  long long dimacs() const noexcept {
    const long long id = static_cast<long long>(var) + 1;
    return positive ? id : -id;
  }
  static Literal from_dimacs(long long value) {
    return {static_cast<std::uint32_t>((value < 0 ? -value : value) - 1), value > 0};
  }
};

constexpr Literal pos(std::uint32_t var) noexcept { return {var, true}; }
constexpr Literal neg(std::uint32_t var) noexcept { return {var, false}; }

/// Truth value per variable.
using Assignment = std::vector<bool>;

inline bool holds(Literal l, const Assignment& a) { return a[l.var] == l.positive; }

}  // namespace revpre
