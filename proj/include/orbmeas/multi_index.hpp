#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "orbmeas/errors.hpp"

namespace orbmeas {

/// Largest ambient dimension any polynomial may have.
inline constexpr std::size_t kMaxVars = 8;
/// Largest total degree any polynomial may carry.
inline constexpr int kMaxDegree = 64;

/// Exponent vector β of a monomial x^β. Ordered graded-lexicographically:
/// total degree first, then x1 > x2 > ... > xn.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw DomainError("too many variables");
  }

  MultiIndex(std::initializer_list<unsigned> exps) : MultiIndex(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static MultiIndex unit(std::size_t nvars, std::size_t var) {
    MultiIndex m(nvars);
    m.set(var, 1);
    return m;
  }

  std::size_t size() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }

  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }

  void set(std::size_t i, unsigned value) {
    int d = degree_ - e_[i] + static_cast<int>(value);
    if (d > kMaxDegree) throw DegreeOverflow(d);
    e_[i] = static_cast<std::uint8_t>(value);
    degree_ = static_cast<std::int16_t>(d);
  }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r(*this);
    for (std::size_t i = 0; i < nvars_; ++i) r.set(i, e_[i] + o.e_[i]);
    return r;
  }

  /// Componentwise β ≤ γ.
  bool divides(const MultiIndex& o) const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.nvars_ == b.nvars_ && a.e_ == b.e_;
  }

  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
    return a.nvars_ <=> b.nvars_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t nvars_ = 0;
  std::int16_t degree_ = 0;
};

}  // namespace orbmeas
