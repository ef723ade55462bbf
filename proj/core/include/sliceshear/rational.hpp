#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sliceshear {

using Int = std::int64_t;

// Overflow-checked integer helpers. All throw DomainError on overflow, so no
// value in the engine ever silently wraps.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
/// 2^e for 0 <= e <= 62.
Int pow2(Int e);
/// Floor modulus, result in [0, m). Requires m > 0.
Int mod_floor(Int a, Int m);

/// Exact rational with a positive, fully reduced denominator.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(Int value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Floor and ceiling toward the integer lattice.
  Int floor() const noexcept;
  Int ceil() const noexcept;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sliceshear
