#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace toriclogk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or a bare integer. Whitespace around the token is
/// ignored; anything else (decimals, exponents, zero denominators) is a
/// ParseError. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print bare ("3", "-1").
std::string to_string(const Rational& value);

int sign(const Rational& value);

/// Returns value in lowest terms with a positive denominator. mpq_class(n, d)
/// does not reduce, and comparisons on unreduced values are unreliable.
inline Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

/// n/d in lowest terms.
inline Rational make_rational(long num, long den) { return canonical(Rational(num, den)); }

/// Exact point or direction in Q^n.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t n) : coords_(n) {}
  RatVec(std::initializer_list<Rational> coords) : coords_(coords) { canonicalize(); }
  explicit RatVec(std::vector<Rational> coords) : coords_(std::move(coords)) { canonicalize(); }

  static RatVec from_ints(std::initializer_list<long> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  RatVec& operator+=(const RatVec& other);
  RatVec& operator-=(const RatVec& other);
  RatVec& operator*=(const Rational& scale);

  friend bool operator==(const RatVec& a, const RatVec& b) { return a.coords_ == b.coords_; }
  /// Lexicographic.
  friend bool operator<(const RatVec& a, const RatVec& b);

 private:
  void canonicalize() {
    for (auto& c : coords_) c.canonicalize();
  }

  std::vector<Rational> coords_;
};

RatVec operator+(RatVec a, const RatVec& b);
RatVec operator-(RatVec a, const RatVec& b);
RatVec operator-(RatVec a);
RatVec operator*(const Rational& s, RatVec a);

/// Throws DimensionMismatch when sizes differ.
Rational dot(const RatVec& a, const RatVec& b);

/// Comma-separated rationals, e.g. "-1,2" or "1/2, 1/3".
RatVec parse_ratvec(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

/// "(1/12, 1/12)"
std::string to_string(const RatVec& v);

}  // namespace toriclogk
