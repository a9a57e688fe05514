#include "toriclogk/rational.hpp"

#include <algorithm>
#include <cctype>

#include "toriclogk/error.hpp"

namespace toriclogk {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::BarycenterAtOrigin: return "BarycenterAtOrigin";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::ZeroB0: return "ZeroB0";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view raw = trim(text);
  std::string_view body = raw;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  if (raw.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

int sign(const Rational& value) { return sgn(value); }

RatVec RatVec::from_ints(std::initializer_list<long> coords) {
  RatVec v(coords.size());
  std::size_t i = 0;
  for (long c : coords) v.coords_[i++] = c;
  return v;
}

bool RatVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool RatVec::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

static void require_same_size(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector sizes " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()) + " differ");
  }
}

RatVec& RatVec::operator+=(const RatVec& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rational& scale) {
  for (auto& c : coords_) c *= scale;
  return *this;
}

bool operator<(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
RatVec operator-(RatVec a) { return a *= Rational(-1); }
RatVec operator*(const Rational& s, RatVec a) { return a *= s; }

Rational dot(const RatVec& a, const RatVec& b) {
  require_same_size(a, b);
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RatVec parse_ratvec(std::string_view text) {
  auto coords = parse_rational_list(text);
  if (coords.empty()) throw Error(ErrorCode::ParseError, "empty vector");
  return RatVec(std::move(coords));
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace toriclogk
