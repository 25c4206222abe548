#pragma once

// Exact scalars: the cyclotomic field Q(zeta_8), Laurent polynomials in t over
// it, and reduced rational functions with a t -> 0 limit.

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evokit/errors.hpp"

namespace evokit {

using Rational = mpq_class;

/// Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z), z a primitive 8th root of
/// unity, z^4 = -1. z^2 plays the role of i and z the role of sqrt(i).
class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT
  CycScalar(Rational value) : c_{std::move(value), 0, 0, 0} {}  // NOLINT
  CycScalar(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// z^k for any integer k, reduced with z^4 = -1.
  static CycScalar zeta(long power = 1) {
    long k = ((power % 8) + 8) % 8;
    CycScalar out;
    if (k < 4) {
      out.c_[k] = 1;
    } else {
      out.c_[k - 4] = -1;
    }
    return out;
  }
  static CycScalar imag_unit() { return zeta(2); }

  const Rational& coeff(std::size_t k) const { return c_.at(k); }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 &&
           sgn(c_[3]) == 0;
  }
  bool is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  /// Number of nonzero coordinates.
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : c_) n += sgn(c) != 0 ? 1 : 0;
    return n;
  }

  CycScalar operator-() const {
    return {-c_[0], -c_[1], -c_[2], -c_[3]};
  }
  CycScalar& operator+=(const CycScalar& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycScalar& operator-=(const CycScalar& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  CycScalar& operator/=(const CycScalar& o) { return *this = *this / o; }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }

  friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.is_rational()) return b.scaled(a.c_[0]);
    if (b.is_rational()) return a.scaled(b.c_[0]);
    std::array<Rational, 4> out{};
    for (std::size_t p = 0; p < 4; ++p) {
      if (sgn(a.c_[p]) == 0) continue;
      for (std::size_t q = 0; q < 4; ++q) {
        if (sgn(b.c_[q]) == 0) continue;
        Rational prod = a.c_[p] * b.c_[q];
        std::size_t k = p + q;
        if (k < 4) {
          out[k] += prod;
        } else {
          out[k - 4] -= prod;
        }
      }
    }
    return {out[0], out[1], out[2], out[3]};
  }

  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) {
    if (b.is_rational()) {
      if (sgn(b.c_[0]) == 0) throw DivisionByZero();
      Rational inv = 1 / b.c_[0];
      return a.scaled(inv);
    }
    return a * b.inverse();
  }

  friend bool operator==(const CycScalar& a, const CycScalar& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycScalar& a, const CycScalar& b) {
    return !(a == b);
  }

  /// Field automorphism z -> z^k, k odd.
  CycScalar galois(long k) const {
    CycScalar out;
    for (long j = 0; j < 4; ++j) {
      if (sgn(c_[j]) == 0) continue;
      out += zeta(j * k).scaled(c_[j]);
    }
    return out;
  }

  /// Product of all four Galois conjugates; always rational.
  Rational norm() const {
    CycScalar n = *this * galois(3) * galois(5) * galois(7);
    return n.c_[0];
  }

  CycScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return CycScalar(Rational(1 / c_[0]));
    CycScalar others = galois(3) * galois(5) * galois(7);
    Rational n = (*this * others).c_[0];
    return others.scaled(Rational(1 / n));
  }

  CycScalar scaled(const Rational& r) const {
    return {c_[0] * r, c_[1] * r, c_[2] * r, c_[3] * r};
  }

  /// Embedding with z = exp(i*pi/4).
  std::complex<double> to_complex() const {
    const double h = 0.70710678118654752440;
    std::complex<double> z{h, h};
    std::complex<double> out = c_[0].get_d();
    out += c_[1].get_d() * z;
    out += c_[2].get_d() * std::complex<double>{0.0, 1.0};
    out += c_[3].get_d() * std::complex<double>{-h, h};
    return out;
  }

 private:
  std::array<Rational, 4> c_{};
};

inline CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) { return a * b; }
inline CycScalar cyc_inv(const CycScalar& a) { return a.inverse(); }

inline std::string format_rational(const Rational& r) { return r.get_str(); }

namespace detail {

inline const char* unit_name(std::size_t k) {
  static const char* names[] = {"", "zeta", "i", "zeta^3"};
  return names[k];
}

inline void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (!term.empty() && term[0] == '-') {
    out += " - ";
    out += term.substr(1);
  } else {
    out += " + ";
    out += term;
  }
}

}  // namespace detail

inline std::string format_scalar(const CycScalar& a) {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational& c = a.coeff(k);
    if (sgn(c) == 0) continue;
    std::string term;
    if (k == 0) {
      term = format_rational(c);
    } else if (c == 1) {
      term = detail::unit_name(k);
    } else if (c == -1) {
      term = std::string("-") + detail::unit_name(k);
    } else {
      term = format_rational(c) + "*" + detail::unit_name(k);
    }
    detail::append_term(out, term);
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const CycScalar& a) {
  return os << format_scalar(a);
}

/// Finite sum of c_k t^(valuation + k). Leading and trailing stored
/// coefficients are nonzero; zero is the empty list with valuation 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value) : LaurentPoly(CycScalar(value)) {}  // NOLINT
  LaurentPoly(const CycScalar& c) {                           // NOLINT
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  LaurentPoly(int valuation, std::vector<CycScalar> coeffs)
      : valuation_(valuation), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static LaurentPoly monomial(const CycScalar& c, int exponent) {
    return LaurentPoly(exponent, {c});
  }
  static LaurentPoly t(int exponent = 1) { return monomial(CycScalar(1), exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Lowest exponent; 0 for the zero polynomial.
  int valuation() const { return valuation_; }
  /// Highest exponent; only meaningful when nonzero.
  int top_exponent() const {
    return valuation_ + static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<CycScalar>& coeffs() const { return coeffs_; }

  CycScalar coefficient(int exponent) const {
    long k = static_cast<long>(exponent) - valuation_;
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
  }

  LaurentPoly shifted(int by) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.valuation_ += by;
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.valuation_, b.valuation_);
    int hi = std::max(a.top_exponent(), b.top_exponent());
    std::vector<CycScalar> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      out[static_cast<std::size_t>(a.valuation_ - lo) + k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
      out[static_cast<std::size_t>(b.valuation_ - lo) + k] += b.coeffs_[k];
    return LaurentPoly(lo, std::move(out));
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CycScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t p = 0; p < a.coeffs_.size(); ++p)
      for (std::size_t q = 0; q < b.coeffs_.size(); ++q)
        out[p + q] += a.coeffs_[p] * b.coeffs_[q];
    return LaurentPoly(a.valuation_ + b.valuation_, std::move(out));
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  /// Value at a nonzero point (or any point if no negative exponents).
  CycScalar eval(const CycScalar& x) const {
    if (is_zero()) return {};
    CycScalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    if (valuation_ > 0) {
      for (int k = 0; k < valuation_; ++k) acc *= x;
    } else if (valuation_ < 0) {
      CycScalar inv = x.inverse();
      for (int k = 0; k < -valuation_; ++k) acc *= inv;
    }
    return acc;
  }

  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + it->to_complex();
    return acc * std::pow(x, valuation_);
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      valuation_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      valuation_ += static_cast<int>(lead);
    }
    while (coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  int valuation_ = 0;
  std::vector<CycScalar> coeffs_;
};

inline std::string format_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const CycScalar& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    int e = p.valuation() + static_cast<int>(k);
    std::string term;
    if (e == 0) {
      term = format_scalar(c);
      if (c.term_count() > 1 && !out.empty()) term = "(" + term + ")";
    } else {
      std::string var = e == 1 ? "t" : "t^" + std::to_string(e);
      if (c.is_one()) {
        term = var;
      } else if ((-c).is_one()) {
        term = "-" + var;
      } else if (c.term_count() == 1) {
        term = format_scalar(c) + "*" + var;
      } else {
        term = "(" + format_scalar(c) + ")*" + var;
      }
    }
    detail::append_term(out, term);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << format_laurent(p);
}

namespace detail {

using DensePoly = std::vector<CycScalar>;  // index = degree

inline void trim(DensePoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<DensePoly, DensePoly> divmod(DensePoly a, const DensePoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  DensePoly q(a.size() - b.size() + 1);
  CycScalar lead_inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    CycScalar c = a[k + b.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

/// Monic greatest common divisor.
inline DensePoly gcd(DensePoly a, DensePoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DensePoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  CycScalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

}  // namespace detail

constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// num/den with den a polynomial of valuation 0 and constant term 1, and no
/// common factor between the two. Equality is structural.
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(long value) : num_(value) {}                // NOLINT
  RationalFn(const CycScalar& c) : num_(c) {}            // NOLINT
  RationalFn(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT
  RationalFn(const LaurentPoly& num, const LaurentPoly& den) { assign(num, den); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.coeffs().size() == 1; }

  int valuation() const { return is_zero() ? kInfiniteValuation : num_.valuation(); }

  CycScalar limit0() const {
    if (is_zero()) return {};
    int v = num_.valuation();
    if (v < 0) {
      throw NoLimitError("no limit at t = 0: valuation " + std::to_string(v));
    }
    if (v > 0) return {};
    return num_.coefficient(0);
  }

  /// Value at t = x, or nothing at a pole.
  std::optional<CycScalar> eval(const CycScalar& x) const {
    if (x.is_zero()) {
      if (valuation() < 0) return std::nullopt;
      return limit0();
    }
    CycScalar d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
  }

  std::complex<double> eval(double x) const {
    std::complex<double> z{x, 0.0};
    return num_.eval(z) / den_.eval(z);
  }

  RationalFn inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFn(den_, num_);
  }

  RationalFn operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.is_laurent()) return RationalFn(a.num_ + b.num_);
      return RationalFn(a.num_ + b.num_, a.den_);
    }
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return a + (-b);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_laurent() && b.is_laurent()) return RationalFn(a.num_ * b.num_);
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (b.num_.is_monomial() && b.is_laurent() && a.is_laurent()) {
      const CycScalar& c = b.num_.coeffs().front();
      return RationalFn(a.num_.shifted(-b.num_.valuation()) *
                        LaurentPoly(c.inverse()));
    }
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) {
    return !(a == b);
  }

 private:
  void assign(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
      num_ = {};
      den_ = LaurentPoly(1);
      return;
    }
    int v = num.valuation() - den.valuation();
    detail::DensePoly p = num.coeffs();
    detail::DensePoly q = den.coeffs();
    if (p.size() > 1 && q.size() > 1) {
      detail::DensePoly g = detail::gcd(p, q);
      if (g.size() > 1) {
        p = detail::divmod(p, g).first;
        q = detail::divmod(q, g).first;
      }
    }
    CycScalar c = q.front();
    if (!c.is_one()) {
      CycScalar inv = c.inverse();
      for (auto& x : p) x *= inv;
      for (auto& x : q) x *= inv;
    }
    num_ = LaurentPoly(v, std::move(p));
    den_ = LaurentPoly(0, std::move(q));
  }

  LaurentPoly num_;
  LaurentPoly den_{1};
};

inline int rf_valuation(const RationalFn& f) { return f.valuation(); }
inline CycScalar rf_limit0(const RationalFn& f) { return f.limit0(); }

inline std::string format_rational_fn(const RationalFn& f) {
  if (f.is_laurent()) {
    const CycScalar& c = f.den().coeffs().front();
    if (c.is_one()) return format_laurent(f.num());
  }
  return "(" + format_laurent(f.num()) + ")/(" + format_laurent(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalFn& f) {
  return os << format_rational_fn(f);
}

namespace detail {

/// Recursive-descent reader for sums of products of rationals, the units
/// i / zeta / sqrt_i, parenthesised groups and (optionally) powers of t.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, bool allow_t)
      : text_(text), allow_t_(allow_t) {}

  LaurentPoly parse() {
    skip_ws();
    if (eof()) fail("empty expression");
    LaurentPoly value = expr();
    skip_ws();
    if (!eof()) fail(std::string("unexpected character '") + peek() + "'");
    return value;
  }

 private:
  LaurentPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    LaurentPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      LaurentPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        std::size_t at = ++pos_;
        LaurentPoly d = factor();
        if (d.is_zero()) fail("division by zero", at);
        if (!d.is_monomial()) fail("divisor must be a single term", at);
        acc = acc.shifted(-d.valuation()) * LaurentPoly(d.coeffs().front().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly factor() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    std::size_t start = pos_;
    char c = peek();
    LaurentPoly base;
    bool is_t = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = LaurentPoly(CycScalar(number()));
    } else if (c == '(') {
      ++pos_;
      base = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if (name == "i") {
        base = LaurentPoly(CycScalar::zeta(2));
      } else if (name == "zeta" || name == "sqrt_i") {
        base = LaurentPoly(CycScalar::zeta(1));
      } else if (name == "t") {
        if (!allow_t_) fail("variable t is not allowed here", start);
        base = LaurentPoly::t(1);
        is_t = true;
      } else {
        fail("unknown identifier '" + name + "'", start);
      }
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    std::size_t exp_at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > 100000) fail("exponent too large", exp_at);
    }
    if (negative) e = -e;
    if (is_t) return LaurentPoly::t(static_cast<int>(e));
    if (e < 0) {
      if (!base.is_monomial()) fail("negative power of a compound term", exp_at);
      CycScalar inv = base.coeffs().front().inverse();
      LaurentPoly out(1);
      for (long k = 0; k < -e; ++k) out = out * LaurentPoly(inv);
      return out.shifted(static_cast<int>(-e) * -base.valuation());
    }
    LaurentPoly out(1);
    for (long k = 0; k < e; ++k) out = out * base;
    return out;
  }

  Rational number() {
    std::size_t start = pos_;
    std::string num;
    while (std::isdigit(static_cast<unsigned char>(peek()))) num += text_[pos_++];
    std::string den = "1";
    if (peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      den.clear();
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += text_[pos_++];
    }
    mpz_class d(den);
    if (d == 0) fail("zero denominator", start);
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
  }

  std::string identifier() {
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      name += text_[pos_++];
    }
    return name;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  std::string_view text_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CycScalar parse_scalar(std::string_view text) {
  LaurentPoly p = detail::ExpressionParser(text, false).parse();
  return p.coefficient(0);
}

inline LaurentPoly parse_laurent(std::string_view text) {
  return detail::ExpressionParser(text, true).parse();
}

}  // namespace evokit
