#ifndef POLARFOL_RATIONAL_HPP
#define POLARFOL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polarfol {

/// Error type for contract violations across the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. All operators are eager (they
/// return Scalar, never a GMP expression template), so `auto` is safe on
/// arithmetic results anywhere downstream.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(int n) : v_(n) {}
  Scalar(long n) : v_(static_cast<signed long>(n)) {}
  Scalar(long long n) : v_(std::to_string(n)) {}
  explicit Scalar(const mpz_class& n) : v_(n) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  Scalar(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Scalar: zero denominator");
    v_.canonicalize();
  }

  /// Parses "p/q" or "p" (optionally signed). Throws on malformed input.
  static Scalar from_string(std::string_view s) {
    mpq_class q;
    if (s.empty() || q.set_str(std::string(s), 10) != 0)
      throw Error("Scalar: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw Error("Scalar: zero denominator");
    q.canonicalize();
    return Scalar(std::move(q));
  }

  /// Renders as "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Scalar abs() const { return Scalar(mpq_class(::abs(v_))); }
  Scalar inverse() const {
    if (is_zero()) throw Error("Scalar: division by zero");
    return Scalar(mpq_class(1 / v_));
  }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }

  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_; }

 private:
  mpq_class v_;
};

}  // namespace polarfol

#endif  // POLARFOL_RATIONAL_HPP
