#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace apkit {

// All counting in this library is exact. ExactInt never overflows and
// ExactRat never rounds; there is no floating-point path anywhere.
using ExactInt = boost::multiprecision::cpp_int;

// Rational number kept in lowest terms with a positive denominator.
// Zero is stored as 0/1. A value may be demoted to ExactInt only when the
// denominator is 1 (to_integer throws otherwise).
class ExactRat {
public:
  ExactRat() = default;
  ExactRat(ExactInt n) : num_(std::move(n)) {}  // NOLINT: implicit by design
  ExactRat(long long n) : num_(n) {}            // NOLINT
  ExactRat(int n) : num_(n) {}                  // NOLINT

  ExactRat(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("ExactRat: zero denominator");
    normalize();
  }

  const ExactInt& num() const { return num_; }
  const ExactInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  ExactInt to_integer() const {
    if (den_ != 1)
      throw std::domain_error("ExactRat: " + to_string() + " is not an integer");
    return num_;
  }

  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend ExactRat operator-(const ExactRat& a) { return raw(-a.num_, a.den_); }

  friend ExactRat operator+(const ExactRat& a, const ExactRat& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend ExactRat operator-(const ExactRat& a, const ExactRat& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend ExactRat operator*(const ExactRat& a, const ExactRat& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend ExactRat operator/(const ExactRat& a, const ExactRat& b) {
    if (b.num_ == 0) throw std::domain_error("ExactRat: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  ExactRat& operator+=(const ExactRat& b) { return *this = *this + b; }
  ExactRat& operator-=(const ExactRat& b) { return *this = *this - b; }
  ExactRat& operator*=(const ExactRat& b) { return *this = *this * b; }
  ExactRat& operator/=(const ExactRat& b) { return *this = *this / b; }

  // Lowest-terms representation is canonical, so equality is field-wise.
  friend bool operator==(const ExactRat& a, const ExactRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ExactRat& a, const ExactRat& b) { return !(a == b); }
  friend bool operator<(const ExactRat& a, const ExactRat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRat& r);

private:
  static ExactRat raw(ExactInt num, ExactInt den) {
    ExactRat r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    using boost::multiprecision::gcd;
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    ExactInt g = gcd(abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  ExactInt num_{0};
  ExactInt den_{1};
};

}  // namespace apkit
