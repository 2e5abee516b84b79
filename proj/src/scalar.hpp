#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace bce {

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
// All engine arithmetic runs over this field; there is no floating point
// anywhere downstream.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}
  Scalar(long num, long den);
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  // Parses the canonical text syntax: `a/b`, `a/b+c/d*i`, `a/b-c/d*i`,
  // `c/d*i`; denominators optional (default 1) and must be positive.
  // Whitespace is ignored. Throws Error(InvalidInput) on malformed text.
  static Scalar parse(std::string_view text);

  // Canonical printer, inverse of parse. Reduced fractions, positive
  // denominators, denominator 1 omitted, zero imaginary part omitted.
  std::string str() const;

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws on division by zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bce
