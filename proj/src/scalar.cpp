#include "scalar.hpp"

#include <cctype>
#include <ostream>

#include "error.hpp"

namespace bce {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) throw_invalid("scalar denominator must be nonzero");
  re_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::inverse() const {
  mpq_class n = re_ * re_ + im_ * im_;
  if (n == 0) throw_invalid("division by zero scalar");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

// One signed rational: [+-]?digits(/digits)?  Consumes from pos.
mpq_class parse_rational(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) throw_invalid("malformed scalar '" + s + "'");
  std::string num = s.substr(start, pos - start);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw_invalid("malformed scalar '" + s + "'");
    den = s.substr(dstart, pos - dstart);
  }
  if (mpz_class(den) == 0)
    throw_invalid("zero denominator in scalar '" + s + "'");
  mpq_class q(num + "/" + den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw_invalid("empty scalar");

  size_t pos = 0;
  mpq_class first = parse_rational(s, pos);
  if (pos == s.size()) return Scalar(std::move(first), mpq_class(0));

  if (s.compare(pos, 2, "*i") == 0 && pos + 2 == s.size())
    return Scalar(mpq_class(0), std::move(first));

  if (s[pos] != '+' && s[pos] != '-')
    throw_invalid("malformed scalar '" + s + "'");
  mpq_class second = parse_rational(s, pos);
  if (s.compare(pos, 2, "*i") != 0 || pos + 2 != s.size())
    throw_invalid("malformed scalar '" + s + "'");
  return Scalar(std::move(first), std::move(second));
}

namespace {

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string Scalar::str() const {
  if (im_ == 0) return rational_str(re_);
  if (re_ == 0) return rational_str(im_) + "*i";
  std::string out = rational_str(re_);
  if (im_ > 0) {
    out += "+" + rational_str(im_) + "*i";
  } else {
    out += "-" + rational_str(mpq_class(-im_)) + "*i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace bce
