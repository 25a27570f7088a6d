#include "gbcert/rational.hpp"

#include <ostream>

#include "gbcert/errors.hpp"

namespace gbcert {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error(Errc::ZeroDenominator, num.get_str() + "/0");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroDenominator, "inverse of zero");
  mpq_class v = 1 / value_;
  return Rational(std::move(v));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::ZeroDenominator, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace gbcert
