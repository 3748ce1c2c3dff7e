#include "jordan/scalar/ratfunc.hpp"

#include <stdexcept>

namespace jordan {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (den_.is_one()) return;
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ *= Rational(1 / den_.constant_term());
    den_ = MultiPoly(1);
    return;
  }
  Monomial g = num_.monomial_gcd().gcd(den_.monomial_gcd());
  if (!g.is_one()) {
    MultiPoly gp(g, 1);
    num_ = *num_.divide_exact(gp);
    den_ = *den_.divide_exact(gp);
  }
  Rational lead = den_.leading_term().coeff;
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = MultiPoly(1);
  }
}

const MultiPoly& RatFunc::as_polynomial() const {
  if (!den_.is_one()) throw std::domain_error("rational function is not a polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("zero denominator");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute(Symbol s, const MultiPoly& value) const {
  if (den_.is_one()) return RatFunc(num_.substitute(s, value));
  return RatFunc(num_.substitute(s, value), den_.substitute(s, value));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace jordan
