#include "jordan/scalar/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

int LaurentScalar::saturating_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  if (s >= kExact) return kExact;
  if (s <= -kExact) return -kExact;
  return static_cast<int>(s);
}

LaurentScalar::LaurentScalar(RatFunc c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LaurentScalar LaurentScalar::monomial(RatFunc c, int degree, int trunc) {
  return from_coeffs(degree, {std::move(c)}, trunc);
}

LaurentScalar LaurentScalar::from_coeffs(int min_deg, std::vector<RatFunc> coeffs, int trunc) {
  LaurentScalar s;
  s.min_deg_ = min_deg;
  s.coeffs_ = std::move(coeffs);
  s.trunc_ = std::min(trunc, kExact);
  s.normalize();
  return s;
}

void LaurentScalar::normalize() {
  if (!is_exact()) {
    long long keep = static_cast<long long>(trunc_) - min_deg_ + 1;
    if (keep < static_cast<long long>(coeffs_.size())) coeffs_.resize(static_cast<std::size_t>(std::max(0LL, keep)));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_deg_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_deg_ = 0;
}

RatFunc LaurentScalar::coeff(int k) const {
  if (k > trunc_) throw TruncationError("insufficient truncation: coefficient t^" + std::to_string(k) +
                                        " requested, series known through t^" + std::to_string(trunc_));
  if (coeffs_.empty() || k < min_deg_ || k > max_deg()) return RatFunc();
  return coeffs_[static_cast<std::size_t>(k - min_deg_)];
}

LaurentScalar LaurentScalar::truncated(int n) const {
  LaurentScalar r = *this;
  r.trunc_ = std::min(trunc_, n);
  r.normalize();
  return r;
}

LaurentScalar LaurentScalar::substitute(Symbol s, const MultiPoly& value) const {
  LaurentScalar r = *this;
  for (auto& c : r.coeffs_) c = c.substitute(s, value);
  r.normalize();
  return r;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  int trunc = std::min(trunc_, o.trunc_);
  if (o.coeffs_.empty()) {
    trunc_ = trunc;
    normalize();
    return *this;
  }
  if (coeffs_.empty()) {
    *this = o;
    trunc_ = trunc;
    normalize();
    return *this;
  }
  int lo = std::min(min_deg_, o.min_deg_);
  int hi = std::max(max_deg(), o.max_deg());
  if (hi > trunc) hi = trunc;
  if (hi < lo) {
    *this = zero(trunc);
    return *this;
  }
  std::vector<RatFunc> out(static_cast<std::size_t>(hi - lo + 1));
  for (int k = min_deg_; k <= std::min(max_deg(), hi); ++k)
    out[static_cast<std::size_t>(k - lo)] = std::move(coeffs_[static_cast<std::size_t>(k - min_deg_)]);
  for (int k = o.min_deg_; k <= std::min(o.max_deg(), hi); ++k)
    out[static_cast<std::size_t>(k - lo)] += o.coeffs_[static_cast<std::size_t>(k - o.min_deg_)];
  min_deg_ = lo;
  coeffs_ = std::move(out);
  trunc_ = trunc;
  normalize();
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  int trunc = std::min(LaurentScalar::saturating_add(a.trunc_, b.min_deg()),
                       LaurentScalar::saturating_add(b.trunc_, a.min_deg()));
  if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentScalar::zero(trunc);
  int lo = a.min_deg_ + b.min_deg_;
  int hi = std::min(a.max_deg() + b.max_deg(), trunc);
  if (hi < lo) return LaurentScalar::zero(trunc);
  std::vector<RatFunc> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int di = a.min_deg_ + static_cast<int>(i);
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      int d = di + b.min_deg_ + static_cast<int>(j);
      if (d > hi) break;
      if (b.coeffs_[j].is_zero()) continue;
      out[static_cast<std::size_t>(d - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentScalar::from_coeffs(lo, std::move(out), trunc);
}

LaurentScalar LaurentScalar::inverse(int order_if_exact) const {
  if (coeffs_.empty()) throw std::domain_error("cannot invert a zero series");
  int v = min_deg_;
  if (is_exact() && coeffs_.size() == 1) return monomial(coeffs_[0].inverse(), -v);
  int n = is_exact() ? order_if_exact : trunc_;
  if (n >= kExact) throw TruncationError("inverting an exact series needs a target order");
  int trunc = is_exact() ? order_if_exact : n - 2 * v;
  int len = trunc + v + 1;  // degrees -v .. trunc
  if (len <= 0) return zero(trunc);
  RatFunc inv0 = coeffs_[0].inverse();
  std::vector<RatFunc> out(static_cast<std::size_t>(len));
  out[0] = inv0;
  for (int k = 1; k < len; ++k) {
    RatFunc acc;
    for (int i = 1; i <= k && i < static_cast<int>(coeffs_.size()); ++i) {
      if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
      acc += coeffs_[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
    }
    out[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return from_coeffs(-v, std::move(out), trunc);
}

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
  int upto = std::min(a.trunc_, b.trunc_);
  int lo = std::min(a.min_deg(), b.min_deg());
  int hi = std::min(upto, std::max(a.coeffs_.empty() ? lo : a.max_deg(), b.coeffs_.empty() ? lo : b.max_deg()));
  for (int k = lo; k <= hi; ++k)
    if (!(a.coeff(k) == b.coeff(k))) return false;
  return true;
}

std::string LaurentScalar::to_string() const {
  std::ostringstream os;
  if (coeffs_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      int d = min_deg_ + static_cast<int>(i);
      os << "(" << coeffs_[i].to_string() << ")";
      if (d != 0) os << "*t^" << d;
    }
  }
  if (!is_exact()) os << " + O(t^" << trunc_ + 1 << ")";
  return os.str();
}

LaurentScalar series_exp(const MultiPoly& c, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (c.is_zero()) return LaurentScalar(1);
  std::vector<RatFunc> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  MultiPoly term(1);
  out.emplace_back(term);
  for (int k = 1; k <= order; ++k) {
    term = term * c * Rational(1, k);
    out.emplace_back(term);
  }
  return LaurentScalar::from_coeffs(0, std::move(out), order);
}

LaurentScalar series_invert(const LaurentScalar& s) { return s.inverse(); }

LaurentScalar eta_series(int order) {
  if (order < 1) throw std::invalid_argument("eta needs order >= 1");
  LaurentScalar qm1 = series_exp(MultiPoly(1), order + 2) - LaurentScalar(1);
  return (LaurentScalar(MultiPoly(Symbol::h)) * qm1.inverse()).truncated(order);
}

LaurentScalar q_integer(int n, int order) {
  // [n]_q = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}; a finite sum, no division.
  if (n < 0) return -q_integer(-n, order);
  LaurentScalar r;
  for (int k = 0; k < n; ++k) r += series_exp(MultiPoly(n - 1 - 2 * k), order);
  return r;
}

LaurentScalar q_factorial(int n, int order) {
  LaurentScalar r(1);
  for (int k = 2; k <= n; ++k) r = r * q_integer(k, order);
  return r;
}

LaurentScalar q_brace(int n, int base_power, int order) {
  LaurentScalar r;
  for (int k = 0; k < n; ++k) r += series_exp(MultiPoly(base_power * k), order);
  return r;
}

LaurentScalar q_brace_factorial(int n, int base_power, int order) {
  LaurentScalar r(1);
  for (int k = 2; k <= n; ++k) r = r * q_brace(k, base_power, order);
  return r;
}

RatFunc limit_q_to_1(const LaurentScalar& s) {
  if (!s.is_zero()) {
    for (int k = s.min_deg(); k < 0 && k <= s.trunc_order(); ++k) {
      RatFunc c = s.coeff(k);
      if (!c.is_zero())
        throw PoleError("pole survives limit: coefficient of t^" + std::to_string(k) + " is " + c.to_string());
    }
  }
  if (s.trunc_order() < 0) throw TruncationError("insufficient truncation: series known through t^" +
                                                 std::to_string(s.trunc_order()));
  return s.coeff(0);
}

}  // namespace jordan
