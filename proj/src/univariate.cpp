#include "kflag/univariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kflag/error.hpp"

namespace kflag {

namespace {

using Dense = std::vector<Integer>;  // coefficient of t^k at position k

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  const Integer g = dense_content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
}

// Pseudo-remainder of a by b (b nonzero), trimmed.
Dense pseudo_rem(Dense a, const Dense& b) {
  const std::size_t n = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= n) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= n; ++k) a[shift + k] -= la * b[k];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

UniPoly::UniPoly(long long low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::constant(const Integer& c) { return UniPoly(0, {c}); }

UniPoly UniPoly::monomial(long long exponent, const Integer& c) { return UniPoly(exponent, {c}); }

void UniPoly::normalize() {
  trim(coeffs_);
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    low_ += static_cast<long long>(lead_zeros);
  }
  if (coeffs_.empty()) low_ = 0;
}

Integer UniPoly::coeff(long long exponent) const {
  if (exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

bool UniPoly::is_unit() const { return coeffs_.size() == 1 && abs(coeffs_[0]) == 1; }

Integer UniPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Integer UniPoly::content() const { return dense_content(coeffs_); }

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long long lo = std::min(low_, o.low_);
  const long long hi = std::max(high(), o.high());
  Dense out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    out[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Dense out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.low_ + b.low_, std::move(out));
}

UniPoly UniPoly::divided_by(const Integer& d) const {
  UniPoly r(*this);
  for (auto& c : r.coeffs_) {
    if (c % d != 0) throw NotDivisible("coefficient " + c.str() + " by " + d.str());
    c /= d;
  }
  return r;
}

UniPoly UniPoly::shifted(long long k) const {
  UniPoly r(*this);
  if (!r.is_zero()) r.low_ += k;
  return r;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    os << abs(c);
    const long long e = low_ + static_cast<long long>(k);
    if (e != 0) os << "*t^" << e;
  }
  return os.str();
}

UniPoly uni_exact_div(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by zero");
  if (a.is_zero()) return {};
  // Both have nonzero constant term after removing the unit t^low.
  Dense r = a.coeffs();
  const Dense& d = b.coeffs();
  if (r.size() < d.size()) throw NotDivisible(a.str() + " by " + b.str());
  const std::size_t n = d.size() - 1;
  Dense q(r.size() - n);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer& top = r[i + n];
    if (top % d.back() != 0) throw NotDivisible(a.str() + " by " + b.str());
    q[i] = top / d.back();
    if (q[i] == 0) continue;
    for (std::size_t k = 0; k <= n; ++k) r[i + k] -= q[i] * d[k];
  }
  for (const auto& c : r)
    if (c != 0) throw NotDivisible(a.str() + " by " + b.str());
  return UniPoly(a.low() - b.low(), std::move(q));
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Dense x = a.coeffs();
  Dense y = b.coeffs();
  const Integer c = gcd(dense_content(x), dense_content(y));
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  if (x.back() < 0)
    for (auto& v : x) v = -v;
  for (auto& v : x) v *= c;
  return UniPoly(0, std::move(x));
}

UniRational::UniRational(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  reduce();
}

void UniRational::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  const UniPoly g = uni_gcd(num_, den_);
  if (!g.is_unit()) {
    num_ = uni_exact_div(num_, g);
    den_ = uni_exact_div(den_, g);
  }
  const long long s = den_.low();
  num_ = num_.shifted(-s);
  den_ = den_.shifted(-s);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

UniRational& UniRational::operator+=(const UniRational& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  const UniPoly g = uni_gcd(den_, o.den_);
  const UniPoly mine = uni_exact_div(den_, g);
  const UniPoly theirs = uni_exact_div(o.den_, g);
  num_ = num_ * theirs + o.num_ * mine;
  den_ = den_ * theirs;
  reduce();
  return *this;
}

Integer unirational_sum_and_evaluate_at_one(std::span<const std::pair<UniPoly, UniPoly>> terms) {
  UniRational total;
  for (const auto& [n, d] : terms) {
    if (d.is_zero()) throw PoleAtOne();
    total += UniRational(n, d);
  }
  const UniPoly& den = total.denominator();
  if (den.is_unit()) return total.numerator().eval_at_one() * den.leading();
  if (den.eval_at_one() == 0) throw PoleAtOne();
  throw IntegrityError("Euler characteristic sum is not a Laurent polynomial: (" +
                       total.numerator().str() + ") / (" + den.str() + ")");
}

}  // namespace kflag
