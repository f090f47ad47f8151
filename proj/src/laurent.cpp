#include "kflag/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kflag/error.hpp"
#include "kflag/univariate.hpp"

namespace kflag {

namespace {

bool term_less(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
  return GrlexLess{}(a.first, b.first);
}

}  // namespace

LaurentPoly LaurentPoly::constant(int rank, const Integer& c) { return monomial(Weight(rank), c); }

LaurentPoly LaurentPoly::monomial(const Weight& exponent, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus(const Weight& beta) {
  return from_terms({{Weight(beta.rank()), 1}, {beta, -1}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer LaurentPoly::coeff(const Weight& lambda) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{lambda, 0}, term_less);
  if (it != terms_.end() && it->first == lambda) return it->second;
  return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_less(*b, *a)) {
      out.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= k;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.shifted(a.terms_[0].first) * a.terms_[0].second;
  if (b.size() == 1) return a.shifted(b.terms_[0].first) * b.terms_[0].second;
  std::vector<LaurentPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) prods.emplace_back(ea + eb, ca * cb);
  return LaurentPoly::from_terms(std::move(prods));
}

LaurentPoly LaurentPoly::shifted(const Weight& shift) const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.first += shift;
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Integer mag = abs(c);
    if (e.is_zero()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << "e^" << e.str();
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly lp_neg(const LaurentPoly& a) { return -a; }

LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by zero");
  if (a.is_zero()) return {};
  const auto bt = b.terms();
  const auto& lead = bt.back();
  if (bt.size() == 1) {
    std::vector<LaurentPoly::Term> q;
    q.reserve(a.size());
    for (const auto& [e, c] : a.terms()) {
      if (c % lead.second != 0) throw NotDivisible(a.str() + " by " + b.str());
      q.emplace_back(e - lead.first, c / lead.second);
    }
    return LaurentPoly::from_terms(std::move(q));
  }

  // The quotient's trailing exponent is trail(a) - trail(b). Grlex is not a
  // well-order on Laurent exponents, so also bound each coordinate by the
  // Newton polytopes: lo_i(a) - lo_i(b) <= m_i <= hi_i(a) - hi_i(b).
  const Weight floor = a.terms().front().first - bt.front().first;
  const int n = lead.first.rank();
  std::vector<long long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long long alo = a.terms().front().first[i], ahi = alo, blo = lead.first[i], bhi = blo;
    for (const auto& [e, c] : a.terms()) alo = std::min<long long>(alo, e[i]), ahi = std::max<long long>(ahi, e[i]);
    for (const auto& [e, c] : bt) blo = std::min<long long>(blo, e[i]), bhi = std::max<long long>(bhi, e[i]);
    lo[static_cast<std::size_t>(i)] = alo - blo;
    hi[static_cast<std::size_t>(i)] = ahi - bhi;
  }
  auto in_box = [&](const Weight& m) {
    for (int i = 0; i < n; ++i)
      if (m[i] < lo[static_cast<std::size_t>(i)] || m[i] > hi[static_cast<std::size_t>(i)]) return false;
    return true;
  };
  std::map<Weight, Integer, GrlexLess> rem;
  for (const auto& [e, c] : a.terms()) rem.emplace(e, c);
  std::vector<LaurentPoly::Term> q;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Weight m = top->first - lead.first;
    if (GrlexLess{}(m, floor) || !in_box(m) || top->second % lead.second != 0)
      throw NotDivisible(a.str() + " by " + b.str());
    const Integer qc = top->second / lead.second;
    for (const auto& [e, c] : bt) {
      auto [it, fresh] = rem.try_emplace(e + m, 0);
      it->second -= qc * c;
      if (it->second == 0) rem.erase(it);
    }
    q.emplace_back(m, qc);
  }
  return LaurentPoly::from_terms(std::move(q));
}

LaurentPoly lp_involute(const LaurentPoly& a) {
  return lp_map_exponents(a, [](const Weight& w) { return -w; });
}

LaurentPoly lp_map_exponents(const LaurentPoly& a,
                             const std::function<Weight(const Weight&)>& act) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(a.size());
  for (const auto& [e, c] : a.terms()) terms.emplace_back(act(e), c);
  return LaurentPoly::from_terms(std::move(terms));
}

Integer lp_eval_at_one(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& t : a.terms()) s += t.second;
  return s;
}

UniPoly lp_specialize_cochar(const LaurentPoly& a, std::span<const long long> k) {
  if (a.is_zero()) return {};
  std::map<long long, Integer> acc;
  for (const auto& [e, c] : a.terms()) {
    if (static_cast<std::size_t>(e.rank()) != k.size())
      throw ConfigError("cocharacter length does not match rank");
    long long d = 0;
    for (int i = 0; i < e.rank(); ++i) d += static_cast<long long>(e[i]) * k[static_cast<std::size_t>(i)];
    acc[d] += c;
  }
  const long long low = acc.begin()->first;
  std::vector<Integer> coeffs(static_cast<std::size_t>(acc.rbegin()->first - low + 1));
  for (auto& [d, c] : acc) coeffs[static_cast<std::size_t>(d - low)] = std::move(c);
  return UniPoly(low, std::move(coeffs));
}

}  // namespace kflag
