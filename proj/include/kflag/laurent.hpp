#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kflag/weight.hpp"

namespace kflag {

using Integer = boost::multiprecision::cpp_int;

class UniPoly;

/// Element of the representation ring R(T): a finite sum of c_lambda e^lambda
/// with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted increasingly in GrlexLess order with no zero
/// coefficient; the zero polynomial has no terms.
class LaurentPoly {
 public:
  using Term = std::pair<Weight, Integer>;

  LaurentPoly() = default;
  static LaurentPoly constant(int rank, const Integer& c);
  static LaurentPoly monomial(const Weight& exponent, const Integer& c = 1);
  /// 1 - e^beta
  static LaurentPoly one_minus(const Weight& beta);
  /// Builds from arbitrary terms, combining duplicates and dropping zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  /// Coefficient of e^lambda (zero if absent).
  Integer coeff(const Weight& lambda) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& k) { return a *= k; }
  LaurentPoly operator-() const;
  /// Multiplication by the monomial e^shift.
  LaurentPoly shifted(const Weight& shift) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);

/// Exact quotient a / b by leading-term elimination in grlex order.
/// Throws NotDivisible when b does not divide a in R(T), or when b is zero.
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// e^lambda -> e^{-lambda}
LaurentPoly lp_involute(const LaurentPoly& a);

/// Replaces every exponent lambda by act(lambda); `act` must be a lattice
/// automorphism (e.g. a Weyl group element).
LaurentPoly lp_map_exponents(const LaurentPoly& a, const std::function<Weight(const Weight&)>& act);

/// Sum of coefficients: the specialization e^lambda -> 1.
Integer lp_eval_at_one(const LaurentPoly& a);

/// e^lambda -> t^{<lambda, k>} with <lambda, k> = sum_i lambda_i k_i.
UniPoly lp_specialize_cochar(const LaurentPoly& a, std::span<const long long> k);

}  // namespace kflag
