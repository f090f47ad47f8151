#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kflag/laurent.hpp"

namespace kflag {

/// Univariate Laurent polynomial sum_k c_k t^k, stored densely from the lowest
/// exponent. Leading and trailing coefficients are nonzero unless zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long long low, std::vector<Integer> coeffs);
  static UniPoly constant(const Integer& c);
  static UniPoly monomial(long long exponent, const Integer& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long long low() const { return low_; }
  long long high() const { return low_ + static_cast<long long>(coeffs_.size()) - 1; }
  /// Degree span high - low (zero for monomials).
  long long span() const { return static_cast<long long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(long long exponent) const;
  const Integer& leading() const { return coeffs_.back(); }

  bool is_unit() const;
  Integer eval_at_one() const;
  Integer content() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  /// Divides every coefficient by d, which must divide all of them.
  UniPoly divided_by(const Integer& d) const;
  UniPoly shifted(long long k) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
  std::string str() const;

 private:
  void normalize();
  long long low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Exact quotient in Z[t, 1/t]; throws NotDivisible otherwise.
UniPoly uni_exact_div(const UniPoly& a, const UniPoly& b);

/// Greatest common divisor in Z[t, 1/t], normalized to have lowest exponent 0
/// and positive leading coefficient. gcd(0, 0) = 0.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

/// Reduced fraction of univariate Laurent polynomials.
class UniRational {
 public:
  UniRational() : num_(), den_(UniPoly::constant(1)) {}
  /// Throws std::invalid_argument if den is zero.
  UniRational(UniPoly num, UniPoly den);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  UniRational& operator+=(const UniRational& o);
  friend UniRational operator+(UniRational a, const UniRational& b) { return a += b; }

 private:
  void reduce();
  UniPoly num_;
  UniPoly den_;
};

/// Exact sum of numerator/denominator pairs; requires the reduced sum to be a
/// Laurent polynomial and returns its value at t = 1. Throws PoleAtOne when
/// the reduced denominator vanishes at 1, IntegrityError if the sum is some
/// other non-polynomial fraction.
Integer unirational_sum_and_evaluate_at_one(std::span<const std::pair<UniPoly, UniPoly>> terms);

}  // namespace kflag
