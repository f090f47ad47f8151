#pragma once

#include <span>
#include <string>
#include <vector>

#include "kflag/weight.hpp"

namespace kflag {

/// Square integer matrix, row-major. Entry (i, j) is <alpha_i^vee, alpha_j>, so
/// column j holds the fundamental-weight coordinates of the simple root alpha_j.
using CartanMatrix = std::vector<std::vector<int>>;

/// Root system data for a finite crystallographic Cartan matrix.
///
/// Simple reflections are indexed from 0 internally; words exchanged with
/// users (CLI, JSON, Python) are 1-based.
class RootDatum {
 public:
  /// Validates the Cartan matrix and enumerates positive roots by closure
  /// under simple reflections. Throws ConfigError for invalid or infinite
  /// type input.
  explicit RootDatum(CartanMatrix cartan, std::string label = "custom");

  int rank() const { return rank_; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::string& label() const { return label_; }

  /// Positive roots in fundamental-weight coordinates, ordered by height.
  std::span<const Weight> positive_roots() const { return roots_; }
  /// Same roots in simple-root coordinates (all entries nonnegative).
  const std::vector<std::vector<int>>& positive_roots_simple() const { return roots_simple_; }
  int height(std::size_t root) const;

  const Weight& simple_root(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  Weight fundamental_weight(int i) const;
  const Weight& rho() const { return rho_; }
  Weight zero() const { return Weight(rank_); }

  /// s_i(lambda) = lambda - lambda_i alpha_i.
  Weight reflect(int i, const Weight& lambda) const;

  bool is_root(const Weight& w) const;
  bool is_positive_root(const Weight& w) const;

  /// The cocharacter pairing every positive root to a positive multiple of its
  /// height: k_i is the smallest positive integer multiple of <omega_i, rho^vee>.
  const std::vector<long long>& principal_cocharacter() const { return principal_cochar_; }

 private:
  int rank_;
  CartanMatrix cartan_;
  std::string label_;
  std::vector<Weight> simple_;
  std::vector<Weight> roots_;
  std::vector<std::vector<int>> roots_simple_;
  Weight rho_;
  std::vector<long long> principal_cochar_;
};

/// Standard Cartan matrix for type letter in {A,...,G} (Bourbaki numbering).
CartanMatrix cartan_matrix(char type, int rank);

RootDatum build_root_datum(char type, int rank);

}  // namespace kflag
