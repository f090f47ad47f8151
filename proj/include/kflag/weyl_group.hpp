#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kflag/root_datum.hpp"

namespace kflag {

inline constexpr std::size_t kDefaultMaxWeyl = 10000;

/// A Weyl group element. Identified by its key w(rho); `word` is the
/// lexicographically minimal reduced word (0-based letters) and `index` the
/// position in the owning group's (length, key) ordering.
struct WeylElement {
  std::vector<int> word;
  int length = 0;
  Weight key;
  std::size_t index = 0;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.key == b.key; }
};

/// Parabolic subgroup W_P generated by `subset`, with the minimal coset
/// representatives W^P (in group order) and the longest element w_{o,P}.
struct ParabolicData {
  std::vector<int> subset;
  std::vector<WeylElement> min_reps;
  WeylElement longest_in_parabolic;

  /// Position of `w` in min_reps, if present.
  std::optional<std::size_t> position(const WeylElement& w) const;
};

/// The finite Weyl group of a root datum, fully enumerated.
///
/// Immutable after construction except for the Bruhat table, which is built
/// once on first use under std::call_once; every member is safe to call
/// concurrently.
class WeylGroup {
 public:
  explicit WeylGroup(RootDatum datum, std::size_t max_size = kDefaultMaxWeyl);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  std::size_t size() const { return elements_.size(); }

  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const WeylElement> elements() const { return elements_; }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }

  /// Product of the simple reflections in `word` (0-based letters, any word).
  const WeylElement& from_word(std::span<const int> word) const;
  std::optional<std::size_t> find(const Weight& key) const;

  const WeylElement& left_mul(int i, const WeylElement& w) const;
  const WeylElement& right_mul(const WeylElement& w, int i) const;
  const WeylElement& multiply(const WeylElement& a, const WeylElement& b) const;
  const WeylElement& inverse(const WeylElement& w) const;

  /// l(s_i w) < l(w)
  bool is_left_descent(const WeylElement& w, int i) const { return w.key[i] < 0; }
  /// l(w s_i) < l(w)
  bool is_right_descent(const WeylElement& w, int i) const;

  Weight apply(const WeylElement& w, const Weight& lambda) const;
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;

  ParabolicData parabolic(std::vector<int> subset) const;

  /// Renders a word 1-based, e.g. "s1s2" or "e".
  static std::string word_string(const WeylElement& w);

 private:
  void build_bruhat() const;

  RootDatum datum_;
  std::vector<WeylElement> elements_;
  std::unordered_map<Weight, std::size_t, WeightHash> by_key_;
  std::vector<std::vector<std::size_t>> left_;   // left_[i][w]
  std::vector<std::vector<std::size_t>> right_;  // right_[i][w]

  mutable std::once_flag bruhat_once_;
  mutable std::vector<std::uint64_t> bruhat_bits_;
};

}  // namespace kflag
