#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kflag {

inline constexpr int kMaxRank = 8;

/// An element of the weight lattice in fundamental-weight coordinates.
///
/// Fixed capacity so that weights can serve as exponent vectors of Laurent
/// polynomials without heap allocation.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<int> coords);
  explicit Weight(std::span<const int> coords);

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  std::vector<int> coords() const;
  bool is_zero() const;
  int sum() const;
  bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.c_ <=> b.c_;
  }

  std::size_t hash() const;
  std::string str() const;

 private:
  std::array<std::int32_t, kMaxRank> c_{};
  std::int32_t rank_ = 0;
};

/// Graded lexicographic order: total degree first, then lexicographic.
/// Translation invariant, so it is a group order on the lattice.
struct GrlexLess {
  bool operator()(const Weight& a, const Weight& b) const {
    const int da = a.sum();
    const int db = b.sum();
    if (da != db) return da < db;
    return a < b;
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace kflag
