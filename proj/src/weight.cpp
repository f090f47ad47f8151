#include "kflag/weight.hpp"

#include <numeric>
#include <sstream>

#include "kflag/error.hpp"

namespace kflag {

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw ConfigError("rank out of range: " + std::to_string(rank));
}

Weight::Weight(std::initializer_list<int> coords)
    : Weight(std::span<const int>(coords.begin(), coords.size())) {}

Weight::Weight(std::span<const int> coords) : Weight(static_cast<int>(coords.size())) {
  for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
}

std::vector<int> Weight::coords() const { return {c_.begin(), c_.begin() + rank_}; }

bool Weight::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

int Weight::sum() const { return std::accumulate(c_.begin(), c_.begin() + rank_, 0); }

bool Weight::is_dominant() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] < 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (int i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Weight operator*(int k, Weight a) {
  for (int i = 0; i < a.rank_; ++i) a.c_[i] *= k;
  return a;
}

std::size_t Weight::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int i = 0; i < rank_; ++i) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c_[i]));
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

}  // namespace kflag
