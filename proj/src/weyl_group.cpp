#include "kflag/weyl_group.hpp"

#include <algorithm>
#include <sstream>

#include "kflag/error.hpp"

namespace kflag {

std::optional<std::size_t> ParabolicData::position(const WeylElement& w) const {
  for (std::size_t k = 0; k < min_reps.size(); ++k)
    if (min_reps[k] == w) return k;
  return std::nullopt;
}

WeylGroup::WeylGroup(RootDatum datum, std::size_t max_size) : datum_(std::move(datum)) {
  const int r = datum_.rank();

  // Breadth-first by length: s_i w is longer than w iff <w(rho), alpha_i^vee> > 0.
  struct Raw {
    Weight key;
    std::vector<int> word;
  };
  std::vector<Raw> raw{{datum_.rho(), {}}};
  std::unordered_map<Weight, std::size_t, WeightHash> seen{{datum_.rho(), 0}};
  std::size_t layer_begin = 0;
  while (layer_begin < raw.size()) {
    const std::size_t layer_end = raw.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (int i = 0; i < r; ++i) {
        if (raw[k].key[i] <= 0) continue;
        Weight key = datum_.reflect(i, raw[k].key);
        if (seen.contains(key)) continue;
        std::vector<int> word{i};
        word.insert(word.end(), raw[k].word.begin(), raw[k].word.end());
        seen.emplace(key, raw.size());
        raw.push_back({key, std::move(word)});
        if (raw.size() > max_size)
          throw BoundExceeded("Weyl group of " + datum_.label() + " exceeds the bound of " +
                              std::to_string(max_size) + " elements");
      }
    }
    layer_begin = layer_end;
  }

  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.key < b.key;
  });
  elements_.resize(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    elements_[k].key = raw[k].key;
    elements_[k].length = static_cast<int>(raw[k].word.size());
    elements_[k].index = k;
    by_key_.emplace(raw[k].key, k);
  }

  left_.assign(static_cast<std::size_t>(r), std::vector<std::size_t>(size()));
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < size(); ++k)
      left_[static_cast<std::size_t>(i)][k] = by_key_.at(datum_.reflect(i, elements_[k].key));

  // Lexicographically minimal reduced words: smallest left descent first.
  for (std::size_t k = 1; k < size(); ++k) {
    int i = 0;
    while (elements_[k].key[i] >= 0) ++i;
    const auto& rest = elements_[left_[static_cast<std::size_t>(i)][k]].word;
    elements_[k].word.reserve(rest.size() + 1);
    elements_[k].word.push_back(i);
    elements_[k].word.insert(elements_[k].word.end(), rest.begin(), rest.end());
  }

  // w s_i has key w(rho - alpha_i) = w(rho) - w(alpha_i).
  right_.assign(static_cast<std::size_t>(r), std::vector<std::size_t>(size()));
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < size(); ++k)
      right_[static_cast<std::size_t>(i)][k] =
          by_key_.at(elements_[k].key - apply(elements_[k], datum_.simple_root(i)));
}

const WeylElement& WeylGroup::from_word(std::span<const int> word) const {
  std::size_t cur = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank())
      throw ConfigError("simple reflection index " + std::to_string(*it + 1) + " out of range");
    cur = left_[static_cast<std::size_t>(*it)][cur];
  }
  return elements_[cur];
}

std::optional<std::size_t> WeylGroup::find(const Weight& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

const WeylElement& WeylGroup::left_mul(int i, const WeylElement& w) const {
  return elements_[left_[static_cast<std::size_t>(i)][w.index]];
}

const WeylElement& WeylGroup::right_mul(const WeylElement& w, int i) const {
  return elements_[right_[static_cast<std::size_t>(i)][w.index]];
}

const WeylElement& WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  std::size_t cur = b.index;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
    cur = left_[static_cast<std::size_t>(*it)][cur];
  return elements_[cur];
}

const WeylElement& WeylGroup::inverse(const WeylElement& w) const {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return from_word(rev);
}

bool WeylGroup::is_right_descent(const WeylElement& w, int i) const {
  return right_mul(w, i).length < w.length;
}

Weight WeylGroup::apply(const WeylElement& w, const Weight& lambda) const {
  Weight out = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = datum_.reflect(*it, out);
  return out;
}

void WeylGroup::build_bruhat() const {
  const std::size_t n = size();
  const std::size_t words = (n * n + 63) / 64;
  bruhat_bits_.assign(words, 0);
  auto get = [&](std::size_t u, std::size_t w) {
    const std::size_t bit = w * n + u;
    return (bruhat_bits_[bit / 64] >> (bit % 64)) & 1u;
  };
  auto set = [&](std::size_t u, std::size_t w) {
    const std::size_t bit = w * n + u;
    bruhat_bits_[bit / 64] |= std::uint64_t{1} << (bit % 64);
  };
  set(0, 0);
  // Lifting property, in order of increasing length so s_i w is already done.
  for (std::size_t w = 1; w < n; ++w) {
    int i = 0;
    while (elements_[w].key[i] >= 0) ++i;
    const std::size_t sw = left_[static_cast<std::size_t>(i)][w];
    for (std::size_t u = 0; u < n; ++u) {
      if (elements_[u].length > elements_[w].length) break;
      const std::size_t su = left_[static_cast<std::size_t>(i)][u];
      const bool leq = elements_[u].key[i] < 0 ? get(su, sw) : get(u, sw);
      if (leq) set(u, w);
    }
  }
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
  std::call_once(bruhat_once_, [this] { build_bruhat(); });
  const std::size_t bit = w.index * size() + u.index;
  return (bruhat_bits_[bit / 64] >> (bit % 64)) & 1u;
}

ParabolicData WeylGroup::parabolic(std::vector<int> subset) const {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int i : subset)
    if (i < 0 || i >= rank())
      throw ConfigError("parabolic index " + std::to_string(i + 1) + " out of range");

  ParabolicData p;
  p.subset = subset;
  for (const auto& w : elements_) {
    bool minimal = true;
    for (int i : subset) minimal = minimal && !is_right_descent(w, i);
    if (minimal) p.min_reps.push_back(w);
  }
  std::vector<std::size_t> sub{0};
  std::vector<bool> in(size(), false);
  in[0] = true;
  for (std::size_t k = 0; k < sub.size(); ++k)
    for (int i : subset) {
      const std::size_t nx = right_[static_cast<std::size_t>(i)][sub[k]];
      if (!in[nx]) {
        in[nx] = true;
        sub.push_back(nx);
      }
    }
  std::size_t best = 0;
  for (std::size_t x : sub)
    if (elements_[x].length > elements_[best].length) best = x;
  p.longest_in_parabolic = elements_[best];
  return p;
}

std::string WeylGroup::word_string(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::ostringstream os;
  for (int i : w.word) os << 's' << (i + 1);
  return os.str();
}

}  // namespace kflag
