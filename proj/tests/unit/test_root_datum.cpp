#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "kflag/error.hpp"

using namespace kflag;

namespace {

// Subword criterion: u <= w iff some subword of a reduced word of w multiplies to u.
bool subword_leq(const WeylGroup& g, const WeylElement& u, const WeylElement& w) {
  const auto& word = w.word;
  const std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    if (static_cast<int>(sub.size()) == u.length && g.from_word(sub) == u) return true;
  }
  return false;
}

int inversions(const WeylGroup& g, const WeylElement& w) {
  int n = 0;
  for (const auto& a : g.datum().positive_roots())
    if (!g.datum().is_positive_root(g.apply(w, a))) ++n;
  return n;
}

Weight apply_word(const RootDatum& d, const std::vector<int>& word, Weight x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = d.reflect(*it, x);
  return x;
}

void all_reduced_words(const WeylGroup& g, const WeylElement& w, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (w.length == 0) {
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i < g.rank(); ++i) {
    if (!g.is_left_descent(w, i)) continue;
    prefix.push_back(i);
    all_reduced_words(g, g.left_mul(i, w), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("build_root_datum examples") {
  const RootDatum a1 = build_root_datum('A', 1);
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.cartan() == CartanMatrix{{2}});

  const RootDatum a2 = build_root_datum('A', 2);
  std::set<Weight> roots(a2.positive_roots().begin(), a2.positive_roots().end());
  CHECK(roots == std::set<Weight>{Weight{2, -1}, Weight{-1, 2}, Weight{1, 1}});
  CHECK(a2.positive_roots()[2] == Weight{1, 1});  // heights increase

  CHECK(build_root_datum('G', 2).positive_roots().size() == 6);
}

TEST_CASE("positive root counts per type") {
  const std::vector<std::tuple<char, int, std::size_t>> expected{
      {'A', 1, 1},  {'A', 2, 3},  {'A', 3, 6},  {'A', 4, 10}, {'B', 2, 4},  {'B', 3, 9},
      {'C', 3, 9},  {'D', 4, 12}, {'G', 2, 6},  {'F', 4, 24}, {'E', 6, 36}, {'E', 7, 63},
      {'E', 8, 120}};
  for (auto [t, r, n] : expected) {
    CAPTURE(t);
    CAPTURE(r);
    const RootDatum d = build_root_datum(t, r);
    CHECK(d.positive_roots().size() == n);
    // Simple root j is column j of the Cartan matrix.
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) CHECK(d.simple_root(j)[i] == d.cartan()[i][j]);
    for (const auto& b : d.positive_roots_simple())
      CHECK(std::all_of(b.begin(), b.end(), [](int c) { return c >= 0; }));
  }
}

TEST_CASE("invalid types and Cartan matrices are rejected") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 0}, {'B', 1}, {'G', 3}, {'E', 5}, {'F', 3}, {'X', 2}, {'A', 9}})
    CHECK_THROWS_AS(build_root_datum(t, r), ConfigError);
  CHECK_THROWS_AS(RootDatum(CartanMatrix{{2, 1}, {-1, 2}}), ConfigError);
  CHECK_THROWS_AS(RootDatum(CartanMatrix{{2, -1}, {0, 2}}), ConfigError);
  CHECK_THROWS_AS(RootDatum(CartanMatrix{{3}}), ConfigError);
  CHECK_THROWS_AS(RootDatum(CartanMatrix{{2, -2}, {-2, 2}}), ConfigError);  // affine A1
}

TEST_CASE("Weyl group enumeration") {
  const WeylGroup a1(build_root_datum('A', 1));
  CHECK(a1.size() == 2);
  CHECK(a1[0].length == 0);
  CHECK(a1[1].length == 1);

  const WeylGroup a2(build_root_datum('A', 2));
  std::vector<int> lengths;
  for (const auto& w : a2.elements()) lengths.push_back(w.length);
  CHECK(lengths == std::vector<int>{0, 1, 1, 2, 2, 3});

  const WeylGroup b2(build_root_datum('B', 2));
  CHECK(b2.size() == 8);
  CHECK(b2.longest().length == 4);

  for (auto [t, r, n] : std::vector<std::tuple<char, int, std::size_t>>{
           {'A', 3, 24}, {'G', 2, 12}, {'B', 3, 48}, {'C', 3, 48}, {'A', 4, 120}, {'D', 4, 192}}) {
    const WeylGroup g(build_root_datum(t, r));
    CHECK(g.size() == n);
    CHECK(static_cast<std::size_t>(g.longest().length) == g.datum().positive_roots().size());
  }
  CHECK_THROWS_AS(WeylGroup(build_root_datum('A', 3), 10), BoundExceeded);
}

TEST_CASE("elements: length, key, canonical word") {
  for (auto [t, r] : testing::small_types()) {
    const WeylGroup g(build_root_datum(t, r));
    for (std::size_t k = 0; k < g.size(); ++k) {
      const WeylElement& w = g[k];
      CHECK(w.index == k);
      CHECK(w.length == inversions(g, w));
      CHECK(w.key == g.apply(w, g.datum().rho()));
      CHECK(static_cast<int>(w.word.size()) == w.length);
      CHECK(g.from_word(w.word) == w);
      std::vector<int> prefix;
      std::vector<std::vector<int>> words;
      all_reduced_words(g, w, prefix, words);
      CHECK(w.word == *std::min_element(words.begin(), words.end()));
      if (k > 0) CHECK(std::make_pair(g[k - 1].length, g[k - 1].key) < std::make_pair(w.length, w.key));
    }
  }
}

TEST_CASE("apply examples and reduced-word independence") {
  const WeylGroup a2(build_root_datum('A', 2));
  const RootDatum& d = a2.datum();
  const Weight lambda{3, -2};
  CHECK(a2.apply(a2.identity(), lambda) == lambda);
  for (int i = 0; i < 2; ++i) {
    const WeylElement& s = a2.from_word(std::vector<int>{i});
    CHECK(a2.apply(s, d.fundamental_weight(i)) == d.fundamental_weight(i) - d.simple_root(i));
    CHECK(d.reflect(i, d.reflect(i, lambda)) == lambda);
  }
  for (auto [t, r] : testing::small_types()) {
    const WeylGroup g(build_root_datum(t, r));
    CHECK(g.apply(g.longest(), g.datum().rho()) == -g.datum().rho());
    Weight probe(r);
    for (int i = 0; i < r; ++i) probe[i] = 2 * i - 1;
    for (const auto& w : g.elements()) {
      std::vector<int> prefix;
      std::vector<std::vector<int>> words;
      all_reduced_words(g, w, prefix, words);
      for (const auto& word : words) CHECK(apply_word(g.datum(), word, probe) == g.apply(w, probe));
    }
  }
}

TEST_CASE("length identities and Poincare symmetry") {
  for (auto [t, r] : testing::small_types()) {
    const WeylGroup g(build_root_datum(t, r));
    const int top = g.longest().length;
    std::vector<int> count(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& u : g.elements()) {
      ++count[static_cast<std::size_t>(u.length)];
      CHECK(g.multiply(g.longest(), u).length == top - u.length);
      CHECK(g.multiply(u, g.inverse(u)) == g.identity());
      CHECK(g.inverse(u).length == u.length);
      for (const auto& v : g.elements()) CHECK(g.multiply(u, v).length <= u.length + v.length);
    }
    for (int k = 0; k <= top; ++k)
      CHECK(count[static_cast<std::size_t>(k)] == count[static_cast<std::size_t>(top - k)]);
  }
}

TEST_CASE("Bruhat order") {
  const WeylGroup a2(build_root_datum('A', 2));
  const auto& s1 = a2.from_word(std::vector<int>{0});
  const auto& s2 = a2.from_word(std::vector<int>{1});
  CHECK_FALSE(a2.bruhat_leq(s1, s2));
  for (const auto& w : a2.elements()) {
    CHECK(a2.bruhat_leq(a2.identity(), w));
    CHECK(a2.bruhat_leq(w, w));
  }
  for (auto [t, r] : testing::small_types()) {
    CAPTURE(t);
    CAPTURE(r);
    const WeylGroup g(build_root_datum(t, r));
    for (const auto& u : g.elements())
      for (const auto& w : g.elements()) {
        const bool le = g.bruhat_leq(u, w);
        CHECK(le == subword_leq(g, u, w));
        if (le && g.bruhat_leq(w, u)) CHECK(u == w);
        if (le) {
          CHECK(u.length <= w.length);
          // w -> w_o w reverses the order
          CHECK(g.bruhat_leq(g.multiply(g.longest(), w), g.multiply(g.longest(), u)));
        }
      }
    for (const auto& a : g.elements())
      for (const auto& b : g.elements())
        if (g.bruhat_leq(a, b))
          for (const auto& c : g.elements())
            if (g.bruhat_leq(b, c)) CHECK(g.bruhat_leq(a, c));
  }
}

TEST_CASE("minimal coset representatives") {
  const WeylGroup a2(build_root_datum('A', 2));
  CHECK(a2.parabolic({}).min_reps.size() == 6);
  CHECK(a2.parabolic({}).longest_in_parabolic == a2.identity());
  CHECK(a2.parabolic({1}).min_reps.size() == 3);
  const WeylGroup a3(build_root_datum('A', 3));
  const ParabolicData gr24 = a3.parabolic({0, 2});
  CHECK(gr24.min_reps.size() == 6);
  CHECK(gr24.longest_in_parabolic.length == 2);
  CHECK_THROWS_AS(a3.parabolic({3}), ConfigError);

  for (auto [t, r] : testing::small_types()) {
    const WeylGroup g(build_root_datum(t, r));
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) subset.push_back(i);
      const ParabolicData p = g.parabolic(subset);
      // W_P: everything generated by the subset.
      std::vector<const WeylElement*> wp;
      for (const auto& x : g.elements()) {
        const bool inside = std::all_of(x.word.begin(), x.word.end(), [&](int a) {
          return std::find(subset.begin(), subset.end(), a) != subset.end();
        });
        if (inside) wp.push_back(&x);
      }
      CHECK(p.min_reps.size() * wp.size() == g.size());
      for (const auto* x : wp) CHECK(x->length <= p.longest_in_parabolic.length);
      // Unique length-additive factorization w = u x.
      for (const auto& w : g.elements()) {
        int found = 0;
        for (const auto& u : p.min_reps)
          for (const auto* x : wp)
            if (g.multiply(u, *x) == w && u.length + x->length == w.length) ++found;
        CHECK(found == 1);
      }
      // u -> w_o u w_{o,P} is an order-reversing involution of W^P.
      const auto flip = [&](const WeylElement& u) -> const WeylElement& {
        return g.multiply(g.multiply(g.longest(), u), p.longest_in_parabolic);
      };
      for (const auto& u : p.min_reps) {
        REQUIRE(p.position(flip(u)).has_value());
        CHECK(flip(flip(u)) == u);
        for (const auto& v : p.min_reps)
          if (g.bruhat_leq(u, v)) CHECK(g.bruhat_leq(flip(v), flip(u)));
      }
    }
  }
}

TEST_CASE("principal cocharacter pairs roots with their heights") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}, {'F', 4}}) {
    const RootDatum d = build_root_datum(t, r);
    const auto& k = d.principal_cocharacter();
    long long scale = 0;
    for (std::size_t a = 0; a < d.positive_roots().size(); ++a) {
      long long s = 0;
      for (int i = 0; i < r; ++i) s += d.positive_roots()[a][i] * k[static_cast<std::size_t>(i)];
      if (a == 0) scale = s;
      CHECK(s == scale * d.height(a));
      CHECK(s > 0);
    }
  }
}
