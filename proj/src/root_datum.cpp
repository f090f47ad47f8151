#include "kflag/root_datum.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <set>

#include "kflag/error.hpp"

namespace kflag {

namespace {

constexpr std::size_t kMaxRoots = 4096;

void validate_cartan(const CartanMatrix& a) {
  const std::size_t r = a.size();
  if (r == 0 || r > static_cast<std::size_t>(kMaxRank))
    throw ConfigError("Cartan matrix rank must be between 1 and " + std::to_string(kMaxRank));
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].size() != r) throw ConfigError("Cartan matrix is not square");
    if (a[i][i] != 2) throw ConfigError("Cartan matrix diagonal entries must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw ConfigError("Cartan matrix off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw ConfigError("Cartan matrix zero pattern must be symmetric");
    }
  }
}

// Solves A^T k = c (1,...,1) and scales to the smallest positive integer vector.
std::vector<long long> principal_cochar(const CartanMatrix& a) {
  using boost::multiprecision::cpp_rational;
  using boost::multiprecision::cpp_int;
  const std::size_t r = a.size();
  std::vector<std::vector<cpp_rational>> m(r, std::vector<cpp_rational>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = a[j][i];
    m[i][r] = 1;
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && m[piv][col] == 0) ++piv;
    if (piv == r) throw ConfigError("Cartan matrix is singular");
    std::swap(m[col], m[piv]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const cpp_rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<cpp_rational> k(r);
  cpp_int den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    k[i] = m[i][r] / m[i][i];
    const cpp_int d = denominator(k[i]);
    den = den / gcd(den, d) * d;
  }
  std::vector<cpp_int> ints(r);
  cpp_int g = 0;
  for (std::size_t i = 0; i < r; ++i) {
    ints[i] = numerator(cpp_rational(k[i] * den));
    g = gcd(g, ints[i]);
  }
  std::vector<long long> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    out[i] = static_cast<long long>(ints[i] / g);
    if (out[i] <= 0) throw ConfigError("Cartan matrix is not of finite type");
  }
  return out;
}

}  // namespace

RootDatum::RootDatum(CartanMatrix cartan, std::string label)
    : rank_(static_cast<int>(cartan.size())), cartan_(std::move(cartan)), label_(std::move(label)) {
  validate_cartan(cartan_);
  const auto r = static_cast<std::size_t>(rank_);

  auto to_weight = [&](const std::vector<int>& simple) {
    Weight w(rank_);
    for (std::size_t i = 0; i < r; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < r; ++j) s += cartan_[i][j] * simple[j];
      w[static_cast<int>(i)] = s;
    }
    return w;
  };

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<int> e(r, 0);
    e[j] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (std::size_t i = 0; i < r; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < r; ++j) pairing += cartan_[i][j] * beta[j];
        if (pairing == 0) continue;
        std::vector<int> img = beta;
        img[i] -= pairing;
        if (std::any_of(img.begin(), img.end(), [](int c) { return c < 0; })) continue;
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    if (seen.size() > kMaxRoots) throw ConfigError("Cartan matrix is not of finite type");
    frontier = std::move(next);
  }

  roots_simple_.assign(seen.begin(), seen.end());
  std::stable_sort(roots_simple_.begin(), roots_simple_.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
  for (const auto& b : roots_simple_) roots_.push_back(to_weight(b));

  for (std::size_t j = 0; j < r; ++j) {
    std::vector<int> e(r, 0);
    e[j] = 1;
    simple_.push_back(to_weight(e));
  }
  rho_ = Weight(rank_);
  for (int i = 0; i < rank_; ++i) rho_[i] = 1;
  principal_cochar_ = principal_cochar(cartan_);
}

int RootDatum::height(std::size_t root) const {
  const auto& b = roots_simple_.at(root);
  return std::accumulate(b.begin(), b.end(), 0);
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w(rank_);
  w[i] = 1;
  return w;
}

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  const int li = lambda[i];
  if (li == 0) return lambda;
  Weight out = lambda;
  const auto& a = simple_[static_cast<std::size_t>(i)];
  for (int k = 0; k < rank_; ++k) out[k] -= li * a[k];
  return out;
}

bool RootDatum::is_positive_root(const Weight& w) const {
  return std::find(roots_.begin(), roots_.end(), w) != roots_.end();
}

bool RootDatum::is_root(const Weight& w) const {
  return is_positive_root(w) || is_positive_root(-w);
}

CartanMatrix cartan_matrix(char type, int n) {
  auto bad = [&] {
    return ConfigError(std::string("invalid root system type ") + type + std::to_string(n));
  };
  if (n < 1 || n > kMaxRank) throw bad();
  CartanMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
  auto chain = [&](int len) {
    for (int i = 0; i < n; ++i) set(i, i, 2);
    for (int i = 0; i + 1 < len; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  switch (type) {
    case 'A':
    case 'a':
      chain(n);
      break;
    case 'B':
    case 'b':
      if (n < 2) throw bad();
      chain(n);
      set(n - 1, n - 2, -2);
      break;
    case 'C':
    case 'c':
      if (n < 2) throw bad();
      chain(n);
      set(n - 2, n - 1, -2);
      break;
    case 'D':
    case 'd':
      if (n < 3) throw bad();
      chain(n - 1);
      set(n - 1, n - 1, 2);
      set(n - 3, n - 1, -1);
      set(n - 1, n - 3, -1);
      break;
    case 'E':
    case 'e':
      if (n < 6 || n > 8) throw bad();
      for (int i = 0; i < n; ++i) set(i, i, 2);
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {1, 3}}) {
        set(i, j, -1);
        set(j, i, -1);
      }
      for (int i = 3; i + 1 < n; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      break;
    case 'F':
    case 'f':
      if (n != 4) throw bad();
      chain(4);
      set(2, 1, -2);
      break;
    case 'G':
    case 'g':
      if (n != 2) throw bad();
      chain(2);
      set(0, 1, -3);
      break;
    default:
      throw bad();
  }
  return a;
}

RootDatum build_root_datum(char type, int rank) {
  const char upper = static_cast<char>(type >= 'a' ? type - 'a' + 'A' : type);
  return RootDatum(cartan_matrix(type, rank), std::string(1, upper) + std::to_string(rank));
}

}  // namespace kflag
