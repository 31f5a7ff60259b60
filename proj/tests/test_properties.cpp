#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taureg/ar.hpp"
#include "taureg/fixtures.hpp"
#include "taureg/presentation.hpp"

#include <algorithm>

using namespace taureg;
using Q = Rational;

namespace {

struct ModulusGuard {
  std::uint64_t saved = Fp::modulus();
  explicit ModulusGuard(std::uint64_t p) { Fp::set_modulus(p); }
  ~ModulusGuard() { Fp::set_modulus(saved); }
};

template <typename S>
S small(Rng& rng, long long lo, long long hi) {
  return FieldTraits<S>::from_rational(Q(rng.uniform(lo, hi)));
}

template <typename S>
Matrix<S> random_invertible(int n, Rng& rng) {
  while (true) {
    Matrix<S> g(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) g(i, j) = small<S>(rng, -3, 3);
    if (is_invertible<S>(g)) return g;
  }
}

template <typename S>
Representation<S> scramble(const Representation<S>& m, Rng& rng) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix<S>> g, gi;
  for (int v = 0; v < m.num_vertices(); ++v) {
    g.push_back(random_invertible<S>(m.dim(v), rng));
    gi.push_back(inverse<S>(g.back()));
  }
  std::vector<Matrix<S>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrows[static_cast<std::size_t>(a)];
    maps.push_back(g[static_cast<std::size_t>(ar.target)] * m.arrow_map(a) * gi[static_cast<std::size_t>(ar.source)]);
  }
  return make_representation(m.algebra(), m.dims(), std::move(maps));
}

template <typename S>
Morphism<S> random_map(const AlgebraPtr<S>& a, Rng& rng) {
  const int n = a->num_vertices();
  auto summands = [&](int lo) {
    std::vector<int> s;
    const int k = static_cast<int>(rng.uniform(lo, 2));
    for (int i = 0; i < k; ++i) s.push_back(static_cast<int>(rng.uniform(0, n - 1)));
    std::sort(s.begin(), s.end());
    return s;
  };
  const auto p0 = projective_sum(a, summands(1));
  const auto p1 = projective_sum(a, summands(0));
  const auto basis = hom_basis(p1, p0);
  std::vector<S> c;
  for (std::size_t k = 0; k < basis.size(); ++k) c.push_back(rng.uniform(0, 2) == 0 ? S(0) : small<S>(rng, -2, 2));
  return linear_combination(basis, c, p1, p0);
}

template <typename S>
Representation<S> random_module(const AlgebraPtr<S>& a, Rng& rng) {
  while (true) {
    Representation<S> m;
    if (rng.uniform(0, 1) == 0) {
      const auto d = dual(cokernel(random_map(a->opposite(), rng)).target);
      m = Representation<S>(a, d.dims(), d.arrow_maps());
    } else {
      m = cokernel(random_map(a, rng)).target;
    }
    if (m.total_dim() >= 1 && m.total_dim() <= 8) return scramble(m, rng);
  }
}

template <typename S>
void module_properties(const std::string& name, std::uint64_t seed, int count) {
  const auto a = fixture_algebra<S>(name);
  const int n = a->num_vertices();
  Rng rng(seed);
  std::vector<Representation<S>> mods;
  for (int k = 0; k < count; ++k) mods.push_back(random_module(a, rng));
  for (const auto& m : mods) {
    CAPTURE(name);
    for (int i = 0; i < n; ++i) {
      CHECK(hom_dim(projective(a, i), m) == m.dim(i));
      CHECK(hom_dim(m, injective(a, i)) == m.dim(i));
      CHECK(ext1_dim(projective(a, i), m) == 0);
      CHECK(ext1_dim(m, injective(a, i)) == 0);
    }
    const auto t = tau(m);
    CHECK((t.total_dim() == 0) == is_projective(m));
    CHECK((tau_minus(m).total_dim() == 0) == is_injective(m));
    const auto dd = dual(dual(m));
    for (int k = 0; k < a->num_arrows(); ++k) CHECK(dd.arrow_map(k) == m.arrow_map(k));
    CHECK(hom_dim(m, m) >= 1);
    const auto cover = projective_cover(m);
    CHECK(rank_of(cover) == m.total_dim());
    CHECK(cover.source.total_dim() == m.total_dim() + syzygy(m).source.total_dim());
    const auto h = hierarchy_report(m, 4, seed, 6, false);
    CHECK(h.violations.empty());
  }
  for (std::size_t k = 0; k + 1 < mods.size(); ++k) {
    const auto& m = mods[k];
    const auto& x = mods[k + 1];
    CHECK(ar_formula_check(m, x));
    CHECK(ar_formula_check(x, m));
    CHECK(hom_dim(direct_sum(std::vector<Representation<S>>{m, x}), x) == hom_dim(m, x) + hom_dim(x, x));
    CHECK(ext1_dim(m, direct_sum(std::vector<Representation<S>>{x, m})) == ext1_dim(m, x) + ext1_dim(m, m));
  }
}

}  // namespace

TEST_CASE("random modules over Q") {
  std::uint64_t seed = 100;
  for (const auto& name : fixture_names()) module_properties<Q>(name, seed++, 10);
}

TEST_CASE("random modules over F_101") {
  ModulusGuard g(101);
  std::uint64_t seed = 200;
  for (const auto& name : fixture_names()) module_properties<Fp>(name, seed++, 10);
}

TEST_CASE("random modules over F_2") {
  ModulusGuard g(2);
  std::uint64_t seed = 300;
  for (const auto& name : fixture_names()) module_properties<Fp>(name, seed++, 6);
}

TEST_CASE("scans are superadditive and bounded") {
  for (const auto& name : fixture_names()) {
    const auto a = fixture_algebra<Q>(name);
    const int n = a->num_vertices();
    Rng rng(7);
    for (int k = 0; k < 6; ++k) {
      ProjDecomp p1 = ProjDecomp::zero(n), p0 = ProjDecomp::zero(n);
      for (int v = 0; v < n; ++v) {
        p1.mult[static_cast<std::size_t>(v)] = static_cast<int>(rng.uniform(0, 1));
        p0.mult[static_cast<std::size_t>(v)] = static_cast<int>(rng.uniform(0, 1));
      }
      const auto s = additivity_scan(a, p1, p0, 3, 6, 11);
      const int cap = std::min(realize(a, p1).total_dim(), realize(a, p0).total_dim());
      for (std::size_t t = 0; t < s.r.size(); ++t) {
        CAPTURE(name);
        CHECK(s.r[t] <= s.upper_bounds[t]);
        CHECK(s.r[t] <= static_cast<int>(t + 1) * cap);
        if (t > 0) CHECK(s.r[t] >= s.r[t - 1] + s.r[0]);
        const bool flagged = std::find(s.violations.begin(), s.violations.end(), static_cast<int>(t + 1)) != s.violations.end();
        CHECK(flagged == (s.r[t] > static_cast<int>(t + 1) * s.r[0]));
      }
    }
  }
}
