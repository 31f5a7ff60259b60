#include "taureg/paper_examples.hpp"

#include "taureg/ar.hpp"
#include "taureg/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace taureg {

namespace {

using Q = Rational;
using Rep = Representation<Q>;
using Mor = Morphism<Q>;

// Collects failed expectations; the detail line lists the first few.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename T>
  void equal(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << show(got) << ", expected " << show(want);
      failures.push_back(os.str());
    }
  }
  template <typename T>
  static std::string show(const T& x) {
    std::ostringstream os;
    if constexpr (std::is_same_v<T, std::vector<int>>) {
      os << '(';
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
      os << ')';
    } else if constexpr (std::is_same_v<T, ProjDim>) {
      os << x.str();
    } else {
      os << x;
    }
    return os.str();
  }
};

std::string dims_string(const std::vector<int>& d) { return Check::show(d); }

Rep sum(std::vector<Rep> parts) { return direct_sum(parts); }

// f^(λ): P(2) -> P(3), e_2 ↦ λ1 b1 + λ2 b2 + λ3 b3.
Mor f_lambda(const AlgebraPtr<Q>& a, int l1, int l2, int l3) {
  const auto& q = a->quiver();
  Vector<Q> x = Vector<Q>::Zero(a->dim());
  const int ls[3] = {l1, l2, l3};
  const char* names[3] = {"b1", "b2", "b3"};
  for (int k = 0; k < 3; ++k) x += Q(ls[k]) * a->unit_vector(a->arrow_element(*q.arrow_index(names[k])));
  const Rep p2 = projective_sum(a, {1});
  const Rep p3 = projective_sum(a, {2});
  return morphism_from_entries(p2, p3, {{x}});
}

void criterion_1(Check& c, const PaperOptions&) {
  const auto a = fixture_algebra<Q>("ALG-A");
  c.equal(a->dim(), 12, "dim A");
  const std::vector<std::vector<int>> want{{1, 0, 0}, {3, 1, 0}, {3, 3, 1}};
  for (int i = 0; i < 3; ++i) c.equal(projective(a, i).dims(), want[static_cast<std::size_t>(i)], "dim P(" + std::to_string(i + 1) + ")");
  c.info << "dim A = " << a->dim() << "; P: " << dims_string(projective(a, 0).dims()) << ' '
         << dims_string(projective(a, 1).dims()) << ' ' << dims_string(projective(a, 2).dims());
}

void criterion_2(Check& c, const PaperOptions& opt) {
  const auto a = fixture_algebra<Q>("ALG-A");
  GenericRankOptions g;
  g.trials = opt.trials;
  g.seed = opt.seed;
  const Rep p2 = projective(a, 1), p3 = projective(a, 2);
  const auto r = generic_rank(p2, p3, g);
  c.equal(r.parameters, 3, "Hom parameters");
  c.equal(p2.total_dim(), 4, "dim P(2)");
  c.equal(p3.total_dim(), 7, "dim P(3)");
  c.equal(r.value, 3, "r(P(2),P(3))");
  c.equal(r.certificate, std::string("symbolic"), "certificate");
  c.info << "r = " << r.value << " (" << r.certificate << ", " << r.parameters << " parameters)";
}

void criterion_3(Check& c, const PaperOptions& opt) {
  const auto a = fixture_algebra<Q>("ALG-A");
  GenericRankOptions g;
  g.trials = opt.trials;
  g.seed = opt.seed;
  const auto r = generic_rank(a, ProjDecomp{{0, 2, 0}}, ProjDecomp{{0, 0, 2}}, g);
  c.equal(r.value, 8, "r(P(2)^2,P(3)^2)");
  c.equal(r.certificate, std::string("dimension bound"), "certificate");
  const auto scan = additivity_scan(a, ProjDecomp{{0, 1, 0}}, ProjDecomp{{0, 0, 1}}, 2, opt.trials, opt.seed);
  c.equal(scan.r, std::vector<int>{3, 8}, "scan r");
  c.equal(scan.violations, std::vector<int>{2}, "scan violations");
  c.info << "r_2 = " << r.value << " (" << r.certificate << "), violations at t=2";
}

void criterion_4(Check& c, const PaperOptions& opt) {
  const auto a = fixture_algebra<Q>("ALG-A");
  const Rep m = cokernel(f_lambda(a, 1, 0, 0)).target;
  const auto v1 = is_tau_regular(m, opt.trials, opt.seed);
  const auto v2 = is_tau_regular(power(m, 2), opt.trials, opt.seed);
  c.expect(v1.yes(), "M is not tau-regular (" + v1.outcome_name() + ")");
  c.expect(v2.outcome == Verdict<Q>::Outcome::CertifiedNo, "M+M is " + v2.outcome_name());
  c.equal(v2.witness_rank, 8, "M+M witness rank");
  c.equal(v2.presentation_rank, 6, "M+M presentation rank");
  c.info << "M " << dims_string(m.dims()) << ": " << v1.outcome_name() << "; M+M: " << v2.outcome_name()
         << " (witness rank " << v2.witness_rank << " > " << v2.presentation_rank << ")";
}

void criterion_5(Check& c, const PaperOptions& opt) {
  const auto a = fixture_algebra<Q>("ALG-B");
  const Rep m = sum({simple(a, 1), simple(a, 2)});
  const auto h = hierarchy_report(m, opt.trials, opt.seed, opt.cap);
  c.expect(h.tau_regular, "not tau-regular (" + h.verdict.outcome_name() + ")");
  c.equal(h.pd, ProjDim::finite(2), "proj_dim");
  c.expect(!h.tau_rigid, "tau-rigid");
  c.expect(!h.pd_at_most_1, "pd<=1");
  c.info << "tau-regular " << h.verdict.outcome_name() << ", pd " << h.pd.str() << ", tau-rigid "
         << (h.tau_rigid ? "yes" : "no");
}

void criterion_6(Check& c, const PaperOptions& opt) {
  const auto a = fixture_algebra<Q>("ALG-B0");
  const Rep m = sum({projective(a, 1), injective(a, 1), simple(a, 2)});
  const auto want = generate_ideal(*a, {a->element(parse_combination(a->quiver(), "a*b", 0))});
  const auto r = reduce_and_compare(m, std::optional<Ideal<Q>>(), opt.trials, opt.seed, opt.cap);
  c.expect(r.ideal == want, "annihilator is not (ab)");
  c.equal(r.pd_a, ProjDim::finite(1), "pd_A");
  c.equal(r.pd_b, ProjDim::finite(2), "pd_B");
  c.expect(!r.tau_rigid_a, "tau_A-rigid");
  c.expect(r.regular_a.yes(), "tau_A-regular is " + r.regular_a.outcome_name());
  c.expect(r.regular_b.outcome == Verdict<Q>::Outcome::CertifiedNo, "tau_B-regular is " + r.regular_b.outcome_name());
  c.info << "I_M = (ab), pd " << r.pd_a.str() << " -> " << r.pd_b.str() << ", regular A " << r.regular_a.outcome_name()
         << ", B " << r.regular_b.outcome_name();
}

void criterion_7(Check& c, const PaperOptions& opt) {
  const auto a = fixture_algebra<Q>("ALG-C");
  const Rep s1 = simple(a, 0), s2 = simple(a, 1);
  const Rep n = sum({s1, s2});
  const auto ideal = generate_ideal(*a, {a->unit_vector(a->arrow_element(*a->quiver().arrow_index("a")))});
  const auto r = reduce_and_compare(n, std::optional<Ideal<Q>>(ideal), opt.trials, opt.seed, opt.cap);
  const auto& b = *r.quotient.algebra;
  c.equal(b.dim(), 4, "dim B");
  c.equal(b.num_vertices(), 2, "vertices of B");
  c.equal(b.num_arrows(), 2, "arrows of B");
  c.expect(b.presentation().relations.empty(), "B has relations");
  if (b.num_arrows() == 2) {
    const auto& x = b.quiver().arrows[0];
    const auto& y = b.quiver().arrows[1];
    c.expect(x.source == y.source && x.target == y.target && x.source != x.target, "B is not a Kronecker quiver");
  }
  c.expect(r.regular_b.yes(), "tau_B-regular is " + r.regular_b.outcome_name());
  c.expect(r.regular_a.outcome == Verdict<Q>::Outcome::CertifiedNo, "tau_A-regular is " + r.regular_a.outcome_name());
  c.equal(r.pd_a, ProjDim::infinite(), "pd_A");
  c.expect(iso_test(syzygy(s1).source, s2), "Omega S(1) is not S(2)");
  c.expect(iso_test(syzygy(s2).source, power(s1, 2)), "Omega S(2) is not S(1)^2");
  c.info << "B: dim " << b.dim() << ", 2 parallel arrows; regular B " << r.regular_b.outcome_name() << ", A "
         << r.regular_a.outcome_name() << "; pd_A " << r.pd_a.str();
}

// ---------------------------------------------------------------------------
// Random modules.

Matrix<Q> random_invertible(int n, Rng& rng) {
  while (true) {
    Matrix<Q> g(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) g(i, j) = Q(rng.uniform(-3, 3));
    if (is_invertible<Q>(g)) return g;
  }
}

Rep change_basis(const Rep& m, Rng& rng) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix<Q>> g, gi;
  for (int v = 0; v < m.num_vertices(); ++v) {
    g.push_back(random_invertible(m.dim(v), rng));
    gi.push_back(inverse<Q>(g.back()));
  }
  std::vector<Matrix<Q>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrows[static_cast<std::size_t>(a)];
    maps.push_back(g[static_cast<std::size_t>(ar.target)] * m.arrow_map(a) * gi[static_cast<std::size_t>(ar.source)]);
  }
  return make_representation(m.algebra(), m.dims(), std::move(maps));
}

std::vector<int> random_summands(int n, int max_count, Rng& rng, int min_count) {
  const int k = static_cast<int>(rng.uniform(min_count, max_count));
  std::vector<int> s;
  for (int i = 0; i < k; ++i) s.push_back(static_cast<int>(rng.uniform(0, n - 1)));
  std::sort(s.begin(), s.end());
  return s;
}

// Cokernel of a random map between small projective sums. Coefficients are
// small and often zero so that non-generic maps show up too.
Mor random_projective_map(const AlgebraPtr<Q>& a, Rng& rng) {
  const int n = a->num_vertices();
  const Rep p0 = projective_sum(a, random_summands(n, 2, rng, 1));
  const Rep p1 = projective_sum(a, random_summands(n, 2, rng, 0));
  const auto basis = hom_basis(p1, p0);
  std::vector<Q> coeffs;
  for (std::size_t k = 0; k < basis.size(); ++k) coeffs.push_back(rng.uniform(0, 2) == 0 ? Q(0) : Q(rng.uniform(-2, 2)));
  return linear_combination(basis, coeffs, p1, p0);
}

Rep random_module(const AlgebraPtr<Q>& a, Rng& rng) {
  while (true) {
    Rep m;
    if (rng.uniform(0, 2) == 0) {
      const auto op = a->opposite();
      const Rep d = dual(cokernel(random_projective_map(op, rng)).target);
      m = Rep(a, d.dims(), d.arrow_maps());
    } else {
      m = cokernel(random_projective_map(a, rng)).target;
    }
    if (m.total_dim() < 1 || m.total_dim() > 9) continue;
    return change_basis(m, rng);
  }
}

struct PropertyTally {
  int modules = 0, pairs = 0, complexes = 0, faithful_rigid = 0;
};

void criterion_8(Check& c, const PaperOptions& opt) {
  PropertyTally tally;
  const auto names = fixture_names();
  const Rng master(opt.seed);
  const int per_fixture = (opt.property_modules + static_cast<int>(names.size()) - 1) / static_cast<int>(names.size());
  const int complexes_per_fixture =
      (opt.property_complexes + static_cast<int>(names.size()) - 1) / static_cast<int>(names.size());
  for (std::size_t fi = 0; fi < names.size(); ++fi) {
    const auto a = fixture_algebra<Q>(names[fi]);
    Rng rng = master.split(fi);
    const int n = a->num_vertices();
    std::vector<Rep> mods;
    for (int k = 0; k < per_fixture; ++k) mods.push_back(random_module(a, rng));
    auto where = [&](int k) { return names[fi] + " module " + std::to_string(k) + " " + dims_string(mods[static_cast<std::size_t>(k)].dims()); };
    std::vector<Rep> taus;
    for (int k = 0; k < per_fixture; ++k) {
      const Rep& m = mods[static_cast<std::size_t>(k)];
      ++tally.modules;
      for (int i = 0; i < n; ++i) {
        c.expect(hom_dim(projective(a, i), m) == m.dim(i), where(k) + ": dim Hom(P(i),M) != d_i");
        c.expect(hom_dim(m, injective(a, i)) == m.dim(i), where(k) + ": dim Hom(M,I(i)) != d_i");
      }
      const Rep t = tau(m);
      taus.push_back(t);
      c.expect((t.total_dim() == 0) == is_projective(m), where(k) + ": tau M = 0 disagrees with projectivity");
      const auto h = hierarchy_report(m, 4, rng.split(static_cast<std::uint64_t>(k)).seed(), opt.cap, false);
      c.expect(h.e <= h.E, where(k) + ": e > E");
      for (const auto& v : h.violations) c.expect(false, where(k) + ": " + v);
      if (h.tau_rigid && is_faithful(m)) {
        ++tally.faithful_rigid;
        c.expect(h.pd_at_most_1, where(k) + ": faithful tau-rigid with pd " + h.pd.str());
      }
      // AR formula on (M, N) with N the next module and N = M.
      for (int j : {k, (k + 1) % per_fixture}) {
        const Rep& other = mods[static_cast<std::size_t>(j)];
        const int ext = ext1_dim(m, other);
        c.expect(ext == stable_hom_dim_inj(other, t), where(k) + ": AR formula fails against module " + std::to_string(j));
        if (h.pd_at_most_1) c.expect(ext == hom_dim(other, t), where(k) + ": pd<=1 but Ext != Hom(N, tau M)");
        ++tally.pairs;
      }
    }
    for (int k = 0; k < complexes_per_fixture; ++k) {
      const Mor f = random_projective_map(a, rng);
      const TwoComplex<Q> cx{ProjDecomp::from_summands(n, f.source.projective_summands()),
                             ProjDecomp::from_summands(n, f.target.projective_summands()), f, std::nullopt};
      try {
        const auto red = reduce_presentation(cx);
        c.expect(rank_of(f) == rank_of(red.minimal.map) + red.identity_dim,
                 names[fi] + " complex " + std::to_string(k) + ": rank identity fails");
        for (int i = 0; i < n; ++i) {
          const auto s = static_cast<std::size_t>(i);
          c.expect(cx.p0.mult[s] == red.minimal.p0.mult[s] + red.identity_part.mult[s] &&
                       cx.p1.mult[s] == red.minimal.p1.mult[s] + red.identity_part.mult[s] + red.zero_part.mult[s],
                   names[fi] + " complex " + std::to_string(k) + ": summands do not add up");
        }
      } catch (const std::logic_error& e) {
        c.expect(false, names[fi] + " complex " + std::to_string(k) + ": " + e.what());
      }
      ++tally.complexes;
    }
  }
  c.expect(tally.modules >= 200 && tally.pairs >= 200 && tally.complexes >= 100, "property suite too small");
  c.info << tally.modules << " modules, " << tally.pairs << " AR pairs, " << tally.complexes << " complexes, "
         << tally.faithful_rigid << " faithful tau-rigid";
}

void for_each_mult(int n, int max_mult, const std::function<void(const ProjDecomp&)>& fn) {
  ProjDecomp d = ProjDecomp::zero(n);
  while (true) {
    fn(d);
    int k = 0;
    while (k < n && d.mult[static_cast<std::size_t>(k)] == max_mult) d.mult[static_cast<std::size_t>(k++)] = 0;
    if (k == n) return;
    ++d.mult[static_cast<std::size_t>(k)];
  }
}

void criterion_9(Check& c, const PaperOptions& opt) {
  int spaces = 0;
  for (const auto& name : fixture_names()) {
    const auto a = fixture_algebra<Q>(name);
    const int n = a->num_vertices();
    for_each_mult(n, 2, [&](const ProjDecomp& d1) {
      for_each_mult(n, 2, [&](const ProjDecomp& d0) {
        const Rep p1 = realize(a, d1), p0 = realize(a, d0);
        const int params = hom_dim(p1, p0);
        if (params == 0 || params > 12) return;
        GenericRankOptions g;
        g.trials = 16;
        g.seed = opt.seed;
        g.use_oracle = false;
        g.use_wong = false;
        const auto r = generic_rank(p1, p0, g);
        const int s = symbolic_rank(p1, p0);
        ++spaces;
        if (r.value != s) {
          std::ostringstream os;
          os << name << ' ' << dims_string(d1.mult) << " -> " << dims_string(d0.mult) << ": sampled " << r.value
             << ", symbolic " << s;
          c.expect(false, os.str());
        }
      });
    });
  }
  c.info << spaces << " Hom spaces compared";
}

void criterion_10(Check& c, const PaperOptions& opt) {
  int scans = 0;
  for (const char* name : {"ALG-K", "ALG-B0"}) {
    const auto a = fixture_algebra<Q>(name);
    const int n = a->num_vertices();
    for_each_mult(n, 2, [&](const ProjDecomp& d1) {
      for_each_mult(n, 2, [&](const ProjDecomp& d0) {
        const auto s = additivity_scan(a, d1, d0, 4, opt.trials, opt.seed);
        ++scans;
        const std::string where = std::string(name) + ' ' + dims_string(d1.mult) + " -> " + dims_string(d0.mult);
        c.expect(s.violations.empty(), where + ": violation");
        for (std::size_t t = 0; t < s.certified.size(); ++t)
          c.expect(s.certified[t], where + ": t=" + std::to_string(t + 1) + " not certified");
      });
    });
  }
  c.info << scans << " scans up to t=4";
}

struct Spec {
  int id;
  const char* name;
  double limit;
  void (*run)(Check&, const PaperOptions&);
};

constexpr Spec kCriteria[] = {
    {1, "ALG-A structure", 0.1, criterion_1},
    {2, "r(P(2),P(3)) = 3, symbolic", 1, criterion_2},
    {3, "r(P(2)^2,P(3)^2) = 8, violation at t=2", 2, criterion_3},
    {4, "Cok f^(1,0,0) regular, its square not", 2, criterion_4},
    {5, "ALG-B S(2)+S(3): tau-regular, pd 2", 1, criterion_5},
    {6, "ALG-B0 reduction to (ab)", 1, criterion_6},
    {7, "ALG-C reduction to the Kronecker algebra", 1, criterion_7},
    {8, "property suite on random modules", 60, criterion_8},
    {9, "sampled rank equals symbolic rank", 30, criterion_9},
    {10, "hereditary additivity", 30, criterion_10},
};

}  // namespace

std::vector<CriterionResult> run_paper_examples(const PaperOptions& opt) {
  std::vector<CriterionResult> out;
  for (const auto& spec : kCriteria) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), spec.id) == opt.only.end()) continue;
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    r.limit = spec.limit;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.run(c, opt);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.limit) {
      std::ostringstream os;
      os << "took " << r.seconds << " s, limit " << r.limit << " s";
      c.failures.push_back(os.str());
    }
    r.pass = c.failures.empty();
    if (r.pass) {
      r.detail = c.info.str();
    } else {
      std::ostringstream os;
      os << c.failures.size() << " failure(s): " << c.failures.front();
      for (std::size_t k = 1; k < std::min<std::size_t>(3, c.failures.size()); ++k) os << "; " << c.failures[k];
      r.detail = os.str();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace taureg
