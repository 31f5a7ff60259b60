#pragma once

// Maps between sums of indecomposable projectives (two-complexes), minimal
// projective presentations and the maximal rank r(P1, P0).

#include "taureg/poly.hpp"
#include "taureg/representation.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace taureg {

/// ⊕_i P(i)^{m_i}.
struct ProjDecomp {
  std::vector<int> mult;

  static ProjDecomp zero(int n) { return {std::vector<int>(static_cast<std::size_t>(n), 0)}; }
  static ProjDecomp from_summands(int n, const std::vector<int>& summands) {
    ProjDecomp d = zero(n);
    for (int i : summands) ++d.mult[static_cast<std::size_t>(i)];
    return d;
  }
  /// Summand vertices in vertex order.
  std::vector<int> summands() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (int k = 0; k < mult[i]; ++k) s.push_back(static_cast<int>(i));
    return s;
  }
  bool is_zero() const {
    return std::all_of(mult.begin(), mult.end(), [](int m) { return m == 0; });
  }
  ProjDecomp scaled(int t) const {
    ProjDecomp d = *this;
    for (int& m : d.mult) m *= t;
    return d;
  }
  friend bool operator==(const ProjDecomp&, const ProjDecomp&) = default;
};

template <typename Scalar>
int total_dim(const Algebra<Scalar>& a, const ProjDecomp& d) {
  int s = 0;
  for (int i = 0; i < a.num_vertices(); ++i)
    s += d.mult[static_cast<std::size_t>(i)] * static_cast<int>(a.starting_at(i).size());
  return s;
}

template <typename Scalar>
Representation<Scalar> realize(const AlgebraPtr<Scalar>& a, const ProjDecomp& d) {
  if (static_cast<int>(d.mult.size()) != a->num_vertices()) throw std::invalid_argument("realize: wrong length");
  for (int m : d.mult)
    if (m < 0) throw std::invalid_argument("realize: negative multiplicity");
  return projective_sum(a, d.summands());
}

/// P1 -> P0 with its decompositions. map.source / map.target are the
/// realized sums (their block order is map.source.projective_summands()).
template <typename Scalar>
struct TwoComplex {
  ProjDecomp p1;
  ProjDecomp p0;
  Morphism<Scalar> map;
  std::optional<std::vector<Scalar>> coeffs;
};

template <typename Scalar>
TwoComplex<Scalar> zero_complex(const AlgebraPtr<Scalar>& a, const ProjDecomp& p1, const ProjDecomp& p0) {
  return {p1, p0, zero_morphism(realize(a, p1), realize(a, p0)), std::nullopt};
}

/// Offset of block k of a projective sum inside its space at vertex v.
template <typename Scalar>
int block_offset(const Algebra<Scalar>& a, const std::vector<int>& summands, std::size_t k, int v) {
  int off = 0;
  for (std::size_t j = 0; j < k; ++j) off += static_cast<int>(a.between(summands[j], v).size());
  return off;
}

/// Entry (l, k) ∈ e_{i_k} A e_{j_l} of a map ⊕ P(i_k) -> ⊕ P(j_l): the
/// component of the image of the generator of block k in block l.
template <typename Scalar>
std::vector<std::vector<Vector<Scalar>>> algebra_entries(const Morphism<Scalar>& f) {
  const auto& a = *f.source.algebra();
  const auto& src = f.source.projective_summands();
  const auto& tgt = f.target.projective_summands();
  if ((f.source.total_dim() && src.empty()) || (f.target.total_dim() && tgt.empty()))
    throw std::invalid_argument("algebra_entries: not a map between projective sums");
  std::vector<std::vector<Vector<Scalar>>> e(tgt.size(), std::vector<Vector<Scalar>>(src.size()));
  for (std::size_t k = 0; k < src.size(); ++k) {
    const int i = src[k];
    const int gen = block_offset(a, src, k, i) + a.position(a.idempotent(i));
    const Vector<Scalar> image = f.at(i).col(gen);
    for (std::size_t l = 0; l < tgt.size(); ++l) {
      Vector<Scalar> y = Vector<Scalar>::Constant(a.dim(), Scalar(0));
      const int off = block_offset(a, tgt, l, i);
      const auto& paths = a.between(tgt[l], i);
      for (std::size_t p = 0; p < paths.size(); ++p) y(paths[p]) = image(off + static_cast<Index>(p));
      e[l][k] = std::move(y);
    }
  }
  return e;
}

/// Inverse of algebra_entries.
template <typename Scalar>
Morphism<Scalar> morphism_from_entries(const Representation<Scalar>& p1, const Representation<Scalar>& p0,
                                       const std::vector<std::vector<Vector<Scalar>>>& entries) {
  const auto& a = *p1.algebra();
  const auto& src = p1.projective_summands();
  const auto& tgt = p0.projective_summands();
  std::vector<Vector<Scalar>> gens;
  for (std::size_t k = 0; k < src.size(); ++k) {
    const int i = src[k];
    Vector<Scalar> g = Vector<Scalar>::Constant(p0.dim(i), Scalar(0));
    for (std::size_t l = 0; l < tgt.size(); ++l) {
      const int off = block_offset(a, tgt, l, i);
      const auto& paths = a.between(tgt[l], i);
      for (std::size_t p = 0; p < paths.size(); ++p) g(off + static_cast<Index>(p)) = entries[l][k](paths[p]);
    }
    gens.push_back(std::move(g));
  }
  if (src.empty()) return zero_morphism(p1, p0);
  return from_projective_sum(p1, p0, gens);
}

/// Block-diagonal matrix of f over all vertices.
template <typename Scalar>
Matrix<Scalar> total_matrix(const Morphism<Scalar>& f) {
  return block_diagonal(f.maps);
}

/// P1 -> P0 -> M -> 0 with P0 -> M and P1 -> ΩM projective covers.
template <typename Scalar>
TwoComplex<Scalar> min_presentation(const Representation<Scalar>& m) {
  const auto& a = m.algebra();
  const int n = a->num_vertices();
  if (m.total_dim() == 0) return zero_complex(a, ProjDecomp::zero(n), ProjDecomp::zero(n));
  const Morphism<Scalar> epi = projective_cover(m);
  const Morphism<Scalar> inc = kernel(epi);
  Morphism<Scalar> map;
  if (inc.source.total_dim() == 0) {
    map = zero_morphism(projective_sum(a, {}), epi.source);
  } else {
    map = compose(inc, projective_cover(inc.source));
  }
  TwoComplex<Scalar> c{ProjDecomp::from_summands(n, map.source.projective_summands()),
                       ProjDecomp::from_summands(n, epi.source.projective_summands()), map, std::nullopt};
  if (!is_zero_matrix(total_matrix(compose(epi, map)))) throw std::logic_error("min_presentation: not a complex");
  const auto rad = radical_subspaces(epi.source);
  for (int v = 0; v < n; ++v) {
    if (!in_column_space<Scalar>(rad[static_cast<std::size_t>(v)], map.at(v)))
      throw std::logic_error("min_presentation: image not in the radical");
  }
  if (epi.source.total_dim() - rank_of(map) != m.total_dim())
    throw std::logic_error("min_presentation: cokernel has the wrong dimension");
  return c;
}

/// t-fold direct sum of a complex.
template <typename Scalar>
TwoComplex<Scalar> direct_sum_complex(const TwoComplex<Scalar>& c, int t) {
  if (t < 1) throw std::invalid_argument("direct_sum_complex: t must be >= 1");
  if (t == 1) return c;
  TwoComplex<Scalar> out{c.p1.scaled(t), c.p0.scaled(t),
                         direct_sum(std::vector<Morphism<Scalar>>(static_cast<std::size_t>(t), c.map)), std::nullopt};
  if (rank_of(out.map) != t * rank_of(c.map)) throw std::logic_error("direct_sum_complex: rank is not additive");
  return out;
}

/// A Wong-sequence upper bound on the rank of every element of span(basis):
/// with U = A^{-1}(W*), every B has rank ≤ n − dim U + dim(span(B_j U)).
/// When W* ⊆ im A the bound equals rank A.
struct WongBound {
  int bound = 0;
  bool tight = false;
};

template <typename Scalar>
WongBound wong_bound(const std::vector<Matrix<Scalar>>& basis, const Matrix<Scalar>& a) {
  const Index n0 = a.rows();
  const Index n1 = a.cols();
  Matrix<Scalar> w = zeros<Scalar>(n0, 0);
  Matrix<Scalar> u;
  for (Index step = 0; step <= n0 + 1; ++step) {
    u = preimage<Scalar>(a, w);
    Matrix<Scalar> images(n0, u.cols() * static_cast<Index>(basis.size()));
    Index c = 0;
    for (const auto& b : basis) {
      images.middleCols(c, u.cols()) = b * u;
      c += u.cols();
    }
    Matrix<Scalar> next = column_basis<Scalar>(images);
    if (next.cols() == w.cols()) {
      w = std::move(next);
      break;
    }
    w = std::move(next);
  }
  u = preimage<Scalar>(a, w);
  const int rank_a = static_cast<int>(rank<Scalar>(a));
  WongBound out;
  out.bound = static_cast<int>(n1 - u.cols() + w.cols());
  out.tight = out.bound == rank_a;
  return out;
}

struct GenericRankOptions {
  int trials = 8;
  std::uint64_t seed = 42;
  long long range = 1000;
  bool use_oracle = true;
  int oracle_max_params = 12;
  int oracle_max_dim = 40;
  bool use_wong = true;
  /// An upper bound known to the caller (for example from a smaller blow-up).
  std::optional<int> known_bound;
  std::string known_bound_name = "supplied bound";
  PolyRankBudget budget;
};

template <typename Scalar>
struct GenericRank {
  int value = 0;
  Morphism<Scalar> witness;
  bool certified = false;
  std::string certificate = "none";  ///< "dimension bound", "symbolic", "wong", known_bound_name, or "none"
  int upper_bound = 0;               ///< best proven upper bound
  int parameters = 0;                ///< dim Hom(P1, P0)
  int witness_index = -1;            ///< trial index, or trials + k for extra sample k
  std::optional<int> oracle_value;
};

/// r(P1, P0) = max rank over Hom(P1, P0). Trial i draws its coefficients
/// from Rng(seed).split(i); extra samples are ranked after the trials. The
/// witness is the first sample attaining the maximum. Sampling stops early
/// once a proven upper bound is attained.
template <typename Scalar>
GenericRank<Scalar> generic_rank(const Representation<Scalar>& p1, const Representation<Scalar>& p0,
                                 const GenericRankOptions& opt = {},
                                 const std::vector<Morphism<Scalar>>& extra_samples = {}) {
  if (opt.trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");
  GenericRank<Scalar> out;
  out.witness = zero_morphism(p1, p0);
  const auto basis = hom_basis(p1, p0);
  out.parameters = static_cast<int>(basis.size());
  int bound = std::min(p1.total_dim(), p0.total_dim());
  std::string bound_name = "dimension bound";
  if (opt.known_bound && *opt.known_bound < bound) {
    bound = *opt.known_bound;
    bound_name = opt.known_bound_name;
  }
  out.upper_bound = bound;
  if (basis.empty()) bound = 0;

  auto consider = [&](const Morphism<Scalar>& f, int r, int index) {
    if (r > out.value || out.witness_index < 0) {
      out.value = r;
      out.witness = f;
      out.witness_index = index;
    }
  };
  std::vector<int> extra_ranks;
  for (const auto& f : extra_samples) {
    if (f.source.dims() != p1.dims() || f.target.dims() != p0.dims())
      throw std::invalid_argument("generic_rank: extra sample has the wrong shape");
    extra_ranks.push_back(rank_of(f));
  }
  // An extra sample that already attains a proven bound makes trials pointless.
  const bool extra_done =
      std::find(extra_ranks.begin(), extra_ranks.end(), bound) != extra_ranks.end() && !basis.empty();
  const Rng master(opt.seed);
  if (!basis.empty() && !extra_done) {
    for (int i = 0; i < opt.trials && out.value < bound; ++i) {
      Rng rng = master.split(static_cast<std::uint64_t>(i));
      const auto f = random_morphism(basis, p1, p0, rng, opt.range);
      consider(f, rank_of(f), i);
    }
  }
  for (std::size_t k = 0; k < extra_samples.size(); ++k) {
    if (out.value >= bound && out.witness_index >= 0) break;
    consider(extra_samples[k], extra_ranks[k], opt.trials + static_cast<int>(k));
  }
  if (out.witness_index < 0) out.witness_index = 0;

  if (out.value == bound) {
    out.certified = true;
    out.certificate = basis.empty() ? "dimension bound" : bound_name;
    out.upper_bound = out.value;
    return out;
  }
  std::vector<Matrix<Scalar>> mats;
  for (const auto& b : basis) mats.push_back(total_matrix(b));
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (opt.use_oracle && out.parameters <= opt.oracle_max_params && p1.total_dim() <= opt.oracle_max_dim &&
        p0.total_dim() <= opt.oracle_max_dim) {
      try {
        const int r = static_cast<int>(poly_rank(generic_combination(mats, p0.total_dim(), p1.total_dim()), opt.budget));
        out.oracle_value = r;
        out.upper_bound = std::min(out.upper_bound, r);
        if (r == out.value) {
          out.certified = true;
          out.certificate = "symbolic";
          return out;
        }
      } catch (const BudgetExceeded&) {
      }
    }
  }
  if (opt.use_wong) {
    const WongBound wb = wong_bound(mats, total_matrix(out.witness));
    out.upper_bound = std::min(out.upper_bound, wb.bound);
    if (wb.tight) {
      out.certified = true;
      out.certificate = "wong";
    }
  }
  return out;
}

template <typename Scalar>
GenericRank<Scalar> generic_rank(const AlgebraPtr<Scalar>& a, const ProjDecomp& p1, const ProjDecomp& p0,
                                 const GenericRankOptions& opt = {},
                                 const std::vector<Morphism<Scalar>>& extra_samples = {}) {
  return generic_rank(realize(a, p1), realize(a, p0), opt, extra_samples);
}

/// Symbolic rank of the generic element of Hom(P1, P0) (Q only).
inline int symbolic_rank(const Representation<Rational>& p1, const Representation<Rational>& p0,
                         const PolyRankBudget& budget = {}) {
  std::vector<Matrix<Rational>> mats;
  for (const auto& b : hom_basis(p1, p0)) mats.push_back(total_matrix(b));
  if (mats.empty()) return 0;
  return static_cast<int>(poly_rank(generic_combination(mats, p0.total_dim(), p1.total_dim()), budget));
}

// ---------------------------------------------------------------------------

template <typename Scalar>
struct ReducedPresentation {
  TwoComplex<Scalar> minimal;
  int identity_dim = 0;       ///< dim P of the summand P --1--> P
  ProjDecomp identity_part;   ///< P
  ProjDecomp zero_part;       ///< P' of the summand P' -> 0
};

/// Splits c ≅ c_min ⊕ (P -1-> P) ⊕ (P' -> 0) with c_min the minimal
/// presentation of Cok c.
template <typename Scalar>
ReducedPresentation<Scalar> reduce_presentation(const TwoComplex<Scalar>& c) {
  const auto& a = c.map.source.algebra();
  const Representation<Scalar> cok = cokernel(c.map).target;
  ReducedPresentation<Scalar> out{min_presentation(cok), 0, {}, {}};
  const std::size_t n = c.p0.mult.size();
  out.identity_part.mult.assign(n, 0);
  out.zero_part.mult.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.identity_part.mult[i] = c.p0.mult[i] - out.minimal.p0.mult[i];
    out.zero_part.mult[i] = c.p1.mult[i] - out.minimal.p1.mult[i] - out.identity_part.mult[i];
    if (out.identity_part.mult[i] < 0 || out.zero_part.mult[i] < 0)
      throw std::logic_error("reduce_presentation: negative multiplicity");
  }
  out.identity_dim = total_dim(*a, out.identity_part);
  if (rank_of(c.map) != rank_of(out.minimal.map) + out.identity_dim)
    throw std::logic_error("reduce_presentation: rank identity fails");
  return out;
}

// ---------------------------------------------------------------------------

struct RankScanReport {
  int t_max = 0;
  std::vector<int> r;
  std::vector<bool> certified;
  std::vector<std::string> certificates;
  std::vector<int> upper_bounds;
  std::vector<int> violations;  ///< t with r_t > t r_1
  std::uint64_t seed = 0;
  int trials = 0;
  std::string field;
};

/// r(P1^t, P0^t) for t = 1..t_max. The t-th estimate always sees the
/// block-diagonal sum of the (t-1)-th and first witnesses, so r_t ≥ r_{t-1} + r_1.
/// A Wong bound b for t = 1 bounds every blow-up by t·b.
template <typename Scalar>
RankScanReport additivity_scan(const AlgebraPtr<Scalar>& a, const ProjDecomp& p1, const ProjDecomp& p0, int t_max,
                               int trials = 8, std::uint64_t seed = 42) {
  if (t_max < 1) throw std::invalid_argument("additivity_scan: t_max must be >= 1");
  RankScanReport rep;
  rep.t_max = t_max;
  rep.seed = seed;
  rep.trials = trials;
  rep.field = FieldTraits<Scalar>::name();
  const Representation<Scalar> q1 = realize(a, p1);
  const Representation<Scalar> q0 = realize(a, p0);
  const Rng master(seed);

  GenericRankOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  const GenericRank<Scalar> first = generic_rank(q1, q0, opt);
  // Only bounds coming from a subspace (dimension or Wong) scale to blow-ups.
  int unit_bound = std::min(q1.total_dim(), q0.total_dim());
  {
    std::vector<Matrix<Scalar>> mats;
    for (const auto& b : hom_basis(q1, q0)) mats.push_back(total_matrix(b));
    if (mats.empty()) unit_bound = 0;
    else unit_bound = std::min(unit_bound, wong_bound(mats, total_matrix(first.witness)).bound);
  }
  rep.r.push_back(first.value);
  rep.certified.push_back(first.certified);
  rep.certificates.push_back(first.certificate);
  rep.upper_bounds.push_back(first.upper_bound);

  Morphism<Scalar> previous = first.witness;
  for (int t = 2; t <= t_max; ++t) {
    const Representation<Scalar> s1 = direct_sum(std::vector<Representation<Scalar>>{previous.source, q1});
    const Representation<Scalar> s0 = direct_sum(std::vector<Representation<Scalar>>{previous.target, q0});
    Morphism<Scalar> extra = direct_sum(std::vector<Morphism<Scalar>>{previous, first.witness});
    GenericRankOptions o = opt;
    o.seed = master.split(static_cast<std::uint64_t>(t)).seed();
    o.known_bound = t * unit_bound;
    o.known_bound_name = "blow-up bound";
    o.use_oracle = false;
    const GenericRank<Scalar> g = generic_rank(s1, s0, o, {extra});
    rep.r.push_back(g.value);
    rep.certified.push_back(g.certified);
    rep.certificates.push_back(g.certificate);
    rep.upper_bounds.push_back(g.upper_bound);
    if (g.value > t * first.value) rep.violations.push_back(t);
    previous = g.witness;
  }
  return rep;
}

}  // namespace taureg
