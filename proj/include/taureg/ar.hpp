#pragma once

// Auslander-Reiten translation through the Nakayama functor, E-invariants,
// τ-rigidity and τ-regularity, and reduction of a module to A/I.

#include "taureg/presentation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taureg {

/// ν on a map of projective sums: P(i) ↦ I(i), and an entry y ∈ e_i A e_j of
/// P(i) -> P(j) becomes I(i) -> I(j), whose component at v is the transpose
/// of left multiplication by y, e_j A e_v -> e_i A e_v.
template <typename Scalar>
Morphism<Scalar> nakayama_complex(const TwoComplex<Scalar>& c) {
  const auto& ap = c.map.source.algebra();
  const auto& a = *ap;
  const auto& src = c.map.source.projective_summands();
  const auto& tgt = c.map.target.projective_summands();
  const Representation<Scalar> i1 = injective_sum(ap, src);
  const Representation<Scalar> i0 = injective_sum(ap, tgt);
  Morphism<Scalar> out = zero_morphism(i1, i0);
  if (src.empty() || tgt.empty()) return out;
  const auto entries = algebra_entries(c.map);
  auto inj_offset = [&](const std::vector<int>& summands, std::size_t k, int v) {
    int off = 0;
    for (std::size_t j = 0; j < k; ++j) off += static_cast<int>(a.between(v, summands[j]).size());
    return off;
  };
  for (int v = 0; v < a.num_vertices(); ++v) {
    for (std::size_t k = 0; k < src.size(); ++k) {
      const int i = src[k];
      const auto& cols = a.between(v, i);
      if (cols.empty()) continue;
      const int ci = inj_offset(src, k, v);
      for (std::size_t l = 0; l < tgt.size(); ++l) {
        const int j = tgt[l];
        const auto& rows = a.between(v, j);
        if (rows.empty()) continue;
        const int rj = inj_offset(tgt, l, v);
        const Vector<Scalar>& y = entries[l][k];
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const Vector<Scalar> yz = a.multiply(y, a.unit_vector(rows[r]));
          for (std::size_t c2 = 0; c2 < cols.size(); ++c2) {
            out.maps[static_cast<std::size_t>(v)](rj + static_cast<Index>(r), ci + static_cast<Index>(c2)) =
                yz(cols[c2]);
          }
        }
      }
    }
  }
  return out;
}

/// τM = ker(ν P1 -> ν P0) for a minimal presentation P1 -> P0 of M.
template <typename Scalar>
Representation<Scalar> tau(const Representation<Scalar>& m) {
  const TwoComplex<Scalar> c = min_presentation(m);
  const Morphism<Scalar> nu = nakayama_complex(c);
  Representation<Scalar> t = kernel(nu).source;
  if ((t.total_dim() == 0) != c.p1.is_zero()) throw std::logic_error("tau: τM = 0 does not match projectivity");
  return t;
}

/// τ⁻M = D τ_{A^op}(DM).
template <typename Scalar>
Representation<Scalar> tau_minus(const Representation<Scalar>& m) {
  const Representation<Scalar> d = dual(tau(dual(m)));
  return Representation<Scalar>(m.algebra(), d.dims(), d.arrow_maps());
}

/// E(M, N) = dim Hom(N, τM).
template <typename Scalar>
int e_invariant(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  return hom_dim(n, tau(m));
}

template <typename Scalar>
int e_invariant(const Representation<Scalar>& m) {
  return hom_dim(m, tau(m));
}

template <typename Scalar>
bool is_tau_rigid(const Representation<Scalar>& m) {
  return e_invariant(m) == 0;
}

template <typename Scalar>
struct Verdict {
  enum class Outcome { CertifiedYes, CertifiedNo, ProbableYes };
  Outcome outcome = Outcome::CertifiedYes;
  int presentation_rank = 0;  ///< rank of the minimal presentation map
  int generic_rank = 0;       ///< best rank found on Hom(P1, P0)
  int witness_rank = 0;       ///< rank of the reported witness
  bool certified = false;     ///< generic_rank is proven maximal
  std::string certificate;
  std::string note;
  std::optional<Morphism<Scalar>> witness;
  TwoComplex<Scalar> presentation;

  bool yes() const { return outcome != Outcome::CertifiedNo; }
  std::string outcome_name() const {
    switch (outcome) {
      case Outcome::CertifiedYes: return "certified-yes";
      case Outcome::CertifiedNo: return "certified-no";
      case Outcome::ProbableYes: return "probable-yes";
    }
    return "?";
  }
};

/// M is τ-regular iff its minimal presentation map has rank r(P1, P0).
/// A strictly larger rank anywhere in Hom(P1, P0) is a certificate for no.
template <typename Scalar>
Verdict<Scalar> is_tau_regular(const Representation<Scalar>& m, int trials = 8, std::uint64_t seed = 42) {
  Verdict<Scalar> v;
  v.presentation = min_presentation(m);
  v.presentation_rank = rank_of(v.presentation.map);
  GenericRankOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  const GenericRank<Scalar> g = generic_rank(v.presentation.map.source, v.presentation.map.target, opt,
                                             std::vector<Morphism<Scalar>>{v.presentation.map});
  v.generic_rank = g.value;
  v.witness_rank = g.value;
  v.certified = g.certified;
  v.certificate = g.certificate;
  if (v.presentation_rank < g.value) {
    v.outcome = Verdict<Scalar>::Outcome::CertifiedNo;
    v.witness = g.witness;
    v.note = "a morphism of rank " + std::to_string(g.value) + " exceeds the presentation rank " +
             std::to_string(v.presentation_rank);
  } else if (g.certified) {
    v.outcome = Verdict<Scalar>::Outcome::CertifiedYes;
    v.witness = v.presentation.map;
    v.note = "maximal rank proven by " + g.certificate;
  } else {
    v.outcome = Verdict<Scalar>::Outcome::ProbableYes;
    v.witness = v.presentation.map;
    v.note = "no higher rank among " + std::to_string(trials) +
             " random samples; upper bound " + std::to_string(g.upper_bound);
  }
  return v;
}

/// dim of Hom(N, X) modulo maps factoring through an injective, computed
/// through the envelope N -> E(N).
template <typename Scalar>
int stable_hom_dim_inj(const Representation<Scalar>& n, const Representation<Scalar>& x) {
  const int h = hom_dim(n, x);
  if (h == 0) return 0;
  const Morphism<Scalar> env = injective_envelope(n);
  const auto gs = hom_basis(env.target, x);
  if (gs.empty()) return h;
  Index len = 0;
  for (int v = 0; v < n.num_vertices(); ++v) len += Index(x.dim(v)) * n.dim(v);
  Matrix<Scalar> span(len, static_cast<Index>(gs.size()));
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const Morphism<Scalar> f = compose(gs[k], env);
    Index r = 0;
    for (int v = 0; v < n.num_vertices(); ++v) {
      const auto& fv = f.at(v);
      for (Index j = 0; j < fv.cols(); ++j)
        for (Index i = 0; i < fv.rows(); ++i) span(r++, static_cast<Index>(k)) = fv(i, j);
    }
  }
  return h - static_cast<int>(rank<Scalar>(span));
}

/// Ext¹(M, N) ≅ D Hom̄(N, τM) on dimensions.
template <typename Scalar>
bool ar_formula_check(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  return ext1_dim(m, n) == stable_hom_dim_inj(n, tau(m));
}

template <typename Scalar>
struct HierarchyReport {
  bool projective = false;
  bool pd_at_most_1 = false;
  bool rigid = false;
  bool tau_rigid = false;
  bool partial_tilting = false;
  bool tau_regular = false;
  ProjDim pd;
  int e = 0;  ///< dim Ext¹(M, M)
  int E = 0;  ///< dim Hom(M, τM)
  Verdict<Scalar> verdict;
  std::vector<std::string> violations;
};

class HierarchyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The six class memberships and the implications between them:
/// projective ⟹ partial tilting ⟹ (pd ≤ 1 and τ-rigid), pd ≤ 1 ⟹ τ-regular,
/// τ-rigid ⟹ τ-regular and rigid.
template <typename Scalar>
HierarchyReport<Scalar> hierarchy_report(const Representation<Scalar>& m, int trials = 8, std::uint64_t seed = 42,
                                         int cap = 10, bool throw_on_violation = true) {
  HierarchyReport<Scalar> h;
  h.projective = is_projective(m);
  h.pd = proj_dim(m, cap);
  h.pd_at_most_1 = h.pd.at_most(1);
  h.e = ext1_dim(m, m);
  h.E = e_invariant(m);
  h.rigid = h.e == 0;
  h.tau_rigid = h.E == 0;
  h.partial_tilting = h.rigid && h.pd_at_most_1;
  h.verdict = is_tau_regular(m, trials, seed);
  h.tau_regular = h.verdict.yes();
  auto edge = [&](bool premise, bool conclusion, const char* name) {
    if (premise && !conclusion) h.violations.push_back(name);
  };
  edge(h.projective, h.partial_tilting, "projective => partial tilting");
  edge(h.partial_tilting, h.pd_at_most_1 && h.tau_rigid, "partial tilting => pd<=1 and tau-rigid");
  edge(h.pd_at_most_1, h.tau_regular, "pd<=1 => tau-regular");
  edge(h.tau_rigid, h.tau_regular && h.rigid, "tau-rigid => tau-regular and rigid");
  edge(true, h.e <= h.E, "e <= E");
  if (throw_on_violation && !h.violations.empty()) throw HierarchyViolation("hierarchy violated: " + h.violations.front());
  return h;
}

// ---------------------------------------------------------------------------
// Reduction to B = A/I.

class NotAnnihilating : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// M regarded as a module over B = A/I (I M = 0): same spaces at surviving
/// vertices, B's arrows act as the A-arrows they come from.
template <typename Scalar>
Representation<Scalar> transport(const Representation<Scalar>& m, const QuotientAlgebra<Scalar>& q) {
  const auto& b = q.algebra;
  std::vector<int> dims(static_cast<std::size_t>(b->num_vertices()), 0);
  for (int v = 0; v < m.num_vertices(); ++v) {
    const int w = q.vertex_map[static_cast<std::size_t>(v)];
    if (w < 0) {
      if (m.dim(v) != 0) throw NotAnnihilating("module is nonzero at a vertex killed by the ideal");
      continue;
    }
    dims[static_cast<std::size_t>(w)] = m.dim(v);
  }
  std::vector<Matrix<Scalar>> maps(static_cast<std::size_t>(b->num_arrows()));
  for (int a = 0; a < static_cast<int>(q.arrow_map.size()); ++a) {
    const int bb = q.arrow_map[static_cast<std::size_t>(a)];
    if (bb >= 0) maps[static_cast<std::size_t>(bb)] = m.arrow_map(a);
  }
  Representation<Scalar> out(b, std::move(dims), std::move(maps));
  if (auto bad = violated_relation(out)) throw NotAnnihilating("transported module violates " + *bad);
  return out;
}

template <typename Scalar>
bool annihilates(const Ideal<Scalar>& ideal, const Representation<Scalar>& m) {
  for (Index c = 0; c < ideal.dim(); ++c)
    if (!is_zero_matrix(act(Vector<Scalar>(ideal.span.col(c)), m))) return false;
  return true;
}

template <typename Scalar>
struct ReductionReport {
  Ideal<Scalar> ideal;
  QuotientAlgebra<Scalar> quotient;
  Representation<Scalar> over_b;
  ProjDim pd_a, pd_b;
  int e_a = 0, e_b = 0, E_a = 0, E_b = 0;
  bool tau_rigid_a = false, tau_rigid_b = false;
  Verdict<Scalar> regular_a, regular_b;
  bool e_shrinks = false;  ///< e_B ≤ e_A
  bool E_shrinks = false;  ///< E_B ≤ E_A
};

/// Reduction of M to B = A/I, with I = I_M when no ideal is supplied.
template <typename Scalar>
ReductionReport<Scalar> reduce_and_compare(const Representation<Scalar>& m,
                                           const std::optional<Ideal<Scalar>>& supplied = std::nullopt,
                                           int trials = 8, std::uint64_t seed = 42, int cap = 10) {
  ReductionReport<Scalar> r;
  r.ideal = supplied ? *supplied : annihilator(m);
  if (!is_two_sided(*m.algebra(), r.ideal)) throw std::invalid_argument("reduce: not a two-sided ideal");
  if (!annihilates(r.ideal, m)) throw NotAnnihilating("the ideal does not annihilate the module");
  r.quotient = quotient_algebra(m.algebra(), r.ideal);
  r.over_b = transport(m, r.quotient);
  r.pd_a = proj_dim(m, cap);
  r.pd_b = proj_dim(r.over_b, cap);
  r.e_a = ext1_dim(m, m);
  r.e_b = ext1_dim(r.over_b, r.over_b);
  r.E_a = e_invariant(m);
  r.E_b = e_invariant(r.over_b);
  r.tau_rigid_a = r.E_a == 0;
  r.tau_rigid_b = r.E_b == 0;
  r.regular_a = is_tau_regular(m, trials, seed);
  r.regular_b = is_tau_regular(r.over_b, trials, seed);
  r.e_shrinks = r.e_b <= r.e_a;
  r.E_shrinks = r.E_b <= r.E_a;
  return r;
}

}  // namespace taureg
