#pragma once

// Left A-modules as representations of the bound quiver, morphisms between
// them, and the module-category toolkit built on exact linear algebra.

#include "taureg/algebra.hpp"
#include "taureg/rng.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taureg {

class RelationViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A representation: one space K^{d_v} per vertex and for every arrow
/// a: s -> t a d_t x d_s matrix. Cheap to copy (shared immutable data).
template <typename Scalar>
class Representation {
 public:
  Representation() = default;

  /// Checks shapes only; use validate() or make_representation() for relations.
  Representation(AlgebraPtr<Scalar> algebra, std::vector<int> dims, std::vector<Matrix<Scalar>> arrow_maps,
                 std::vector<int> projective_summands = {})
      : data_(std::make_shared<Data>(Data{std::move(algebra), std::move(dims), std::move(arrow_maps),
                                          std::move(projective_summands)})) {
    const auto& q = data_->algebra->quiver();
    if (static_cast<int>(data_->dims.size()) != q.num_vertices())
      throw std::invalid_argument("representation: dimension vector has the wrong length");
    if (static_cast<int>(data_->arrow_maps.size()) != q.num_arrows())
      throw std::invalid_argument("representation: wrong number of arrow maps");
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      const auto& m = data_->arrow_maps[static_cast<std::size_t>(a)];
      if (m.rows() != dim(ar.target) || m.cols() != dim(ar.source))
        throw std::invalid_argument("representation: arrow '" + ar.name + "' has the wrong shape");
    }
  }

  const AlgebraPtr<Scalar>& algebra() const { return data_->algebra; }
  const std::vector<int>& dims() const { return data_->dims; }
  int dim(int v) const { return data_->dims[static_cast<std::size_t>(v)]; }
  int total_dim() const {
    int s = 0;
    for (int d : data_->dims) s += d;
    return s;
  }
  int num_vertices() const { return static_cast<int>(data_->dims.size()); }
  const Matrix<Scalar>& arrow_map(int a) const { return data_->arrow_maps[static_cast<std::size_t>(a)]; }
  const std::vector<Matrix<Scalar>>& arrow_maps() const { return data_->arrow_maps; }
  /// Offset of M_v inside the total space ⊕_v M_v.
  int offset(int v) const {
    int s = 0;
    for (int u = 0; u < v; ++u) s += dim(u);
    return s;
  }

  /// Nonempty when this is a realized sum of indecomposable projectives
  /// ⊕ P(i_k), in block order.
  const std::vector<int>& projective_summands() const { return data_->summands; }
  bool is_projective_sum() const { return !data_->summands.empty(); }

 private:
  struct Data {
    AlgebraPtr<Scalar> algebra;
    std::vector<int> dims;
    std::vector<Matrix<Scalar>> arrow_maps;
    std::vector<int> summands;
  };
  std::shared_ptr<const Data> data_;
};

template <typename Scalar>
struct Morphism {
  Representation<Scalar> source;
  Representation<Scalar> target;
  std::vector<Matrix<Scalar>> maps;  ///< maps[v]: target.dim(v) x source.dim(v)

  const Matrix<Scalar>& at(int v) const { return maps[static_cast<std::size_t>(v)]; }
};

template <typename Scalar>
bool same_algebra(const Algebra<Scalar>& a, const Algebra<Scalar>& b) {
  if (&a == &b) return true;
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  for (int a_ = 0; a_ < a.num_arrows(); ++a_) {
    const auto& x = a.quiver().arrows[static_cast<std::size_t>(a_)];
    const auto& y = b.quiver().arrows[static_cast<std::size_t>(a_)];
    if (x.source != y.source || x.target != y.target) return false;
  }
  for (int i = 0; i < a.dim(); ++i) {
    if (!(a.basis_path(i) == b.basis_path(i))) return false;
    for (int j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  }
  return true;
}

template <typename Scalar>
void require_same_algebra(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  if (!same_algebra(*m.algebra(), *n.algebra())) throw std::invalid_argument("modules over different algebras");
}

/// Matrix of a path of the quiver acting on M (identity for e_v).
template <typename Scalar>
Matrix<Scalar> path_matrix(const Representation<Scalar>& m, const Path& p) {
  if (p.length() == 0) return identity<Scalar>(m.dim(p.source));
  Matrix<Scalar> out = m.arrow_map(p.arrows.front());
  for (std::size_t k = 1; k < p.arrows.size(); ++k) out = Matrix<Scalar>(out * m.arrow_map(p.arrows[k]));
  return out;
}

/// First relation (as text) that fails on M, or nullopt.
template <typename Scalar>
std::optional<std::string> violated_relation(const Representation<Scalar>& m) {
  const auto& qp = m.algebra()->presentation();
  for (const auto& r : qp.relations) {
    if (r.terms.empty()) continue;
    Matrix<Scalar> sum = zeros<Scalar>(m.dim(r.target()), m.dim(r.source()));
    for (const auto& t : r.terms) sum += FieldTraits<Scalar>::from_rational(t.coefficient) * path_matrix(m, t.path);
    if (!is_zero_matrix(sum)) return relation_string(qp.quiver, r);
  }
  return std::nullopt;
}

template <typename Scalar>
void validate(const Representation<Scalar>& m) {
  if (auto bad = violated_relation(m)) throw RelationViolation("relation violated: " + *bad);
}

template <typename Scalar>
Representation<Scalar> make_representation(AlgebraPtr<Scalar> a, std::vector<int> dims,
                                           std::vector<Matrix<Scalar>> maps) {
  Representation<Scalar> m(std::move(a), std::move(dims), std::move(maps));
  validate(m);
  return m;
}

template <typename Scalar>
Representation<Scalar> zero_module(const AlgebraPtr<Scalar>& a) {
  std::vector<Matrix<Scalar>> maps;
  for (const auto& ar : a->quiver().arrows) {
    (void)ar;
    maps.push_back(zeros<Scalar>(0, 0));
  }
  return Representation<Scalar>(a, std::vector<int>(static_cast<std::size_t>(a->num_vertices()), 0), std::move(maps));
}

template <typename Scalar>
Representation<Scalar> simple(const AlgebraPtr<Scalar>& a, int i) {
  if (i < 0 || i >= a->num_vertices()) throw std::out_of_range("simple: no such vertex");
  std::vector<int> dims(static_cast<std::size_t>(a->num_vertices()), 0);
  dims[static_cast<std::size_t>(i)] = 1;
  std::vector<Matrix<Scalar>> maps;
  for (const auto& ar : a->quiver().arrows) maps.push_back(zeros<Scalar>(dims[ar.target], dims[ar.source]));
  return Representation<Scalar>(a, dims, std::move(maps));
}

/// P(i) = A e_i; at v the basis is the basis paths i -> v, arrows act on the left.
template <typename Scalar>
Representation<Scalar> projective(const AlgebraPtr<Scalar>& a, int i) {
  if (i < 0 || i >= a->num_vertices()) throw std::out_of_range("projective: no such vertex");
  std::vector<int> dims;
  for (int v = 0; v < a->num_vertices(); ++v) dims.push_back(static_cast<int>(a->between(i, v).size()));
  std::vector<Matrix<Scalar>> maps;
  for (int arr = 0; arr < a->num_arrows(); ++arr) {
    const Arrow& ar = a->quiver().arrows[static_cast<std::size_t>(arr)];
    Matrix<Scalar> m = zeros<Scalar>(dims[static_cast<std::size_t>(ar.target)], dims[static_cast<std::size_t>(ar.source)]);
    const auto& cols = a->between(i, ar.source);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& [k, s] : a->product(a->arrow_element(arr), cols[c])) m(a->position(k), static_cast<Index>(c)) += s;
    }
    maps.push_back(std::move(m));
  }
  return Representation<Scalar>(a, std::move(dims), std::move(maps), {i});
}

/// The K-dual DM as a representation over A^op.
template <typename Scalar>
Representation<Scalar> dual(const Representation<Scalar>& m) {
  std::vector<Matrix<Scalar>> maps;
  for (const auto& x : m.arrow_maps()) maps.push_back(x.transpose());
  return Representation<Scalar>(m.algebra()->opposite(), m.dims(), std::move(maps));
}

template <typename Scalar>
Morphism<Scalar> dual(const Morphism<Scalar>& f) {
  Morphism<Scalar> g{dual(f.target), dual(f.source), {}};
  for (const auto& x : f.maps) g.maps.push_back(x.transpose());
  return g;
}

/// I(i) = D(e_i A), realized as the dual of the A^op-projective at i.
template <typename Scalar>
Representation<Scalar> injective(const AlgebraPtr<Scalar>& a, int i) {
  Representation<Scalar> d = dual(projective(a->opposite(), i));
  return Representation<Scalar>(a, d.dims(), d.arrow_maps());
}

template <typename Scalar>
Representation<Scalar> direct_sum(const std::vector<Representation<Scalar>>& ms) {
  if (ms.empty()) throw std::invalid_argument("direct_sum: empty list");
  const auto& a = ms.front().algebra();
  std::vector<int> dims(static_cast<std::size_t>(a->num_vertices()), 0);
  std::vector<int> summands;
  bool all_projective = true;
  for (const auto& m : ms) {
    require_same_algebra(ms.front(), m);
    for (int v = 0; v < a->num_vertices(); ++v) dims[static_cast<std::size_t>(v)] += m.dim(v);
    if (m.is_projective_sum()) summands.insert(summands.end(), m.projective_summands().begin(), m.projective_summands().end());
    else if (m.total_dim() != 0) all_projective = false;
  }
  std::vector<Matrix<Scalar>> maps;
  for (int arr = 0; arr < a->num_arrows(); ++arr) {
    std::vector<Matrix<Scalar>> blocks;
    for (const auto& m : ms) blocks.push_back(m.arrow_map(arr));
    maps.push_back(block_diagonal(blocks));
  }
  if (!all_projective) summands.clear();
  return Representation<Scalar>(a, std::move(dims), std::move(maps), std::move(summands));
}

template <typename Scalar>
Representation<Scalar> power(const Representation<Scalar>& m, int t) {
  if (t <= 0) return zero_module(m.algebra());
  return direct_sum(std::vector<Representation<Scalar>>(static_cast<std::size_t>(t), m));
}

/// ⊕_k P(summands[k]) in the given block order.
template <typename Scalar>
Representation<Scalar> projective_sum(const AlgebraPtr<Scalar>& a, const std::vector<int>& summands) {
  if (summands.empty()) return zero_module(a);
  std::vector<Representation<Scalar>> ps;
  for (int i : summands) ps.push_back(projective(a, i));
  return direct_sum(ps);
}

/// Same as projective_sum but with the injectives I(i).
template <typename Scalar>
Representation<Scalar> injective_sum(const AlgebraPtr<Scalar>& a, const std::vector<int>& summands) {
  if (summands.empty()) return zero_module(a);
  std::vector<Representation<Scalar>> is;
  for (int i : summands) is.push_back(injective(a, i));
  return direct_sum(is);
}

// ---------------------------------------------------------------------------
// Morphisms.

template <typename Scalar>
Morphism<Scalar> zero_morphism(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  Morphism<Scalar> f{m, n, {}};
  for (int v = 0; v < m.num_vertices(); ++v) f.maps.push_back(zeros<Scalar>(n.dim(v), m.dim(v)));
  return f;
}

template <typename Scalar>
Morphism<Scalar> identity_morphism(const Representation<Scalar>& m) {
  Morphism<Scalar> f{m, m, {}};
  for (int v = 0; v < m.num_vertices(); ++v) f.maps.push_back(identity<Scalar>(m.dim(v)));
  return f;
}

template <typename Scalar>
bool is_morphism(const Morphism<Scalar>& f) {
  const auto& q = f.source.algebra()->quiver();
  for (int v = 0; v < f.source.num_vertices(); ++v) {
    if (f.at(v).rows() != f.target.dim(v) || f.at(v).cols() != f.source.dim(v)) return false;
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    if (f.target.arrow_map(a) * f.at(ar.source) != f.at(ar.target) * f.source.arrow_map(a)) return false;
  }
  return true;
}

/// g ∘ f.
template <typename Scalar>
Morphism<Scalar> compose(const Morphism<Scalar>& g, const Morphism<Scalar>& f) {
  Morphism<Scalar> h{f.source, g.target, {}};
  for (int v = 0; v < f.source.num_vertices(); ++v) h.maps.push_back(g.at(v) * f.at(v));
  return h;
}

template <typename Scalar>
Morphism<Scalar> linear_combination(const std::vector<Morphism<Scalar>>& basis, const std::vector<Scalar>& coeffs,
                                    const Representation<Scalar>& m, const Representation<Scalar>& n) {
  Morphism<Scalar> f = zero_morphism(m, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    for (int v = 0; v < m.num_vertices(); ++v) f.maps[static_cast<std::size_t>(v)] += coeffs[k] * basis[k].at(v);
  }
  return f;
}

template <typename Scalar>
Morphism<Scalar> direct_sum(const std::vector<Morphism<Scalar>>& fs) {
  std::vector<Representation<Scalar>> src, tgt;
  for (const auto& f : fs) {
    src.push_back(f.source);
    tgt.push_back(f.target);
  }
  Morphism<Scalar> h{direct_sum(src), direct_sum(tgt), {}};
  for (int v = 0; v < h.source.num_vertices(); ++v) {
    std::vector<Matrix<Scalar>> blocks;
    for (const auto& f : fs) blocks.push_back(f.at(v));
    h.maps.push_back(block_diagonal(blocks));
  }
  return h;
}

template <typename Scalar>
int rank_of(const Morphism<Scalar>& f) {
  int r = 0;
  for (const auto& m : f.maps) r += static_cast<int>(rank<Scalar>(m));
  return r;
}

template <typename Scalar>
bool is_isomorphism(const Morphism<Scalar>& f) {
  if (f.source.dims() != f.target.dims()) return false;
  for (const auto& m : f.maps)
    if (!is_invertible<Scalar>(m)) return false;
  return true;
}

/// The morphism ⊕_k P(i_k) -> N sending the top generator e_{i_k} of block
/// k to generators[k] ∈ N_{i_k}.
template <typename Scalar>
Morphism<Scalar> from_projective_sum(const Representation<Scalar>& p, const Representation<Scalar>& n,
                                     const std::vector<Vector<Scalar>>& generators) {
  const auto& a = p.algebra();
  const auto& summands = p.projective_summands();
  if (summands.size() != generators.size()) throw std::invalid_argument("from_projective_sum: generator count");
  Morphism<Scalar> f = zero_morphism(p, n);
  for (int v = 0; v < a->num_vertices(); ++v) {
    Index col = 0;
    for (std::size_t k = 0; k < summands.size(); ++k) {
      for (int b : a->between(summands[k], v)) {
        f.maps[static_cast<std::size_t>(v)].col(col++) = path_matrix(n, a->basis_path(b)) * generators[k];
      }
    }
  }
  return f;
}

/// Basis of Hom_A(M, N): the intertwiner equations N_a f_s = f_t M_a solved
/// jointly via vec(X Y Z) = (Z^T ⊗ X) vec(Y); sums of projectives use the
/// direct description Hom(P(i), N) = N_i.
template <typename Scalar>
std::vector<Morphism<Scalar>> hom_basis(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  require_same_algebra(m, n);
  std::vector<Morphism<Scalar>> out;
  if (m.total_dim() == 0 || n.total_dim() == 0) return out;
  const int nv = m.num_vertices();
  if (m.is_projective_sum()) {
    // e_{i_k} ↦ j-th basis vector of N_{i_k}; the path b then goes to column j of N_b.
    const auto& a = m.algebra();
    const auto& summands = m.projective_summands();
    std::vector<Matrix<Scalar>> path_mats(static_cast<std::size_t>(a->dim()));
    std::vector<bool> have(static_cast<std::size_t>(a->dim()), false);
    std::vector<std::vector<Index>> col0(summands.size(), std::vector<Index>(static_cast<std::size_t>(nv), 0));
    std::vector<Index> used(static_cast<std::size_t>(nv), 0);
    for (std::size_t k = 0; k < summands.size(); ++k) {
      for (int v = 0; v < nv; ++v) {
        col0[k][static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(v)];
        for (int b : a->between(summands[k], v)) {
          if (!have[static_cast<std::size_t>(b)]) {
            path_mats[static_cast<std::size_t>(b)] = path_matrix(n, a->basis_path(b));
            have[static_cast<std::size_t>(b)] = true;
          }
          ++used[static_cast<std::size_t>(v)];
        }
      }
    }
    const Morphism<Scalar> zero = zero_morphism(m, n);
    for (std::size_t k = 0; k < summands.size(); ++k) {
      for (int j = 0; j < n.dim(summands[k]); ++j) {
        Morphism<Scalar> f = zero;
        for (int v = 0; v < nv; ++v) {
          Index col = col0[k][static_cast<std::size_t>(v)];
          for (int b : a->between(summands[k], v))
            f.maps[static_cast<std::size_t>(v)].col(col++) = path_mats[static_cast<std::size_t>(b)].col(j);
        }
        out.push_back(std::move(f));
      }
    }
    return out;
  }
  std::vector<Index> off(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) off[static_cast<std::size_t>(v) + 1] = off[static_cast<std::size_t>(v)] + Index(n.dim(v)) * m.dim(v);
  const Index unknowns = off.back();
  if (unknowns == 0) return out;
  const auto& q = m.algebra()->quiver();
  Index rows = 0;
  for (const auto& ar : q.arrows) rows += Index(n.dim(ar.target)) * m.dim(ar.source);
  Matrix<Scalar> eq = zeros<Scalar>(rows, unknowns);
  Index r0 = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    const int s = ar.source, t = ar.target;
    const Matrix<Scalar>& ma = m.arrow_map(a);
    const Matrix<Scalar>& na = n.arrow_map(a);
    const Index h = n.dim(t);
    // (I_{m_s} ⊗ N_a) vec f_s
    for (Index c = 0; c < m.dim(s); ++c)
      for (Index i = 0; i < na.rows(); ++i)
        for (Index j = 0; j < na.cols(); ++j)
          if (!is_zero(na(i, j))) eq(r0 + c * h + i, off[static_cast<std::size_t>(s)] + c * n.dim(s) + j) += na(i, j);
    // -(M_a^T ⊗ I_{n_t}) vec f_t
    for (Index c = 0; c < ma.cols(); ++c)
      for (Index k = 0; k < ma.rows(); ++k)
        if (!is_zero(ma(k, c)))
          for (Index i = 0; i < h; ++i) eq(r0 + c * h + i, off[static_cast<std::size_t>(t)] + k * h + i) -= ma(k, c);
    r0 += h * m.dim(s);
  }
  const Matrix<Scalar> ker = kernel_basis<Scalar>(eq);
  for (Index k = 0; k < ker.cols(); ++k) {
    Morphism<Scalar> f{m, n, {}};
    for (int v = 0; v < nv; ++v) {
      Matrix<Scalar> fv(n.dim(v), m.dim(v));
      for (Index c = 0; c < m.dim(v); ++c)
        for (Index i = 0; i < n.dim(v); ++i) fv(i, c) = ker(off[static_cast<std::size_t>(v)] + c * n.dim(v) + i, k);
      f.maps.push_back(std::move(fv));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <typename Scalar>
int hom_dim(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  if (m.is_projective_sum()) {
    int d = 0;
    for (int i : m.projective_summands()) d += n.dim(i);
    return d;
  }
  return static_cast<int>(hom_basis(m, n).size());
}

/// Action of an algebra element on ⊕_v M_v.
template <typename Scalar>
Matrix<Scalar> act(const Vector<Scalar>& x, const Representation<Scalar>& m) {
  const auto& a = *m.algebra();
  Matrix<Scalar> out = zeros<Scalar>(m.total_dim(), m.total_dim());
  for (int k = 0; k < a.dim(); ++k) {
    if (is_zero(x(k))) continue;
    const Path& p = a.basis_path(k);
    if (m.dim(p.source) == 0 || m.dim(p.target) == 0) continue;
    out.block(m.offset(p.target), m.offset(p.source), m.dim(p.target), m.dim(p.source)) += x(k) * path_matrix(m, p);
  }
  return out;
}

/// I_M = {a ∈ A : aM = 0}.
template <typename Scalar>
Ideal<Scalar> annihilator(const Representation<Scalar>& m) {
  const auto& a = *m.algebra();
  const Index n = m.total_dim();
  Matrix<Scalar> sys = zeros<Scalar>(n * n, a.dim());
  for (int k = 0; k < a.dim(); ++k) {
    const Matrix<Scalar> x = act(a.unit_vector(k), m);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) sys(j * n + i, k) = x(i, j);
  }
  return subspace_normal_form<Scalar>(kernel_basis<Scalar>(sys));
}

template <typename Scalar>
bool is_sincere(const Representation<Scalar>& m) {
  for (int d : m.dims())
    if (d == 0) return false;
  return true;
}

template <typename Scalar>
bool is_faithful(const Representation<Scalar>& m) {
  return annihilator(m).dim() == 0;
}

// ---------------------------------------------------------------------------
// Subquotients. A subrepresentation is given by column bases u[v] ⊆ M_v
// that are stable under the arrow maps.

template <typename Scalar>
Morphism<Scalar> subrepresentation(const Representation<Scalar>& m, const std::vector<Matrix<Scalar>>& u) {
  const auto& q = m.algebra()->quiver();
  std::vector<int> dims;
  for (const auto& b : u) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Matrix<Scalar>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    const auto& us = u[static_cast<std::size_t>(ar.source)];
    const auto& ut = u[static_cast<std::size_t>(ar.target)];
    if (us.cols() == 0 || ut.cols() == 0) {
      maps.push_back(zeros<Scalar>(ut.cols(), us.cols()));
      if (us.cols() != 0 && !is_zero_matrix(m.arrow_map(a) * us)) throw std::logic_error("subspace is not a submodule");
      continue;
    }
    maps.push_back(solve_exact<Scalar>(ut, Matrix<Scalar>(m.arrow_map(a) * us)));
  }
  Representation<Scalar> sub(m.algebra(), std::move(dims), std::move(maps));
  return Morphism<Scalar>{sub, m, u};
}

/// M / U with its projection. The quotient basis at v is the standard basis
/// vectors completing u[v] (lowest indices first).
template <typename Scalar>
Morphism<Scalar> quotient_representation(const Representation<Scalar>& m, const std::vector<Matrix<Scalar>>& u) {
  const auto& q = m.algebra()->quiver();
  const int nv = m.num_vertices();
  std::vector<Matrix<Scalar>> proj(static_cast<std::size_t>(nv));
  std::vector<Matrix<Scalar>> lift(static_cast<std::size_t>(nv));
  std::vector<int> dims;
  for (int v = 0; v < nv; ++v) {
    const auto& b = u[static_cast<std::size_t>(v)];
    const auto comp = complement_indices<Scalar>(b);
    const auto c = static_cast<Index>(comp.size());
    Matrix<Scalar> full(m.dim(v), b.cols() + c);
    full.leftCols(b.cols()) = b;
    Matrix<Scalar> e = zeros<Scalar>(m.dim(v), c);
    for (Index k = 0; k < c; ++k) e(comp[static_cast<std::size_t>(k)], k) = Scalar(1);
    full.rightCols(c) = e;
    proj[static_cast<std::size_t>(v)] = inverse<Scalar>(full).bottomRows(c);
    lift[static_cast<std::size_t>(v)] = e;
    dims.push_back(static_cast<int>(c));
  }
  std::vector<Matrix<Scalar>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    maps.push_back(proj[static_cast<std::size_t>(ar.target)] * m.arrow_map(a) * lift[static_cast<std::size_t>(ar.source)]);
  }
  Representation<Scalar> quo(m.algebra(), std::move(dims), std::move(maps));
  return Morphism<Scalar>{m, quo, std::move(proj)};
}

/// ker f with its inclusion into f.source.
template <typename Scalar>
Morphism<Scalar> kernel(const Morphism<Scalar>& f) {
  std::vector<Matrix<Scalar>> u;
  for (const auto& x : f.maps) u.push_back(kernel_basis<Scalar>(x));
  return subrepresentation(f.source, u);
}

/// im f with its inclusion into f.target.
template <typename Scalar>
Morphism<Scalar> image(const Morphism<Scalar>& f) {
  std::vector<Matrix<Scalar>> u;
  for (const auto& x : f.maps) u.push_back(column_basis<Scalar>(x));
  return subrepresentation(f.target, u);
}

/// Cok f with its projection from f.target.
template <typename Scalar>
Morphism<Scalar> cokernel(const Morphism<Scalar>& f) {
  std::vector<Matrix<Scalar>> u;
  for (const auto& x : f.maps) u.push_back(column_basis<Scalar>(x));
  return quotient_representation(f.target, u);
}

/// rad M = Σ_a im M_a at every vertex.
template <typename Scalar>
std::vector<Matrix<Scalar>> radical_subspaces(const Representation<Scalar>& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix<Scalar>> u;
  for (int v = 0; v < m.num_vertices(); ++v) {
    std::vector<Matrix<Scalar>> parts;
    Index cols = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows[static_cast<std::size_t>(a)].target != v) continue;
      parts.push_back(m.arrow_map(a));
      cols += m.arrow_map(a).cols();
    }
    Matrix<Scalar> all(m.dim(v), cols);
    Index c = 0;
    for (const auto& p : parts) {
      all.middleCols(c, p.cols()) = p;
      c += p.cols();
    }
    u.push_back(column_basis<Scalar>(all));
  }
  return u;
}

template <typename Scalar>
Morphism<Scalar> radical_of(const Representation<Scalar>& m) {
  return subrepresentation(m, radical_subspaces(m));
}

/// top M = M / rad M with the projection.
template <typename Scalar>
Morphism<Scalar> top(const Representation<Scalar>& m) {
  return quotient_representation(m, radical_subspaces(m));
}

/// soc M = joint kernel of the arrows leaving each vertex.
template <typename Scalar>
Morphism<Scalar> socle(const Representation<Scalar>& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix<Scalar>> u;
  for (int v = 0; v < m.num_vertices(); ++v) {
    Index rows = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrows[static_cast<std::size_t>(a)].source == v) rows += m.arrow_map(a).rows();
    Matrix<Scalar> stacked(rows, m.dim(v));
    Index r = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows[static_cast<std::size_t>(a)].source != v) continue;
      stacked.middleRows(r, m.arrow_map(a).rows()) = m.arrow_map(a);
      r += m.arrow_map(a).rows();
    }
    u.push_back(kernel_basis<Scalar>(stacked));
  }
  return subrepresentation(m, u);
}

/// Projective cover P0 -> M. The top generators at v are the standard basis
/// vectors of M_v completing rad(M)_v (echelon pivots); vertices in order.
template <typename Scalar>
Morphism<Scalar> projective_cover(const Representation<Scalar>& m) {
  const auto rad = radical_subspaces(m);
  std::vector<int> summands;
  std::vector<Vector<Scalar>> gens;
  for (int v = 0; v < m.num_vertices(); ++v) {
    for (Index j : complement_indices<Scalar>(rad[static_cast<std::size_t>(v)])) {
      summands.push_back(v);
      Vector<Scalar> g = Vector<Scalar>::Constant(m.dim(v), Scalar(0));
      g(j) = Scalar(1);
      gens.push_back(std::move(g));
    }
  }
  return from_projective_sum(projective_sum(m.algebra(), summands), m, gens);
}

/// Injective envelope M -> I0, by duality with covers over A^op.
template <typename Scalar>
Morphism<Scalar> injective_envelope(const Representation<Scalar>& m) {
  const Morphism<Scalar> cover = projective_cover(dual(m));
  Morphism<Scalar> d = dual(cover);
  std::vector<int> summands = cover.source.projective_summands();
  Morphism<Scalar> out{m, injective_sum(m.algebra(), summands), d.maps};
  return out;
}

template <typename Scalar>
bool is_projective(const Representation<Scalar>& m) {
  if (m.total_dim() == 0 || m.is_projective_sum()) return true;
  return projective_cover(m).source.total_dim() == m.total_dim();
}

template <typename Scalar>
bool is_injective(const Representation<Scalar>& m) {
  return is_projective(dual(m));
}

/// Ω M = ker(P0 -> M), with the inclusion into P0.
template <typename Scalar>
Morphism<Scalar> syzygy(const Representation<Scalar>& m) {
  return kernel(projective_cover(m));
}

template <typename Scalar>
int ext1_dim(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  require_same_algebra(m, n);
  if (m.total_dim() == 0 || n.total_dim() == 0) return 0;
  const Morphism<Scalar> inc = syzygy(m);
  return hom_dim(inc.source, n) - hom_dim(inc.target, n) + hom_dim(m, n);
}

// ---------------------------------------------------------------------------
// Isomorphism and summands (randomized with certificates on success).

template <typename Scalar>
Morphism<Scalar> random_morphism(const std::vector<Morphism<Scalar>>& basis, const Representation<Scalar>& m,
                                 const Representation<Scalar>& n, Rng& rng, long long range = 1000) {
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < basis.size(); ++k) c.push_back(sample_scalar<Scalar>(rng, range));
  return linear_combination(basis, c, m, n);
}

/// M ≅ N. Random elements of Hom(M,N) first, then an exhaustive search over
/// coefficients in {-1,0,1,2} when Hom has at most 6 parameters.
template <typename Scalar>
bool iso_test(const Representation<Scalar>& m, const Representation<Scalar>& n, std::uint64_t seed = 7) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  const auto basis = hom_basis(m, n);
  if (basis.empty()) return false;
  Rng rng(seed);
  for (int trial = 0; trial < 8; ++trial) {
    if (is_isomorphism(random_morphism(basis, m, n, rng))) return true;
  }
  if (basis.size() > 6) return false;
  std::vector<int> digits(basis.size(), 0);
  const int grid[4] = {-1, 0, 1, 2};
  while (true) {
    std::vector<Scalar> c;
    for (int d : digits) c.push_back(Scalar(grid[d]));
    if (is_isomorphism(linear_combination(basis, c, m, n))) return true;
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 3) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return false;
}

/// Certifies that X is isomorphic to a direct summand of Y by finding
/// f: X -> Y, g: Y -> X with g∘f invertible. A false answer is not a proof.
template <typename Scalar>
bool is_summand(const Representation<Scalar>& x, const Representation<Scalar>& y, std::uint64_t seed = 11,
                int trials = 4) {
  if (x.total_dim() == 0) return true;
  for (int v = 0; v < x.num_vertices(); ++v)
    if (x.dim(v) > y.dim(v)) return false;
  const auto fs = hom_basis(x, y);
  const auto gs = hom_basis(y, x);
  if (fs.empty() || gs.empty()) return false;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto f = random_morphism(fs, x, y, rng);
    const auto g = random_morphism(gs, y, x, rng);
    if (is_isomorphism(compose(g, f))) return true;
  }
  return false;
}

struct ProjDim {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::Finite;
  int value = 0;  ///< the dimension, or the lower bound for AtLeast

  static ProjDim finite(int k) { return {Kind::Finite, k}; }
  static ProjDim infinite() { return {Kind::Infinite, 0}; }
  static ProjDim at_least(int k) { return {Kind::AtLeast, k}; }
  bool at_most(int k) const { return kind == Kind::Finite && value <= k; }
  std::string str() const {
    switch (kind) {
      case Kind::Finite: return std::to_string(value);
      case Kind::Infinite: return "infinite";
      case Kind::AtLeast: return ">=" + std::to_string(value);
    }
    return "?";
  }
  friend bool operator==(const ProjDim& a, const ProjDim& b) { return a.kind == b.kind && a.value == b.value; }
};

/// Projective dimension from minimal syzygies Ω^0 = M, Ω^1, ... Infinite is
/// certified when a nonzero Ω^i recurs as a direct summand of a later Ω^j:
/// minimal syzygies commute with sums, so it then recurs forever.
template <typename Scalar>
ProjDim proj_dim(const Representation<Scalar>& m, int cap = 10) {
  if (cap < 1) throw std::invalid_argument("proj_dim: cap must be >= 1");
  if (m.total_dim() == 0) return ProjDim::finite(0);
  std::vector<Representation<Scalar>> syz{m};
  for (int k = 0; k <= cap; ++k) {
    const Representation<Scalar>& cur = syz.back();
    const Morphism<Scalar> inc = syzygy(cur);
    if (inc.source.total_dim() == 0) return ProjDim::finite(k);
    for (std::size_t i = 0; i < syz.size(); ++i) {
      if (is_summand(syz[i], inc.source)) return ProjDim::infinite();
    }
    syz.push_back(inc.source);
  }
  return ProjDim::at_least(cap + 1);
}

}  // namespace taureg
