#pragma once

// Finite-dimensional quotients A = KQ/I of path algebras as structure-constant
// algebras with a path basis, plus two-sided ideals, quotients and A^op.
//
// Left modules throughout: P(i) = A e_i is spanned by the basis paths
// starting at i, and e_j A e_i by the basis paths from i to j.

#include "taureg/linalg.hpp"
#include "taureg/quiver.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taureg {

class NotFiniteDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
using SparseVector = std::vector<std::pair<int, Scalar>>;

template <typename Scalar>
class Algebra : public std::enable_shared_from_this<Algebra<Scalar>> {
 public:
  struct Parts {
    QuiverPresentation presentation;
    std::vector<Path> basis;
    std::vector<std::vector<SparseVector<Scalar>>> products;
    int max_length = 0;
  };

  explicit Algebra(Parts parts);

  const QuiverPresentation& presentation() const { return parts_.presentation; }
  const Quiver& quiver() const { return parts_.presentation.quiver; }
  int dim() const { return static_cast<int>(parts_.basis.size()); }
  int num_vertices() const { return quiver().num_vertices(); }
  int num_arrows() const { return quiver().num_arrows(); }
  /// Longest basis path; rad(A)^(max_length+1) = 0.
  int max_length() const { return parts_.max_length; }

  const std::vector<Path>& basis() const { return parts_.basis; }
  const Path& basis_path(int k) const { return parts_.basis[static_cast<std::size_t>(k)]; }
  int idempotent(int v) const { return idempotents_[static_cast<std::size_t>(v)]; }
  int arrow_element(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  std::optional<int> basis_index(const Path& p) const;

  /// Basis indices of e_target A e_source, in basis order.
  const std::vector<int>& between(int source, int target) const {
    return between_[static_cast<std::size_t>(source * num_vertices() + target)];
  }
  /// Basis indices of the paths starting at v (a basis of P(v) = A e_v).
  const std::vector<int>& starting_at(int v) const { return starting_[static_cast<std::size_t>(v)]; }
  /// Basis indices of the paths ending at v (a basis of e_v A).
  const std::vector<int>& ending_at(int v) const { return ending_[static_cast<std::size_t>(v)]; }
  /// Position of basis element k inside between(source(k), target(k)).
  int position(int k) const { return position_[static_cast<std::size_t>(k)]; }

  const SparseVector<Scalar>& product(int i, int j) const {
    return parts_.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  Vector<Scalar> unit_vector(int k) const {
    Vector<Scalar> v = Vector<Scalar>::Constant(dim(), Scalar(0));
    v(k) = Scalar(1);
    return v;
  }
  Vector<Scalar> one() const;
  Vector<Scalar> multiply(const Vector<Scalar>& x, const Vector<Scalar>& y) const;
  /// Residue of a path of the quiver (product of its arrows).
  Vector<Scalar> path_element(const Path& p) const;
  Vector<Scalar> element(const RelationPoly& combination) const;

  /// A^op: same basis with reversed paths and transposed structure constants.
  /// Cached; (A^op)^op is the original object while it is alive.
  std::shared_ptr<const Algebra<Scalar>> opposite() const;

  std::string field_name() const { return FieldTraits<Scalar>::name(); }

 private:
  Parts parts_;
  std::vector<int> idempotents_;
  std::vector<int> arrows_;
  std::vector<std::vector<int>> between_;
  std::vector<std::vector<int>> starting_;
  std::vector<std::vector<int>> ending_;
  std::vector<int> position_;
  std::map<Path, int> index_;

  mutable std::once_flag opposite_once_;
  mutable std::shared_ptr<const Algebra<Scalar>> opposite_;
  mutable std::weak_ptr<const Algebra<Scalar>> opposite_of_;

  template <typename S>
  friend std::shared_ptr<const Algebra<S>> make_opposite(const Algebra<S>& a);
};

template <typename Scalar>
using AlgebraPtr = std::shared_ptr<const Algebra<Scalar>>;

// ---------------------------------------------------------------------------

template <typename Scalar>
Algebra<Scalar>::Algebra(Parts parts) : parts_(std::move(parts)) {
  const int n = num_vertices();
  idempotents_.assign(static_cast<std::size_t>(n), -1);
  arrows_.assign(static_cast<std::size_t>(num_arrows()), -1);
  between_.assign(static_cast<std::size_t>(n * n), {});
  starting_.assign(static_cast<std::size_t>(n), {});
  ending_.assign(static_cast<std::size_t>(n), {});
  for (int k = 0; k < dim(); ++k) {
    const Path& p = basis_path(k);
    index_[p] = k;
    position_.push_back(static_cast<int>(between_[static_cast<std::size_t>(p.source * n + p.target)].size()));
    if (p.length() == 0) idempotents_[static_cast<std::size_t>(p.source)] = k;
    if (p.length() == 1) arrows_[static_cast<std::size_t>(p.arrows[0])] = k;
    between_[static_cast<std::size_t>(p.source * n + p.target)].push_back(k);
    starting_[static_cast<std::size_t>(p.source)].push_back(k);
    ending_[static_cast<std::size_t>(p.target)].push_back(k);
  }
  for (int v = 0; v < n; ++v) {
    if (idempotents_[static_cast<std::size_t>(v)] < 0) throw std::logic_error("algebra basis lacks an idempotent");
  }
  for (int a = 0; a < num_arrows(); ++a) {
    if (arrows_[static_cast<std::size_t>(a)] < 0) throw std::logic_error("algebra basis lacks an arrow");
  }
}

template <typename Scalar>
std::optional<int> Algebra<Scalar>::basis_index(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <typename Scalar>
Vector<Scalar> Algebra<Scalar>::one() const {
  Vector<Scalar> v = Vector<Scalar>::Constant(dim(), Scalar(0));
  for (int i : idempotents_) v(i) = Scalar(1);
  return v;
}

template <typename Scalar>
Vector<Scalar> Algebra<Scalar>::multiply(const Vector<Scalar>& x, const Vector<Scalar>& y) const {
  Vector<Scalar> out = Vector<Scalar>::Constant(dim(), Scalar(0));
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y(j))) continue;
      const Scalar c = x(i) * y(j);
      for (const auto& [k, s] : product(i, j)) out(k) += c * s;
    }
  }
  return out;
}

template <typename Scalar>
Vector<Scalar> Algebra<Scalar>::path_element(const Path& p) const {
  if (p.length() == 0) return unit_vector(idempotent(p.source));
  Vector<Scalar> v = unit_vector(arrow_element(p.arrows.back()));
  for (auto it = p.arrows.rbegin() + 1; it != p.arrows.rend(); ++it) v = multiply(unit_vector(arrow_element(*it)), v);
  return v;
}

template <typename Scalar>
Vector<Scalar> Algebra<Scalar>::element(const RelationPoly& combination) const {
  Vector<Scalar> v = Vector<Scalar>::Constant(dim(), Scalar(0));
  for (const auto& t : combination.terms) v += FieldTraits<Scalar>::from_rational(t.coefficient) * path_element(t.path);
  return v;
}

template <typename Scalar>
std::shared_ptr<const Algebra<Scalar>> make_opposite(const Algebra<Scalar>& a) {
  typename Algebra<Scalar>::Parts parts;
  parts.presentation.quiver = a.quiver();
  for (auto& arrow : parts.presentation.quiver.arrows) std::swap(arrow.source, arrow.target);
  for (const auto& r : a.presentation().relations) {
    RelationPoly rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coefficient, reversed(t.path)});
    parts.presentation.relations.push_back(std::move(rr));
  }
  for (const auto& p : a.basis()) parts.basis.push_back(reversed(p));
  const auto n = static_cast<std::size_t>(a.dim());
  parts.products.assign(n, std::vector<SparseVector<Scalar>>(n));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      parts.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.product(j, i);
  parts.max_length = a.max_length();
  return std::make_shared<const Algebra<Scalar>>(std::move(parts));
}

template <typename Scalar>
std::shared_ptr<const Algebra<Scalar>> Algebra<Scalar>::opposite() const {
  if (auto back = opposite_of_.lock()) return back;
  std::call_once(opposite_once_, [this] {
    auto op = make_opposite(*this);
    try {
      op->opposite_of_ = this->shared_from_this();
    } catch (const std::bad_weak_ptr&) {
      // Not owned by a shared_ptr; the opposite then builds its own opposite.
    }
    opposite_ = op;
  });
  return opposite_;
}

// ---------------------------------------------------------------------------
// Construction from a quiver with relations.

namespace detail {

// Incrementally maintained fully reduced echelon basis of a subspace of
// K^n whose pivot in every row is the highest nonzero coordinate.
template <typename Scalar>
class HighPivotEchelon {
 public:
  explicit HighPivotEchelon(Index n) : n_(n) {}

  void reduce(Vector<Scalar>& v) const {
    for (const auto& [p, row] : rows_) {
      if (is_zero(v(p))) continue;
      const Scalar f = v(p);
      v -= f * row;
    }
  }

  /// Adds v to the span; returns false if v was already in it.
  bool insert(Vector<Scalar> v) {
    reduce(v);
    Index p = -1;
    for (Index i = n_ - 1; i >= 0; --i) {
      if (!is_zero(v(i))) {
        p = i;
        break;
      }
    }
    if (p < 0) return false;
    v /= Scalar(v(p));
    for (auto& [q, row] : rows_) {
      if (!is_zero(row(p))) {
        const Scalar f = row(p);
        row -= f * v;
      }
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  bool is_pivot(Index i) const { return rows_.count(i) != 0; }
  std::size_t size() const { return rows_.size(); }
  const std::map<Index, Vector<Scalar>>& rows() const { return rows_; }

 private:
  Index n_;
  std::map<Index, Vector<Scalar>> rows_;
};

inline std::vector<Path> enumerate_paths(const Quiver& q, int max_length, std::size_t budget) {
  std::vector<Path> paths;
  for (int v = 0; v < q.num_vertices(); ++v) paths.push_back(Path::trivial(v));
  std::size_t level_begin = 0;
  std::size_t level_end = paths.size();
  for (int len = 1; len <= max_length; ++len) {
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (auto p = concatenate(Path::of_arrow(q, a), paths[k])) {
          paths.push_back(std::move(*p));
          if (paths.size() > budget) throw NotFiniteDimensional("path enumeration exceeds the budget");
        }
      }
    }
    level_begin = level_end;
    level_end = paths.size();
  }
  return paths;
}

}  // namespace detail

/// Builds KQ/I. The ideal is computed inside the truncation KQ/J^L for
/// increasing L until every path of length L-1 lies in I + J^L; then
/// A = KQ/I provided I contains all sufficiently long paths (an admissible
/// ideal, which includes every homogeneous presentation of a finite-
/// dimensional algebra). Throws NotFiniteDimensional at max_len.
template <typename Scalar>
AlgebraPtr<Scalar> build_algebra(const QuiverPresentation& qp, int max_len = 30,
                                 std::size_t path_budget = 200000) {
  if (max_len < 1) throw std::invalid_argument("build_algebra: max_len must be >= 1");
  const Quiver& q = qp.quiver;
  for (const auto& r : qp.relations) {
    for (const auto& t : r.terms) {
      if (t.path.length() < 2) throw std::invalid_argument("relation term of length < 2");
      if (t.path.source != r.source() || t.path.target != r.target())
        throw std::invalid_argument("relation terms are not parallel");
    }
  }
  for (int trunc = 2; trunc <= max_len + 1; ++trunc) {
    const std::vector<Path> paths = detail::enumerate_paths(q, trunc - 1, path_budget);
    const auto n = static_cast<Index>(paths.size());
    std::map<Path, Index> index;
    for (Index k = 0; k < n; ++k) index[paths[static_cast<std::size_t>(k)]] = k;

    auto vector_of = [&](const RelationPoly& r) {
      Vector<Scalar> v = Vector<Scalar>::Constant(n, Scalar(0));
      for (const auto& t : r.terms) {
        auto it = index.find(t.path);
        if (it != index.end()) v(it->second) += FieldTraits<Scalar>::from_rational(t.coefficient);
      }
      return v;
    };
    // Multiplies a combination of paths by an arrow on one side, truncating.
    auto times_arrow = [&](const Vector<Scalar>& v, int a, bool on_left) {
      Vector<Scalar> out = Vector<Scalar>::Constant(n, Scalar(0));
      const Path arrow = Path::of_arrow(q, a);
      for (Index k = 0; k < n; ++k) {
        if (is_zero(v(k))) continue;
        const Path& p = paths[static_cast<std::size_t>(k)];
        auto prod = on_left ? concatenate(arrow, p) : concatenate(p, arrow);
        if (!prod) continue;
        auto it = index.find(*prod);
        if (it != index.end()) out(it->second) += v(k);
      }
      return out;
    };

    detail::HighPivotEchelon<Scalar> ideal(n);
    std::vector<Vector<Scalar>> queue;
    for (const auto& r : qp.relations) queue.push_back(vector_of(r));
    while (!queue.empty()) {
      Vector<Scalar> v = std::move(queue.back());
      queue.pop_back();
      if (!ideal.insert(v)) continue;
      for (int a = 0; a < q.num_arrows(); ++a) {
        queue.push_back(times_arrow(v, a, true));
        queue.push_back(times_arrow(v, a, false));
      }
    }

    bool stable = true;
    for (Index k = 0; k < n && stable; ++k) {
      if (paths[static_cast<std::size_t>(k)].length() != trunc - 1) continue;
      Vector<Scalar> v = Vector<Scalar>::Constant(n, Scalar(0));
      v(k) = Scalar(1);
      ideal.reduce(v);
      stable = is_zero_matrix(v);
    }
    if (!stable) continue;

    typename Algebra<Scalar>::Parts parts;
    parts.presentation = qp;
    std::vector<int> to_basis(static_cast<std::size_t>(n), -1);
    for (Index k = 0; k < n; ++k) {
      if (ideal.is_pivot(k)) continue;
      to_basis[static_cast<std::size_t>(k)] = static_cast<int>(parts.basis.size());
      parts.basis.push_back(paths[static_cast<std::size_t>(k)]);
      parts.max_length = std::max(parts.max_length, paths[static_cast<std::size_t>(k)].length());
    }
    const std::size_t d = parts.basis.size();
    parts.products.assign(d, std::vector<SparseVector<Scalar>>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        auto prod = concatenate(parts.basis[i], parts.basis[j]);
        if (!prod) continue;
        auto it = index.find(*prod);
        if (it == index.end()) continue;
        Vector<Scalar> v = Vector<Scalar>::Constant(n, Scalar(0));
        v(it->second) = Scalar(1);
        ideal.reduce(v);
        for (Index k = 0; k < n; ++k) {
          if (is_zero(v(k))) continue;
          const int b = to_basis[static_cast<std::size_t>(k)];
          if (b < 0) throw std::logic_error("build_algebra: reduction left a pivot path");
          parts.products[i][j].emplace_back(b, v(k));
        }
      }
    }
    auto algebra = std::make_shared<const Algebra<Scalar>>(std::move(parts));
    if (algebra->dim() <= 64) {
      for (int i = 0; i < algebra->dim(); ++i) {
        for (int j = 0; j < algebra->dim(); ++j) {
          const Vector<Scalar> ij = algebra->multiply(algebra->unit_vector(i), algebra->unit_vector(j));
          for (int k = 0; k < algebra->dim(); ++k) {
            const Vector<Scalar> jk = algebra->multiply(algebra->unit_vector(j), algebra->unit_vector(k));
            if (algebra->multiply(ij, algebra->unit_vector(k)) != algebra->multiply(algebra->unit_vector(i), jk)) {
              throw std::logic_error("build_algebra: multiplication is not associative");
            }
          }
        }
      }
    }
    return algebra;
  }
  throw NotFiniteDimensional("not finite-dimensional within max_len = " + std::to_string(max_len));
}

// ---------------------------------------------------------------------------
// Two-sided ideals.

/// A subspace of A kept as a reduced column echelon basis against the
/// ordered basis of A, so equal ideals have equal spans.
template <typename Scalar>
struct Ideal {
  Matrix<Scalar> span;  ///< dim(A) x dim(I)

  Index dim() const { return span.cols(); }
  bool contains(const Vector<Scalar>& x) const { return in_column_space<Scalar>(span, Matrix<Scalar>(x)); }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.span.rows() == b.span.rows() && a.span.cols() == b.span.cols() && a.span == b.span;
  }
};

template <typename Scalar>
Ideal<Scalar> subspace_normal_form(const Matrix<Scalar>& vectors) {
  const auto ech = row_echelon<Scalar>(Matrix<Scalar>(vectors.transpose()));
  return Ideal<Scalar>{Matrix<Scalar>(ech.reduced.topRows(ech.rank()).transpose())};
}

template <typename Scalar>
Ideal<Scalar> zero_ideal(const Algebra<Scalar>& a) {
  return Ideal<Scalar>{zeros<Scalar>(a.dim(), 0)};
}

template <typename Scalar>
Ideal<Scalar> whole_algebra(const Algebra<Scalar>& a) {
  return Ideal<Scalar>{identity<Scalar>(a.dim())};
}

/// span of the basis paths of positive length.
template <typename Scalar>
Ideal<Scalar> radical(const Algebra<Scalar>& a) {
  std::vector<int> idx;
  for (int k = 0; k < a.dim(); ++k)
    if (a.basis_path(k).length() >= 1) idx.push_back(k);
  Matrix<Scalar> m = zeros<Scalar>(a.dim(), static_cast<Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) m(idx[c], static_cast<Index>(c)) = Scalar(1);
  return subspace_normal_form<Scalar>(m);
}

/// Two-sided ideal generated by the given elements.
template <typename Scalar>
Ideal<Scalar> generate_ideal(const Algebra<Scalar>& a, const std::vector<Vector<Scalar>>& generators) {
  detail::HighPivotEchelon<Scalar> span(a.dim());
  std::vector<Vector<Scalar>> queue = generators;
  while (!queue.empty()) {
    Vector<Scalar> v = std::move(queue.back());
    queue.pop_back();
    if (!span.insert(v)) continue;
    for (int k = 0; k < a.dim(); ++k) {
      queue.push_back(a.multiply(a.unit_vector(k), v));
      queue.push_back(a.multiply(v, a.unit_vector(k)));
    }
  }
  Matrix<Scalar> m = zeros<Scalar>(a.dim(), static_cast<Index>(span.size()));
  Index c = 0;
  for (const auto& [p, row] : span.rows()) m.col(c++) = row;
  return subspace_normal_form<Scalar>(m);
}

template <typename Scalar>
Ideal<Scalar> intersect(const Ideal<Scalar>& i, const Ideal<Scalar>& j) {
  if (i.span.rows() != j.span.rows()) throw std::invalid_argument("intersect: ideals of different algebras");
  return subspace_normal_form<Scalar>(intersect_column_spaces<Scalar>(i.span, j.span));
}

template <typename Scalar>
bool is_two_sided(const Algebra<Scalar>& a, const Ideal<Scalar>& ideal) {
  for (Index c = 0; c < ideal.dim(); ++c) {
    const Vector<Scalar> x = ideal.span.col(c);
    for (int k = 0; k < a.dim(); ++k) {
      if (!ideal.contains(a.multiply(a.unit_vector(k), x)) || !ideal.contains(a.multiply(x, a.unit_vector(k))))
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quotients B = A/I.

template <typename Scalar>
struct QuotientAlgebra {
  AlgebraPtr<Scalar> algebra;
  std::vector<int> vertex_map;  ///< A-vertex -> B-vertex, -1 when e_v ∈ I
  std::vector<int> arrow_map;   ///< A-arrow -> B-arrow, -1 when not a generator of B
  Matrix<Scalar> projection;    ///< dim(B) x dim(A), the algebra map A -> B
};

/// B = A/I presented again as a quiver with relations. B's arrows are the
/// A-arrows whose residues are independent modulo rad(B)^2 (greedy in
/// arrow order) and its relations are the kernel of KQ_B -> B.
template <typename Scalar>
QuotientAlgebra<Scalar> quotient_algebra(const AlgebraPtr<Scalar>& a, const Ideal<Scalar>& ideal) {
  if (!is_two_sided(*a, ideal)) throw std::invalid_argument("quotient_algebra: not a two-sided ideal");
  if (ideal.dim() == a->dim()) throw std::invalid_argument("quotient_algebra: the ideal is the whole algebra");

  // Raw quotient on the complement of the ideal's pivot coordinates.
  const auto ech = row_echelon<Scalar>(Matrix<Scalar>(ideal.span.transpose()));
  std::vector<bool> pivot(static_cast<std::size_t>(a->dim()), false);
  for (Index p : ech.pivots) pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> keep;
  for (int k = 0; k < a->dim(); ++k)
    if (!pivot[static_cast<std::size_t>(k)]) keep.push_back(k);
  const auto raw_dim = static_cast<Index>(keep.size());
  auto project = [&](Vector<Scalar> x) {
    for (Index r = 0; r < ech.rank(); ++r) {
      const Index p = ech.pivots[static_cast<std::size_t>(r)];
      if (is_zero(x(p))) continue;
      const Scalar f = x(p);
      x -= f * Vector<Scalar>(ech.reduced.row(r).transpose());
    }
    Vector<Scalar> y(raw_dim);
    for (Index c = 0; c < raw_dim; ++c) y(c) = x(keep[static_cast<std::size_t>(c)]);
    return y;
  };
  auto lift = [&](const Vector<Scalar>& y) {
    Vector<Scalar> x = Vector<Scalar>::Constant(a->dim(), Scalar(0));
    for (Index c = 0; c < raw_dim; ++c) x(keep[static_cast<std::size_t>(c)]) = y(c);
    return x;
  };
  auto raw_multiply = [&](const Vector<Scalar>& y, const Vector<Scalar>& z) {
    return project(a->multiply(lift(y), lift(z)));
  };

  QuotientAlgebra<Scalar> out;
  QuiverPresentation qb;
  out.vertex_map.assign(static_cast<std::size_t>(a->num_vertices()), -1);
  for (int v = 0; v < a->num_vertices(); ++v) {
    if (ideal.contains(a->unit_vector(a->idempotent(v)))) continue;
    out.vertex_map[static_cast<std::size_t>(v)] = qb.quiver.num_vertices();
    qb.quiver.vertices.push_back(a->quiver().vertices[static_cast<std::size_t>(v)]);
  }

  Matrix<Scalar> rad2(raw_dim, 0);
  {
    std::vector<Vector<Scalar>> cols;
    for (int k = 0; k < a->dim(); ++k)
      if (a->basis_path(k).length() >= 2) cols.push_back(project(a->unit_vector(k)));
    rad2 = zeros<Scalar>(raw_dim, static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) rad2.col(static_cast<Index>(c)) = cols[c];
  }
  Matrix<Scalar> span = rad2;
  std::vector<Vector<Scalar>> b_arrow_images;
  out.arrow_map.assign(static_cast<std::size_t>(a->num_arrows()), -1);
  for (int arr = 0; arr < a->num_arrows(); ++arr) {
    const Arrow& ar = a->quiver().arrows[static_cast<std::size_t>(arr)];
    const int s = out.vertex_map[static_cast<std::size_t>(ar.source)];
    const int t = out.vertex_map[static_cast<std::size_t>(ar.target)];
    if (s < 0 || t < 0) continue;
    Vector<Scalar> img = project(a->unit_vector(a->arrow_element(arr)));
    if (in_column_space<Scalar>(span, Matrix<Scalar>(img))) continue;
    Matrix<Scalar> grown(raw_dim, span.cols() + 1);
    grown.leftCols(span.cols()) = span;
    grown.col(span.cols()) = img;
    span = std::move(grown);
    out.arrow_map[static_cast<std::size_t>(arr)] = qb.quiver.num_arrows();
    qb.quiver.arrows.push_back({ar.name, s, t});
    b_arrow_images.push_back(img);
  }

  std::vector<Vector<Scalar>> b_idempotents;
  for (int v = 0; v < a->num_vertices(); ++v)
    if (out.vertex_map[static_cast<std::size_t>(v)] >= 0) b_idempotents.push_back(project(a->unit_vector(a->idempotent(v))));

  auto image_of_path = [&](const Path& p) {
    if (p.length() == 0) return b_idempotents[static_cast<std::size_t>(p.source)];
    Vector<Scalar> v = b_arrow_images[static_cast<std::size_t>(p.arrows.back())];
    for (auto it = p.arrows.rbegin() + 1; it != p.arrows.rend(); ++it)
      v = raw_multiply(b_arrow_images[static_cast<std::size_t>(*it)], v);
    return v;
  };

  // Relations: kernel of span{paths of length 2..max_length+1} -> B, per (source, target).
  const std::vector<Path> all_paths = detail::enumerate_paths(qb.quiver, a->max_length() + 1, 200000);
  const int nb = qb.quiver.num_vertices();
  for (int s = 0; s < nb; ++s) {
    for (int t = 0; t < nb; ++t) {
      std::vector<Path> ps;
      for (const auto& p : all_paths)
        if (p.length() >= 2 && p.source == s && p.target == t) ps.push_back(p);
      if (ps.empty()) continue;
      Matrix<Scalar> images(raw_dim, static_cast<Index>(ps.size()));
      for (std::size_t c = 0; c < ps.size(); ++c) images.col(static_cast<Index>(c)) = image_of_path(ps[c]);
      const Matrix<Scalar> ker = kernel_basis<Scalar>(images);
      // Reduced echelon form keeps the relation set canonical.
      const auto kech = row_echelon<Scalar>(Matrix<Scalar>(ker.transpose()));
      for (Index r = 0; r < kech.rank(); ++r) {
        RelationPoly rel;
        for (std::size_t c = 0; c < ps.size(); ++c) {
          const Scalar& coeff = kech.reduced(r, static_cast<Index>(c));
          if (!is_zero(coeff)) rel.terms.push_back({to_rational(coeff), ps[c]});
        }
        qb.relations.push_back(std::move(rel));
      }
    }
  }

  out.algebra = build_algebra<Scalar>(qb, std::max(2, a->max_length() + 1));
  if (out.algebra->dim() != raw_dim) throw std::logic_error("quotient_algebra: dimension mismatch after rebuild");

  // raw <- B: each B basis path evaluated in the raw quotient.
  Matrix<Scalar> to_raw(raw_dim, raw_dim);
  for (int k = 0; k < out.algebra->dim(); ++k) to_raw.col(k) = image_of_path(out.algebra->basis_path(k));
  const Matrix<Scalar> from_raw = inverse<Scalar>(to_raw);
  out.projection = zeros<Scalar>(raw_dim, a->dim());
  for (int k = 0; k < a->dim(); ++k) out.projection.col(k) = from_raw * project(a->unit_vector(k));
  return out;
}

}  // namespace taureg
