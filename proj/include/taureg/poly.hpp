#pragma once

// Multivariate polynomials over Q and the fraction-free rank of polynomial
// matrices. This is the certified oracle for generic rank: the rank over the
// rational function field Q(x_1..x_m) equals the maximal rank of any
// specialization over the algebraic closure.

#include "taureg/linalg.hpp"
#include "taureg/scalar.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taureg {

inline constexpr int kMaxIndeterminates = 32;

struct Monomial {
  std::array<std::uint8_t, kMaxIndeterminates> exps{};
  int degree = 0;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& o) const;  // this / o, requires o.divides(*this)

  /// Degree-lexicographic order; the leading term is the largest.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exps > b.exps;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(int index);

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  Rational evaluate(const std::vector<Rational>& point) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Exact quotient a / b; throws std::domain_error if b does not divide a.
  static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  // Sorted by decreasing monomial, no zero coefficients.
  std::vector<Term> terms_;
  static Polynomial from_unsorted(std::vector<Term> terms);
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract);
};

struct PolyMatrix {
  Index rows = 0;
  Index cols = 0;
  int num_vars = 0;
  std::vector<Polynomial> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(Index r, Index c, int vars)
      : rows(r), cols(c), num_vars(vars), entries(static_cast<std::size_t>(r * c)) {}

  Polynomial& operator()(Index i, Index j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
  const Polynomial& operator()(Index i, Index j) const {
    return entries[static_cast<std::size_t>(i * cols + j)];
  }
};

/// The generic element x_1 B_1 + ... + x_m B_m of a linear matrix space.
PolyMatrix generic_combination(const std::vector<Matrix<Rational>>& basis, Index rows, Index cols);

Matrix<Rational> specialize(const PolyMatrix& pm, const std::vector<Rational>& point);

struct PolyRankBudget {
  std::size_t max_terms = 200000;  ///< largest intermediate polynomial allowed
  Index max_dimension = 64;        ///< larger side of a connected block
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank over Q(x) by Bareiss elimination with exact polynomial pivots.
/// The matrix is first split into the connected blocks of its nonzero
/// pattern; ranks add. Throws BudgetExceeded when the budget is hit.
Index poly_rank(const PolyMatrix& pm, const PolyRankBudget& budget = {});

}  // namespace taureg
