#include "taureg/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace taureg {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxIndeterminates; ++i) {
    const int e = exps[i] + o.exps[i];
    if (e > 255) throw BudgetExceeded("monomial degree overflow");
    r.exps[i] = static_cast<std::uint8_t>(e);
  }
  r.degree = degree + o.degree;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxIndeterminates; ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxIndeterminates; ++i) r.exps[i] = static_cast<std::uint8_t>(exps[i] - o.exps[i]);
  r.degree = degree - o.degree;
  return r;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int index) {
  if (index < 0 || index >= kMaxIndeterminates) throw std::out_of_range("too many indeterminates");
  Monomial m;
  m.exps[static_cast<std::size_t>(index)] = 1;
  m.degree = 1;
  Polynomial p;
  p.terms_.emplace_back(m, Rational(1));
  return p;
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return b.first < a.first; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < point.size() && i < kMaxIndeterminates; ++i) {
      for (int e = 0; e < m.exps[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::combine(const Polynomial& x, const Polynomial& y, bool subtract) {
  const auto& a = x.terms_;
  const auto& b = y.terms_;
  Polynomial out;
  out.terms_.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && b[j].first < a[i].first)) {
      out.terms_.push_back(a[i++]);
    } else if (i == a.size() || a[i].first < b[j].first) {
      out.terms_.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.terms_.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return Polynomial::combine(a, b, false); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial::combine(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
  return Polynomial::from_unsorted(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c.is_zero()) return {};
  Polynomial p = a;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Polynomial Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  const auto& [lm, lc] = b.leading();
  // Remainder kept as an ordered map so the leading term is always first.
  std::map<Monomial, Rational, std::function<bool(const Monomial&, const Monomial&)>> rem(
      [](const Monomial& x, const Monomial& y) { return y < x; });
  for (const auto& t : a.terms_) rem.emplace(t.first, t.second);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lm.divides(it->first)) throw std::domain_error("polynomial division is not exact");
    const Monomial qm = it->first.quotient(lm);
    const Rational qc = it->second / lc;
    rem.erase(it);
    for (std::size_t k = 1; k < b.terms_.size(); ++k) {
      const Monomial m = qm * b.terms_[k].first;
      auto [pos, inserted] = rem.try_emplace(m, Rational(0));
      pos->second -= qc * b.terms_[k].second;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    quot.emplace_back(qm, qc);
  }
  Polynomial q;
  q.terms_ = std::move(quot);
  return q;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = c < 0 ? Rational(-c) : c;
    const bool unit = a == 1;
    if (!unit || m.degree == 0) os << a.str();
    bool need_star = !unit || m.degree == 0;
    for (int i = 0; i < kMaxIndeterminates; ++i) {
      if (m.exps[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      if (static_cast<std::size_t>(i) < names.size()) os << names[static_cast<std::size_t>(i)];
      else os << "x" << (i + 1);
      if (m.exps[i] > 1) os << "^" << static_cast<int>(m.exps[i]);
    }
  }
  return os.str();
}

PolyMatrix generic_combination(const std::vector<Matrix<Rational>>& basis, Index rows, Index cols) {
  if (static_cast<int>(basis.size()) > kMaxIndeterminates) {
    throw BudgetExceeded("generic_combination: more than " + std::to_string(kMaxIndeterminates) + " parameters");
  }
  PolyMatrix pm(rows, cols, static_cast<int>(basis.size()));
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      Polynomial p;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].rows() != rows || basis[k].cols() != cols) {
          throw std::invalid_argument("generic_combination: shape mismatch");
        }
        if (!basis[k](i, j).is_zero()) p = p + basis[k](i, j) * Polynomial::variable(static_cast<int>(k));
      }
      pm(i, j) = std::move(p);
    }
  }
  return pm;
}

Matrix<Rational> specialize(const PolyMatrix& pm, const std::vector<Rational>& point) {
  Matrix<Rational> m(pm.rows, pm.cols);
  for (Index i = 0; i < pm.rows; ++i)
    for (Index j = 0; j < pm.cols; ++j) m(i, j) = pm(i, j).evaluate(point);
  return m;
}

namespace {

// Bareiss with full pivoting (pivot = fewest terms, then lowest degree).
// Every entry after step k is a (k+1)-minor of the input, so each division
// by the previous pivot is exact.
Index bareiss_rank(std::vector<std::vector<Polynomial>> m, const PolyRankBudget& budget) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> col_order(cols);
  std::iota(col_order.begin(), col_order.end(), 0);
  Polynomial prev = Polynomial::constant(1);
  std::size_t r = 0;
  for (; r < rows && r < cols; ++r) {
    std::size_t best_i = rows, best_jj = cols;
    std::pair<std::size_t, int> best_key{~std::size_t{0}, 0};
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t jj = r; jj < cols; ++jj) {
        const Polynomial& e = m[i][col_order[jj]];
        if (e.is_zero()) continue;
        std::pair<std::size_t, int> key{e.num_terms(), e.degree()};
        if (key < best_key) {
          best_key = key;
          best_i = i;
          best_jj = jj;
        }
      }
    }
    if (best_i == rows) break;
    std::swap(m[r], m[best_i]);
    std::swap(col_order[r], col_order[best_jj]);
    const std::size_t pc = col_order[r];
    const Polynomial piv = m[r][pc];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Polynomial lead = m[i][pc];
      for (std::size_t jj = r + 1; jj < cols; ++jj) {
        const std::size_t j = col_order[jj];
        Polynomial num = piv * m[i][j];
        if (!lead.is_zero() && !m[r][j].is_zero()) num = num - lead * m[r][j];
        m[i][j] = Polynomial::divide_exact(num, prev);
        if (m[i][j].num_terms() > budget.max_terms) {
          throw BudgetExceeded("poly_rank: intermediate polynomial exceeds " + std::to_string(budget.max_terms) +
                               " terms");
        }
      }
      m[i][pc] = Polynomial();
    }
    prev = piv;
  }
  return static_cast<Index>(r);
}

}  // namespace

Index poly_rank(const PolyMatrix& pm, const PolyRankBudget& budget) {
  // Connected blocks of the bipartite row/column nonzero graph.
  const Index n = pm.rows + pm.cols;
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Index(Index)> find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Index i = 0; i < pm.rows; ++i)
    for (Index j = 0; j < pm.cols; ++j)
      if (!pm(i, j).is_zero()) parent[static_cast<std::size_t>(find(i))] = find(pm.rows + j);

  std::map<Index, std::pair<std::vector<Index>, std::vector<Index>>> blocks;
  for (Index i = 0; i < pm.rows; ++i) blocks[find(i)].first.push_back(i);
  for (Index j = 0; j < pm.cols; ++j) blocks[find(pm.rows + j)].second.push_back(j);

  Index total = 0;
  for (const auto& [root, rc] : blocks) {
    const auto& [rs, cs] = rc;
    if (rs.empty() || cs.empty()) continue;
    if (static_cast<Index>(std::max(rs.size(), cs.size())) > budget.max_dimension) {
      throw BudgetExceeded("poly_rank: block of size " + std::to_string(rs.size()) + "x" +
                           std::to_string(cs.size()) + " exceeds the budget");
    }
    std::vector<std::vector<Polynomial>> sub(rs.size(), std::vector<Polynomial>(cs.size()));
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < cs.size(); ++b) sub[a][b] = pm(rs[a], cs[b]);
    total += bareiss_rank(std::move(sub), budget);
  }
  return total;
}

}  // namespace taureg
