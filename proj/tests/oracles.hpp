#pragma once

// Independent reference computations for the unit tests. None of these go
// through the library's algebra or module code.

#include "taureg/fixtures.hpp"
#include "taureg/quiver.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

// Paths of a quiver, as arrow sequences in written order, that avoid every
// forbidden subword. Enumeration stops at max_length.
inline std::vector<taureg::Path> monomial_paths(const taureg::Quiver& q,
                                                const std::vector<std::vector<int>>& forbidden, int max_length) {
  std::vector<taureg::Path> out, frontier;
  for (int v = 0; v < q.num_vertices(); ++v) frontier.push_back(taureg::Path::trivial(v));
  for (int len = 0; len <= max_length && !frontier.empty(); ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<taureg::Path> next;
    for (const auto& p : frontier) {
      for (int a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[static_cast<std::size_t>(a)];
        if (ar.source != p.target) continue;
        taureg::Path x{p.source, ar.target, p.arrows};
        x.arrows.insert(x.arrows.begin(), a);
        bool bad = false;
        for (const auto& f : forbidden)
          if (std::search(x.arrows.begin(), x.arrows.end(), f.begin(), f.end()) != x.arrows.end()) bad = true;
        if (!bad) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Number of paths from s to t.
inline int count_between(const std::vector<taureg::Path>& paths, int s, int t) {
  return static_cast<int>(std::count_if(paths.begin(), paths.end(),
                                        [&](const taureg::Path& p) { return p.source == s && p.target == t; }));
}

// dim P(i) at v = #paths i -> v; dim I(i) at v = #paths v -> i.
inline std::vector<int> projective_dims(const std::vector<taureg::Path>& paths, int n, int i) {
  std::vector<int> d;
  for (int v = 0; v < n; ++v) d.push_back(count_between(paths, i, v));
  return d;
}
inline std::vector<int> injective_dims(const std::vector<taureg::Path>& paths, int n, int i) {
  std::vector<int> d;
  for (int v = 0; v < n; ++v) d.push_back(count_between(paths, v, i));
  return d;
}

// For a hereditary algebra, dim τM = Φ dim M with Φ = -[dim I(i)] [dim P(i)]^{-1}
// on non-projective indecomposables. Integer matrices, small sizes.
inline std::vector<std::vector<long long>> inverse_unitriangular(std::vector<std::vector<long long>> c) {
  // c is unipotent after a permutation of vertices for acyclic quivers; use
  // Gauss-Jordan with integer pivots ±1.
  const std::size_t n = c.size();
  std::vector<std::vector<long long>> inv(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && c[piv][col] == 0) ++piv;
    std::swap(c[piv], c[col]);
    std::swap(inv[piv], inv[col]);
    const long long p = c[col][col];  // ±1
    for (std::size_t j = 0; j < n; ++j) {
      c[col][j] *= p;
      inv[col][j] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || c[r][col] == 0) continue;
      const long long f = c[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        c[r][j] -= f * c[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline std::vector<int> coxeter(const std::vector<taureg::Path>& paths, int n, const std::vector<int>& dim) {
  std::vector<std::vector<long long>> p(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
  std::vector<std::vector<long long>> in = p;
  for (int i = 0; i < n; ++i) {
    const auto dp = projective_dims(paths, n, i);
    const auto di = injective_dims(paths, n, i);
    for (int v = 0; v < n; ++v) {
      p[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = dp[static_cast<std::size_t>(v)];
      in[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = di[static_cast<std::size_t>(v)];
    }
  }
  const auto pinv = inverse_unitriangular(p);
  std::vector<long long> y(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v) y[static_cast<std::size_t>(i)] += pinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] * dim[static_cast<std::size_t>(v)];
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += in[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(v)] = static_cast<int>(-s);
  }
  return out;
}

// Number of arrows i -> j.
inline int arrows_between(const taureg::Quiver& q, int i, int j) {
  int k = 0;
  for (const auto& a : q.arrows)
    if (a.source == i && a.target == j) ++k;
  return k;
}

}  // namespace oracle
