#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these touch the Gröbner kernel.

#include <map>
#include <vector>

#include "reesalg/module.hpp"
#include "reesalg/ring.hpp"

namespace oracles {

using namespace reesalg;

// All monomials of weighted degree exactly deg.
inline void monomials_of_degree(const Ring& r, int deg, int var, std::vector<int>& cur,
                                std::vector<Monomial>& out) {
  if (var == r.nvars()) {
    if (deg == 0) out.push_back(r.monomial(cur));
    return;
  }
  for (int e = 0; e * r.weight(var) <= deg; ++e) {
    cur[static_cast<std::size_t>(var)] = e;
    monomials_of_degree(r, deg - e * r.weight(var), var + 1, cur, out);
  }
  cur[static_cast<std::size_t>(var)] = 0;
}

inline std::vector<Monomial> monomials_of_degree(const Ring& r, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(r.nvars()), 0);
  monomials_of_degree(r, deg, 0, cur, out);
  return out;
}

// Rank over k of a list of sparse vectors keyed by (component, monomial exponents).
using SparseKey = std::pair<int, std::vector<int>>;

inline int k_rank(const Field& k, std::vector<std::map<SparseKey, Coeff>> rows) {
  int rank = 0;
  std::vector<std::map<SparseKey, Coeff>> echelon;
  for (auto& row : rows) {
    for (const auto& e : echelon) {
      const auto& [key, lead] = *e.begin();
      auto it = row.find(key);
      if (it == row.end()) continue;
      Coeff c = k.div(it->second, lead);
      for (const auto& [kk, v] : e) {
        Coeff nv = k.sub(row.count(kk) ? row[kk] : k.zero(), k.mul(c, v));
        if (k.is_zero(nv)) {
          row.erase(kk);
        } else {
          row[kk] = nv;
        }
      }
    }
    if (!row.empty()) {
      echelon.push_back(row);
      ++rank;
    }
  }
  return rank;
}

inline std::map<SparseKey, Coeff> to_sparse(const Ring& r, const Vector& v) {
  std::map<SparseKey, Coeff> out;
  for (int i = 0; i < v.rank(); ++i) {
    for (const auto& t : v[i].terms()) {
      std::vector<int> e(static_cast<std::size_t>(r.nvars()));
      for (int j = 0; j < r.nvars(); ++j) e[static_cast<std::size_t>(j)] = t.mono[j];
      out[{i, e}] = t.coeff;
    }
  }
  return out;
}

// dim_k (F/M)_deg by linear algebra on the spanning set {m * g}.
inline long hilbert_value(const Ring& r, const std::vector<int>& shifts,
                          const std::vector<Vector>& gens, int deg) {
  long free_dim = 0;
  for (int s : shifts) free_dim += static_cast<long>(monomials_of_degree(r, deg - s).size());
  std::vector<std::map<SparseKey, Coeff>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int gd = g.degree(shifts);
    for (const auto& m : monomials_of_degree(r, deg - gd)) {
      rows.push_back(to_sparse(r, r.term(r.field().one(), m) * g));
    }
  }
  return free_dim - k_rank(r.field(), std::move(rows));
}

// Whether v lies in the k-span of {m * g} in degree deg(v) (v homogeneous).
inline bool in_span(const Ring& r, const std::vector<int>& shifts, const std::vector<Vector>& gens,
                    const Vector& v) {
  if (v.is_zero()) return true;
  int deg = v.degree(shifts);
  std::vector<std::map<SparseKey, Coeff>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& m : monomials_of_degree(r, deg - g.degree(shifts))) {
      rows.push_back(to_sparse(r, r.term(r.field().one(), m) * g));
    }
  }
  int before = k_rank(r.field(), rows);
  rows.push_back(to_sparse(r, v));
  return k_rank(r.field(), std::move(rows)) == before;
}

// Laplace expansion along the first row.
inline Polynomial laplace_det(const Ring& r, const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return r.one();
  Polynomial total = r.zero();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * laplace_det(r, minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace oracles
