#pragma once

// Hand-rolled random generators shared by the property tests.

#include <random>
#include <string>
#include <vector>

#include "reesalg/module.hpp"
#include "reesalg/ring.hpp"

namespace testing_support {

using namespace reesalg;

inline std::vector<std::string> var_names(int n, const char* base = "x") {
  static const char* letters[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    if (n <= 6 && std::string(base) == "x") {
      out.push_back(letters[i]);
    } else {
      out.push_back(std::string(base) + std::to_string(i + 1));
    }
  }
  return out;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Monomial monomial(const Ring& r, int max_exp) {
    std::vector<int> e(static_cast<std::size_t>(r.nvars()));
    for (auto& x : e) x = uniform(0, max_exp);
    return r.monomial(e);
  }

  // Random monomial of exact weighted degree deg (retries on unreachable degrees).
  bool monomial_of_degree(const Ring& r, int deg, Monomial& out) {
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<int> e(static_cast<std::size_t>(r.nvars()), 0);
      int left = deg;
      for (int guard = 0; guard < 200 && left > 0; ++guard) {
        int i = uniform(0, r.nvars() - 1);
        if (r.weight(i) <= left) {
          ++e[static_cast<std::size_t>(i)];
          left -= r.weight(i);
        }
      }
      if (left == 0) {
        out = r.monomial(e);
        return true;
      }
    }
    return false;
  }

  Coeff coeff(const Ring& r) {
    int c = 0;
    while (c == 0) c = uniform(-5, 5);
    return r.field().from_int(c);
  }

  Polynomial polynomial(const Ring& r, int max_terms, int max_exp) {
    std::vector<Term> ts;
    int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) ts.push_back(Term{monomial(r, max_exp), coeff(r)});
    return r.from_terms(std::move(ts));
  }

  Polynomial homogeneous(const Ring& r, int deg, int max_terms) {
    std::vector<Term> ts;
    int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      if (monomial_of_degree(r, deg, m)) ts.push_back(Term{m, coeff(r)});
    }
    return r.from_terms(std::move(ts));
  }

  // Homogeneous vector of degree deg in a free module with the given shifts.
  Vector homogeneous_vector(const Ring& r, const std::vector<int>& shifts, int deg,
                            int max_terms) {
    Vector v(r, static_cast<int>(shifts.size()));
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      int d = deg - shifts[i];
      if (d < 0 || !coin()) continue;
      v[static_cast<int>(i)] = homogeneous(r, d, max_terms);
    }
    return v;
  }

  // Generators of a column-graded submodule of R^e: each generator has
  // entries of one degree in [1, max_deg]. May be zero or all of R^e.
  std::vector<Vector> column_graded(const Ring& r, int e, int count, int max_deg, int max_terms) {
    std::vector<Vector> out;
    for (int j = 0; j < count; ++j) {
      int deg = uniform(1, max_deg);
      Vector v(r, e);
      for (int i = 0; i < e; ++i) {
        if (coin()) v[i] = homogeneous(r, deg, max_terms);
      }
      out.push_back(v);
    }
    return out;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testing_support
