#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "reesalg/modops.hpp"

namespace reesalg {

// The Rees algebra presentation k[x, y] / J and its fiber cone k[y] / J0.
struct ReesPresentation {
  std::shared_ptr<const Ring> ring;         // k[x_1..x_d, y_1..y_mu]
  Submodule ideal;                          // J
  std::shared_ptr<const Ring> fiber_ring;   // k[y_1..y_mu], standard grading
  Submodule fiber_ideal;                    // J with x -> 0
};

struct ReesLimits {
  // Largest allowed rank C(n + e - 1, e - 1) of G_n.
  long max_power_rank = 4000;
};

struct Predicates {
  bool complete_intersection = false;
  bool equimultiple = false;
  // Empty when the minimal primes of the Fitting invariant are unavailable.
  std::optional<bool> generically_ci;
  std::string generically_ci_note;
};

// Generators of (prev . E) inside G_n, where prev lies in G_{n-1} and E is
// generated by `gens` in R^e. Not minimalized.
std::vector<Vector> rees_power_products(const Ring& ring, int e, int n, const std::vector<Vector>& prev,
                                        const std::vector<Vector>& gens);

// E_0..E_{n_max} for arbitrary column-graded generators, with no properness
// or nonvanishing checks.
std::vector<Submodule> rees_powers(const std::shared_ptr<const Ring>& ring, int e,
                                   const std::vector<Vector>& gens, int n_max);

// A submodule E of G = R^e together with its Rees powers E_n in G_n. The
// generators must be column graded (all entries of one generator share a
// degree) and E must be a proper nonzero submodule.
class ReesContext {
 public:
  ReesContext(std::shared_ptr<const Ring> ring, int e, std::vector<Vector> gens,
              ReesLimits limits = {});

  const Ring& ring() const { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
  int nvars() const { return ring_->nvars(); }
  int e() const { return e_; }
  // E with its minimal generators.
  const Submodule& module() const { return module_; }
  int mu() const { return static_cast<int>(module_.gens().size()); }
  const std::vector<int>& generator_degrees() const { return degrees_; }

  // Exponent vectors of the degree-n monomials in t_1..t_e, descending lex.
  static std::vector<std::vector<int>> power_basis(int e, int n);
  std::string basis_label(const std::vector<int>& exponents) const;
  FreeModule power_ambient(int n) const;

  // E_n with minimal generators; E_0 = R. Cached per n.
  Submodule power(int n) const;
  // E_n read off the degree-n part of the n-th power of (L_1..L_mu) in R[t].
  Submodule power_oracle(int n) const;
  // Generator matrix of E_n as CSV: one row per basis monomial.
  std::string power_csv(int n) const;

  const ReesPresentation& presentation() const;
  // dim R_G(E) from the presentation; checked against d + rank E.
  int dim_rees() const;
  int rank() const;
  int analytic_spread() const;

  // The ideal of maximal minors of the generator matrix of E.
  Submodule fitting_invariant() const;
  ExtendedInt fitting_height() const;
  // Rank e with free double dual.
  bool is_ideal_module() const;
  // DomainError unless E is an ideal module.
  int deviation() const;
  int analytic_deviation() const;
  // min{r : Fitt_r(E) not inside p}, the local number of generators at p.
  int local_generators(const Submodule& prime) const;
  // Minimal primes of the Fitting invariant; from `supplied` when given,
  // otherwise only for monomial invariants (UnsupportedInstance if not).
  std::vector<Submodule> fitting_minimal_primes(const std::vector<Submodule>& supplied = {}) const;
  // mu(E_p) = ht + e - 1 at every minimal prime p of the Fitting invariant.
  bool generically_complete_intersection(const std::vector<Submodule>& supplied_primes = {}) const;
  Predicates predicates(const std::vector<Submodule>& supplied_primes = {}) const;

 private:
  void require_ideal_module() const;

  std::shared_ptr<const Ring> ring_;
  int e_;
  ReesLimits limits_;
  Submodule module_;
  std::vector<int> degrees_;

  mutable std::recursive_mutex power_mutex_;
  mutable std::map<int, Submodule> powers_;
  mutable std::once_flag presentation_once_;
  mutable std::optional<ReesPresentation> presentation_;
  mutable std::once_flag ideal_module_once_;
  mutable bool ideal_module_ = false;
};

}  // namespace reesalg
