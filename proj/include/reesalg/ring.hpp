#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reesalg/field.hpp"
#include "reesalg/monomial.hpp"

namespace reesalg {

enum class MonomialOrder {
  Grevlex,
  Lex,
  // Product order: grevlex on the first block, ties broken by grevlex on the
  // remaining variables. Eliminates the first block.
  BlockElimination,
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

class Ring;

// Sparse polynomial: terms sorted strictly descending in the ring's order,
// no zero coefficients. The owning Ring must outlive the polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Ring& ring) : ring_(&ring) {}

  const Ring& ring() const { return *ring_; }
  const Ring* ring_ptr() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  // Maximum weighted degree over all terms; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);
  friend bool operator==(const Polynomial& f, const Polynomial& g);
  friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

 private:
  friend class Ring;
  const Ring* ring_ = nullptr;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

struct RingOptions {
  MonomialOrder order = MonomialOrder::Grevlex;
  int first_block = 0;  // block size for BlockElimination
  int max_degree = 64;  // degree guard; products beyond it raise ResourceError
};

// k[v_1..v_n] with positive integer weights and a fixed monomial order.
// Immutable after construction and safe to share across threads.
class Ring {
 public:
  using Options = RingOptions;

  Ring(Field field, std::vector<std::string> names, std::vector<int> weights, Options options);
  Ring(Field field, std::vector<std::string> names)
      : Ring(std::move(field), std::move(names), {}, Options{}) {}

  static std::shared_ptr<const Ring> make(Field field, std::vector<std::string> names,
                                          std::vector<int> weights = {}, Options options = {});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& weights() const { return weights_; }
  MonomialOrder order() const { return options_.order; }
  int first_block() const { return options_.first_block; }
  int max_degree() const { return options_.max_degree; }
  const Options& options() const { return options_; }
  int index_of(std::string_view name) const;  // -1 if absent

  // Monomials.
  Monomial one_monomial() const { return Monomial{}; }
  Monomial monomial(std::span<const int> exponents) const;
  Monomial variable_monomial(int i, int power = 1) const;
  Monomial mul(const Monomial& a, const Monomial& b) const;  // guarded
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;
  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  std::string monomial_to_string(const Monomial& m) const;
  // Degree taken only over the variables [begin, end).
  int partial_degree(const Monomial& m, int begin, int end) const;

  // Polynomials.
  Polynomial zero() const { return Polynomial(*this); }
  Polynomial one() const { return constant(field_.one()); }
  Polynomial constant(const Coeff& c) const;
  Polynomial constant(long long c) const { return constant(field_.from_int(c)); }
  Polynomial variable(int i) const;
  Polynomial variable(std::string_view name) const;
  Polynomial term(const Coeff& c, const Monomial& m) const;
  // Sorts and merges; drops zero coefficients.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Polynomial& f, const Coeff& c) const;
  Polynomial mul_term(const Polynomial& f, const Coeff& c, const Monomial& m) const;
  Polynomial pow(const Polynomial& f, int k) const;
  Polynomial monic(const Polynomial& f) const;
  // f / g when g divides f exactly; DomainError otherwise.
  Polynomial divide_exact(const Polynomial& f, const Polynomial& g) const;

  std::string to_string(const Polynomial& f) const;
  // Grammar: sums of products of integers, rationals (a/b), variable names,
  // parenthesized subexpressions and non-negative integer powers.
  Polynomial parse(std::string_view text, int line = 0) const;

  void check_same(const Polynomial& f) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  Options options_;
};

// A k-algebra map source -> target given by the images of the variables.
class RingMap {
 public:
  RingMap(const Ring& source, const Ring& target, std::vector<Polynomial> images);
  Polynomial operator()(const Polynomial& f) const;
  const Ring& source() const { return *source_; }
  const Ring& target() const { return *target_; }

 private:
  const Ring* source_;
  const Ring* target_;
  std::vector<Polynomial> images_;
};

}  // namespace reesalg
