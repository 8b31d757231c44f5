#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "reesalg/groebner.hpp"
#include "reesalg/hilbert.hpp"

namespace reesalg {

// An integer or +infinity. Infinite values must be inspected explicitly;
// finite() throws on them so they never leak into arithmetic.
class ExtendedInt {
 public:
  constexpr ExtendedInt(long v = 0) : value_(v), infinite_(false) {}
  static constexpr ExtendedInt infinity() {
    ExtendedInt e;
    e.infinite_ = true;
    return e;
  }
  bool is_infinite() const { return infinite_; }
  long finite() const;
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  long value_;
  bool infinite_;
};

// Finitely generated submodule of a graded free module. The Gröbner basis
// is computed on first use and shared between copies.
class Submodule {
 public:
  Submodule() = default;
  Submodule(FreeModule ambient, std::vector<Vector> gens);
  // Ideal of the ring as a submodule of R^1.
  static Submodule ideal(const std::shared_ptr<const Ring>& ring, std::vector<Polynomial> gens);

  const FreeModule& ambient() const { return ambient_; }
  const Ring& ring() const { return *ambient_.ring; }
  const std::shared_ptr<const Ring>& ring_ptr() const { return ambient_.ring; }
  int rank() const { return ambient_.rank; }
  const std::vector<Vector>& gens() const { return gens_; }
  // Generators of an ideal (rank-one ambient) as polynomials.
  std::vector<Polynomial> ideal_gens() const;

  bool is_homogeneous() const;
  const GroebnerBasis& gb() const;
  bool contains(const Vector& v) const { return gb().contains(v); }
  bool contains(const Submodule& other) const;
  bool equals(const Submodule& other) const { return contains(other) && other.contains(*this); }
  bool is_zero() const { return gb().empty(); }
  // True when the submodule is the whole ambient module.
  bool is_whole() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };
  FreeModule ambient_;
  std::vector<Vector> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// The quotient ambient / relations.
struct Quotient {
  Submodule relations;
  const FreeModule& ambient() const { return relations.ambient(); }
  const Ring& ring() const { return relations.ring(); }
  bool is_zero() const { return relations.is_whole(); }
};

struct Resolution {
  // modules[0] is the presented module's free cover; maps[i] lists the
  // images of the basis of modules[i + 1] in modules[i].
  std::vector<FreeModule> modules;
  std::vector<std::vector<Vector>> maps;

  std::vector<int> betti() const;
  int length() const { return static_cast<int>(maps.size()); }
};

Submodule sum(const Submodule& a, const Submodule& b);
// Product of an ideal with a submodule.
Submodule product(const Submodule& ideal, const Submodule& m);
Submodule intersect(const Submodule& a, const Submodule& b);
// {z : a z in m}; DomainError for a = 0.
Submodule colon(const Submodule& m, const Polynomial& a);
// a * ambient
Submodule multiple_of_ambient(const FreeModule& ambient, const Polynomial& a);

// Graded minimal generating subset (Nakayama); drops zero generators and
// keeps the input order within each degree. Requires homogeneous input.
std::vector<Vector> minimal_generators(const FreeModule& ambient, const std::vector<Vector>& gens);
Submodule minimalize(const Submodule& m);

// Minimal presentation: drops basis vectors that the relations make redundant.
Quotient prune(const Quotient& q);

HilbertSeries hilbert_series(const Quotient& q);
std::vector<long long> hilbert_function(const Quotient& q, int from, int to);
int krull_dim(const Quotient& q);
// d - dim R/I; infinity for I = R.
ExtendedInt height(const Submodule& ideal);

// Minimal graded free resolution; DomainError for the zero module.
Resolution minimal_resolution(const Quotient& q);
// d - pd via Auslander-Buchsbaum; infinity for the zero module.
ExtendedInt depth(const Quotient& q);
// Presentation ambient / syzygies of the minimal generators of m.
Quotient as_abstract_module(const Submodule& m);

// Polynomial matrices are column lists.
Polynomial determinant(const Ring& ring, const std::vector<std::vector<Polynomial>>& rows);
int matrix_rank(const Ring& ring, std::vector<std::vector<Polynomial>> rows);
// Ideal of k-minors of the matrix whose columns are `columns`; R for k <= 0.
Submodule ideal_of_minors(const std::shared_ptr<const Ring>& ring, const std::vector<Vector>& columns,
                          int rows, int k);
// Fitt_j of the module presented by ambient / relations.
Submodule fitting_ideal(const Quotient& q, int j);
// Fitt_j of the abstract module m.
Submodule fitting_ideal(const Submodule& m, int j);
// Rank of m as a module over the domain R.
int rank(const Submodule& m);
// Generators of Hom(m, R) inside R^mu, mu the number of minimal generators.
Submodule dual(const Submodule& m);
// Whether m** is free; DomainError unless m has full rank in its ambient.
bool double_dual_free(const Submodule& m);

// A monomial prime, as sorted variable indices; empty for (0).
using MonomialPrime = std::vector<int>;

struct AssociatedPrimes {
  std::vector<MonomialPrime> primes;  // sorted, no duplicates
  // (0) was added because some component of the quotient is free.
  bool zero_from_free_summand = false;

  friend bool operator==(const AssociatedPrimes&, const AssociatedPrimes&) = default;
};

// Associated primes of a quotient by componentwise monomial relations;
// UnsupportedInstance otherwise.
AssociatedPrimes ass_monomial(const Quotient& q);
// Minimal primes of a monomial ideal.
std::vector<MonomialPrime> minimal_primes_monomial(const Submodule& ideal);
Submodule prime_ideal(const std::shared_ptr<const Ring>& ring, const MonomialPrime& p);
std::string prime_to_string(const Ring& ring, const MonomialPrime& p);

// Whether a (homogeneous) is a nonzerodivisor on the quotient; decided by
// comparing Hilbert series of q and q / a q.
bool is_nonzerodivisor(const Quotient& q, const Polynomial& a);

}  // namespace reesalg
