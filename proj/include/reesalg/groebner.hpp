#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "reesalg/module.hpp"

namespace reesalg {

// Module term order: TOP compares monomials first, POT compares positions
// first. A nonzero elimination_prefix makes every term in components
// [0, prefix) larger than every term outside it, so a basis restricted to
// the later components is a basis of the intersection with them.
struct ModuleOrder {
  PositionOrder position = PositionOrder::TOP;
  int elimination_prefix = 0;
};

struct ModTerm {
  Monomial mono;
  int comp = 0;
  Coeff coeff;
};

// Sparse module element, terms strictly descending in a ModuleOrder.
using ModPoly = std::vector<ModTerm>;

class TermOrder {
 public:
  TermOrder(const Ring& ring, ModuleOrder order) : ring_(&ring), order_(order) {}

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (order_.elimination_prefix > 0) {
      bool ina = ca < order_.elimination_prefix;
      bool inb = cb < order_.elimination_prefix;
      if (ina != inb) return ina ? 1 : -1;
    }
    if (order_.position == PositionOrder::POT && ca != cb) return ca < cb ? 1 : -1;
    int c = ring_->compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }
  const Ring& ring() const { return *ring_; }
  const ModuleOrder& order() const { return order_; }

 private:
  const Ring* ring_;
  ModuleOrder order_;
};

// Low-level sparse operations shared by the Buchberger kernel and the
// linear-algebra steps of minimalization.
namespace kernel {

ModPoly from_vector(const Vector& v, const TermOrder& order);
Vector to_vector(const ModPoly& p, const Ring& ring, int rank);
// h - c * m * g
ModPoly sub_scaled(const ModPoly& h, const Coeff& c, const Monomial& m, const ModPoly& g,
                   const TermOrder& order);
void make_monic(ModPoly& p, const Field& field);
// Full reduction by the listed (monic) basis elements.
ModPoly reduce(ModPoly h, const std::vector<ModPoly>& basis, const std::vector<int>& usable,
               const TermOrder& order);

}  // namespace kernel

// Reduced Gröbner basis of a submodule of a free module. Immutable.
class GroebnerBasis {
 public:
  GroebnerBasis(FreeModule ambient, ModuleOrder order, std::vector<ModPoly> elements);

  const FreeModule& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  TermOrder term_order() const { return TermOrder(*ambient_.ring, order_); }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool reduced() const { return true; }
  const std::vector<ModPoly>& elements() const { return elements_; }
  std::vector<Vector> generators() const;

  Vector normal_form(const Vector& v) const;
  ModPoly normal_form(const ModPoly& p) const;
  bool contains(const Vector& v) const { return normal_form(v).is_zero(); }

  // Minimal generators of the leading monomial ideal in component i.
  std::vector<Monomial> leading_monomials(int component) const;

 private:
  FreeModule ambient_;
  ModuleOrder order_;
  std::vector<ModPoly> elements_;
  std::vector<int> all_;
};

struct BuchbergerOptions {
  ModuleOrder order{};
  std::ostream* trace = nullptr;  // line-oriented pair statistics when set
};

GroebnerBasis buchberger(const FreeModule& ambient, std::span<const Vector> gens,
                         const BuchbergerOptions& options = {});

// Convenience for ideals of `ring` (rank-one submodules).
GroebnerBasis ideal_basis(const std::shared_ptr<const Ring>& ring,
                          std::span<const Polynomial> gens);

// Generators of the first syzygy module of gens, as vectors in R^{gens.size()}.
std::vector<Vector> syzygies(const FreeModule& ambient, std::span<const Vector> gens);

// Generators of (gens) ∩ k[v_block..v_n]. The ring's order must eliminate
// the first `block` variables.
std::vector<Polynomial> eliminate(const std::shared_ptr<const Ring>& ring,
                                  std::span<const Polynomial> gens, int block);

// Post-hoc oracle: every S-vector of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);
// No leading term divides another, all monic, tails fully reduced.
bool is_reduced_basis(const GroebnerBasis& gb);

}  // namespace reesalg
