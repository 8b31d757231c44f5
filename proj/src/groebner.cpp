#include "reesalg/groebner.hpp"

#include <algorithm>
#include <ostream>

#include "reesalg/error.hpp"

namespace reesalg {

namespace kernel {

ModPoly from_vector(const Vector& v, const TermOrder& order) {
  ModPoly p;
  for (int i = 0; i < v.rank(); ++i) {
    for (const auto& t : v[i].terms()) p.push_back(ModTerm{t.mono, i, t.coeff});
  }
  std::sort(p.begin(), p.end(),
            [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  return p;
}

Vector to_vector(const ModPoly& p, const Ring& ring, int rank) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(rank));
  for (const auto& t : p) buckets[static_cast<std::size_t>(t.comp)].push_back(Term{t.mono, t.coeff});
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(rank));
  for (auto& b : buckets) comps.push_back(ring.from_terms(std::move(b)));
  return Vector(ring, std::move(comps));
}

namespace {

// h[start..] - c * m * g
ModPoly sub_scaled_from(const ModPoly& h, std::size_t start, const Coeff& c, const Monomial& m,
                        const ModPoly& g, const TermOrder& order) {
  const Ring& ring = order.ring();
  const Field& k = ring.field();
  ModPoly out;
  out.reserve(h.size() - start + g.size());
  std::size_t i = start, j = 0;
  // Scaled terms of g are produced lazily so the monomial product is only
  // formed once per term.
  bool have_scaled = false;
  ModTerm scaled;
  auto load = [&]() {
    if (j < g.size()) {
      scaled.mono = ring.mul(m, g[j].mono);
      scaled.comp = g[j].comp;
      scaled.coeff = k.neg(k.mul(c, g[j].coeff));
      have_scaled = true;
    } else {
      have_scaled = false;
    }
  };
  load();
  while (i < h.size() && have_scaled) {
    int cmp = order.compare(h[i], scaled);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(scaled));
      ++j;
      load();
    } else {
      Coeff s = k.add(h[i].coeff, scaled.coeff);
      if (!k.is_zero(s)) out.push_back(ModTerm{h[i].mono, h[i].comp, std::move(s)});
      ++i;
      ++j;
      load();
    }
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  while (have_scaled) {
    out.push_back(std::move(scaled));
    ++j;
    load();
  }
  return out;
}

}  // namespace

ModPoly sub_scaled(const ModPoly& h, const Coeff& c, const Monomial& m, const ModPoly& g,
                   const TermOrder& order) {
  return sub_scaled_from(h, 0, c, m, g, order);
}

void make_monic(ModPoly& p, const Field& field) {
  if (p.empty() || field.is_one(p.front().coeff)) return;
  Coeff inv = field.inv(p.front().coeff);
  for (auto& t : p) t.coeff = field.mul(t.coeff, inv);
}

ModPoly reduce(ModPoly h, const std::vector<ModPoly>& basis, const std::vector<int>& usable,
               const TermOrder& order) {
  const Ring& ring = order.ring();
  const Field& k = ring.field();
  const int n = ring.nvars();
  ModPoly result;
  std::size_t start = 0;
  while (start < h.size()) {
    const ModTerm& lead = h[start];
    const ModPoly* divisor = nullptr;
    for (int idx : usable) {
      const ModPoly& g = basis[static_cast<std::size_t>(idx)];
      if (g.front().comp == lead.comp && divides(g.front().mono, lead.mono, n)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      result.push_back(std::move(h[start]));
      ++start;
      continue;
    }
    Monomial m = quotient(lead.mono, divisor->front().mono, n);
    Coeff c = k.div(lead.coeff, divisor->front().coeff);
    h = sub_scaled_from(h, start, c, m, *divisor, order);
    start = 0;
  }
  return result;
}

}  // namespace kernel

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(FreeModule ambient, ModuleOrder order, std::vector<ModPoly> elements)
    : ambient_(std::move(ambient)), order_(order), elements_(std::move(elements)) {
  all_.resize(elements_.size());
  for (std::size_t i = 0; i < all_.size(); ++i) all_[i] = static_cast<int>(i);
}

std::vector<Vector> GroebnerBasis::generators() const {
  std::vector<Vector> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(kernel::to_vector(e, *ambient_.ring, ambient_.rank));
  return out;
}

ModPoly GroebnerBasis::normal_form(const ModPoly& p) const {
  return kernel::reduce(p, elements_, all_, term_order());
}

Vector GroebnerBasis::normal_form(const Vector& v) const {
  if (v.rank() != ambient_.rank || &v.ring() != ambient_.ring.get()) throw RingMismatchError();
  TermOrder ord = term_order();
  return kernel::to_vector(normal_form(kernel::from_vector(v, ord)), *ambient_.ring, ambient_.rank);
}

std::vector<Monomial> GroebnerBasis::leading_monomials(int component) const {
  std::vector<Monomial> out;
  for (const auto& e : elements_) {
    if (e.front().comp == component) out.push_back(e.front().mono);
  }
  return out;
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  int degree;
  Monomial lcm;
  int comp;
  int i;
  int j;
};

class BuchbergerEngine {
 public:
  BuchbergerEngine(const FreeModule& ambient, const BuchbergerOptions& options)
      : ambient_(ambient),
        ring_(*ambient.ring),
        order_(ring_, options.order),
        // Buchberger's coprime criterion is only valid for ideals.
        ideal_mode_(ambient.rank == 1),
        trace_(options.trace) {}

  void add_input(const ModPoly& p) {
    ModPoly h = kernel::reduce(p, polys_, usable_, order_);
    if (!h.empty()) insert(std::move(h));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [this](const Pair& a, const Pair& b) { return before(a, b); });
      Pair p = *best;
      pairs_.erase(best);
      ++processed_;
      if (p.lcm.degree > ring_.max_degree()) {
        throw ResourceError("S-pair degree " + std::to_string(p.lcm.degree) +
                            " exceeds the degree guard " + std::to_string(ring_.max_degree()));
      }
      ModPoly h = kernel::reduce(spoly(p), polys_, usable_, order_);
      if (h.empty()) {
        ++zero_reductions_;
        if (trace_) *trace_ << "pair " << p.i << ' ' << p.j << " deg " << p.degree << " -> 0\n";
        continue;
      }
      if (trace_) {
        *trace_ << "pair " << p.i << ' ' << p.j << " deg " << p.degree << " -> new "
                << polys_.size() << " terms " << h.size() << '\n';
      }
      insert(std::move(h));
    }
  }

  GroebnerBasis finish() {
    std::vector<ModPoly> basis;
    for (int idx : usable_) {
      std::vector<int> others;
      for (int o : usable_) {
        if (o != idx) others.push_back(o);
      }
      ModPoly g = kernel::reduce(polys_[static_cast<std::size_t>(idx)], polys_, others, order_);
      kernel::make_monic(g, ring_.field());
      basis.push_back(std::move(g));
    }
    std::sort(basis.begin(), basis.end(), [this](const ModPoly& a, const ModPoly& b) {
      return order_.compare(a.front(), b.front()) > 0;
    });
    if (trace_) {
      *trace_ << "basis " << basis.size() << " pairs " << processed_ << " zero "
              << zero_reductions_ << '\n';
    }
    return GroebnerBasis(ambient_, order_.order(), std::move(basis));
  }

 private:
  const Monomial& lm(int i) const { return polys_[static_cast<std::size_t>(i)].front().mono; }
  int lcomp(int i) const { return polys_[static_cast<std::size_t>(i)].front().comp; }

  bool before(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = order_.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  ModPoly spoly(const Pair& p) const {
    const ModPoly& gi = polys_[static_cast<std::size_t>(p.i)];
    const ModPoly& gj = polys_[static_cast<std::size_t>(p.j)];
    const int n = ring_.nvars();
    Monomial mi = quotient(p.lcm, gi.front().mono, n);
    Monomial mj = quotient(p.lcm, gj.front().mono, n);
    ModPoly a;
    a.reserve(gi.size());
    for (const auto& t : gi) a.push_back(ModTerm{ring_.mul(mi, t.mono), t.comp, t.coeff});
    return kernel::sub_scaled(a, ring_.field().one(), mj, gj, order_);
  }

  // Gebauer-Möller update for the element just appended at index k.
  void insert(ModPoly h) {
    kernel::make_monic(h, ring_.field());
    polys_.push_back(std::move(h));
    const int k = static_cast<int>(polys_.size()) - 1;
    const int n = ring_.nvars();
    const Monomial& lk = lm(k);
    const int ck = lcomp(k);

    std::vector<int> cand;
    std::vector<Monomial> cand_lcm;
    for (int i : usable_) {
      if (lcomp(i) == ck) {
        cand.push_back(i);
        cand_lcm.push_back(ring_.lcm(lm(i), lk));
      }
    }
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = true;
      if (!(ideal_mode_ && coprime(lm(cand[a]), lk, n))) {
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b) {
          if (divides(cand_lcm[b], cand_lcm[a], n)) keep = false;
        }
        for (std::size_t b : kept) {
          if (!keep) break;
          if (divides(cand_lcm[b], cand_lcm[a], n)) keep = false;
        }
      }
      if (keep) kept.push_back(a);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != ck || !divides(lk, p.lcm, n)) return false;
      Monomial li = ring_.lcm(lm(p.i), lk);
      Monomial lj = ring_.lcm(lm(p.j), lk);
      return li != p.lcm && lj != p.lcm;
    });

    for (std::size_t a : kept) {
      int i = cand[a];
      if (ideal_mode_ && coprime(lm(i), lk, n)) continue;
      const Monomial& l = cand_lcm[a];
      pairs_.push_back(Pair{l.degree + ambient_.shift(ck), l, ck, i, k});
    }

    std::erase_if(usable_, [&](int i) { return lcomp(i) == ck && divides(lk, lm(i), n); });
    usable_.push_back(k);
  }

  const FreeModule& ambient_;
  const Ring& ring_;
  TermOrder order_;
  bool ideal_mode_;
  std::ostream* trace_;
  std::vector<ModPoly> polys_;
  std::vector<int> usable_;
  std::vector<Pair> pairs_;
  long processed_ = 0;
  long zero_reductions_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const FreeModule& ambient, std::span<const Vector> gens,
                         const BuchbergerOptions& options) {
  TermOrder order(*ambient.ring, options.order);
  BuchbergerEngine engine(ambient, options);
  for (const auto& g : gens) {
    if (g.rank() != ambient.rank || &g.ring() != ambient.ring.get()) throw RingMismatchError();
    engine.add_input(kernel::from_vector(g, order));
  }
  engine.run();
  return engine.finish();
}

GroebnerBasis ideal_basis(const std::shared_ptr<const Ring>& ring,
                          std::span<const Polynomial> gens) {
  FreeModule f(ring, 1);
  std::vector<Vector> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.push_back(Vector(*ring, {g}));
  return buchberger(f, vs);
}

std::vector<Vector> syzygies(const FreeModule& ambient, std::span<const Vector> gens) {
  const int r = ambient.rank;
  const int m = static_cast<int>(gens.size());
  if (m == 0) return {};
  const Ring& ring = *ambient.ring;
  std::vector<int> shifts = ambient.shifts;
  for (const auto& g : gens) {
    shifts.push_back(g.is_homogeneous(ambient.shifts) ? g.degree(ambient.shifts) : 0);
  }
  FreeModule augmented(ambient.ring, r + m, shifts);
  std::vector<Vector> aug;
  aug.reserve(gens.size());
  for (int j = 0; j < m; ++j) {
    const Vector& g = gens[static_cast<std::size_t>(j)];
    if (g.rank() != r) throw RingMismatchError();
    std::vector<Polynomial> comps = g.components();
    for (int i = 0; i < m; ++i) comps.push_back(i == j ? ring.one() : ring.zero());
    aug.push_back(Vector(ring, std::move(comps)));
  }
  BuchbergerOptions opts;
  opts.order = ModuleOrder{PositionOrder::TOP, r};
  GroebnerBasis gb = buchberger(augmented, aug, opts);
  std::vector<Vector> out;
  for (const auto& e : gb.elements()) {
    if (e.front().comp < r) continue;
    ModPoly tail;
    for (const auto& t : e) tail.push_back(ModTerm{t.mono, t.comp - r, t.coeff});
    out.push_back(kernel::to_vector(tail, ring, m));
  }
  return out;
}

std::vector<Polynomial> eliminate(const std::shared_ptr<const Ring>& ring,
                                  std::span<const Polynomial> gens, int block) {
  bool ok = block == 0 || ring->order() == MonomialOrder::Lex ||
            (ring->order() == MonomialOrder::BlockElimination && ring->first_block() == block);
  if (!ok) throw DomainError("ring order does not eliminate the requested block");
  GroebnerBasis gb = ideal_basis(ring, gens);
  std::vector<Polynomial> out;
  for (const auto& v : gb.generators()) {
    const Polynomial& f = v[0];
    bool free_of_block = true;
    for (const auto& t : f.terms()) {
      for (int i = 0; i < block && free_of_block; ++i) {
        if (t.mono.exp[i] != 0) free_of_block = false;
      }
    }
    if (free_of_block) out.push_back(f);
  }
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  TermOrder order = gb.term_order();
  const Ring& ring = gb.ambient().base();
  const int n = ring.nvars();
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i].front().comp != el[j].front().comp) continue;
      Monomial l = ring.lcm(el[i].front().mono, el[j].front().mono);
      Monomial mi = quotient(l, el[i].front().mono, n);
      Monomial mj = quotient(l, el[j].front().mono, n);
      const Field& k = ring.field();
      ModPoly a;
      Coeff ci = k.inv(el[i].front().coeff);
      for (const auto& t : el[i]) a.push_back(ModTerm{ring.mul(mi, t.mono), t.comp, k.mul(t.coeff, ci)});
      ModPoly s = kernel::sub_scaled(a, k.inv(el[j].front().coeff), mj, el[j], order);
      if (!gb.normal_form(s).empty()) return false;
    }
  }
  return true;
}

bool is_reduced_basis(const GroebnerBasis& gb) {
  const Ring& ring = gb.ambient().base();
  const int n = ring.nvars();
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i].empty() || !ring.field().is_one(el[i].front().coeff)) return false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      const ModTerm& lead = el[j].front();
      for (const auto& t : el[i]) {
        if (t.comp == lead.comp && divides(lead.mono, t.mono, n)) return false;
      }
    }
  }
  return true;
}

}  // namespace reesalg
