#include "reesalg/modops.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "reesalg/error.hpp"

namespace reesalg {

long ExtendedInt::finite() const {
  if (infinite_) throw DomainError("infinite value used where a finite one is required");
  return value_;
}

// ---------------------------------------------------------------- Submodule

Submodule::Submodule(FreeModule ambient, std::vector<Vector> gens)
    : ambient_(std::move(ambient)), gens_(std::move(gens)) {
  if (!ambient_.ring) throw ValidationError("submodule without a ring");
  for (const auto& g : gens_) {
    if (g.rank() != ambient_.rank) {
      throw ValidationError("generator " + g.to_string() + " has the wrong length");
    }
    if (&g.ring() != ambient_.ring.get()) throw RingMismatchError();
  }
}

Submodule Submodule::ideal(const std::shared_ptr<const Ring>& ring, std::vector<Polynomial> gens) {
  std::vector<Vector> vs;
  vs.reserve(gens.size());
  for (auto& g : gens) vs.push_back(Vector(*ring, {std::move(g)}));
  return Submodule(FreeModule(ring, 1), std::move(vs));
}

std::vector<Polynomial> Submodule::ideal_gens() const {
  if (rank() != 1) throw DomainError("not an ideal");
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

bool Submodule::is_homogeneous() const {
  for (const auto& g : gens_) {
    if (!g.is_homogeneous(ambient_.shifts)) return false;
  }
  return true;
}

const GroebnerBasis& Submodule::gb() const {
  std::call_once(cache_->once, [this] {
    BuchbergerOptions opts;
    opts.order.position = ambient_.position;
    cache_->gb.emplace(buchberger(ambient_, gens_, opts));
  });
  return *cache_->gb;
}

bool Submodule::contains(const Submodule& other) const {
  if (!ambient_.same_as(other.ambient_)) throw RingMismatchError();
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Submodule::is_whole() const {
  for (int i = 0; i < rank(); ++i) {
    if (!contains(Vector::unit(ring(), rank(), i))) return false;
  }
  return true;
}

std::vector<int> Resolution::betti() const {
  std::vector<int> out;
  for (const auto& m : modules) out.push_back(m.rank);
  return out;
}

// ---------------------------------------------------------------- basic constructions

Submodule sum(const Submodule& a, const Submodule& b) {
  if (!a.ambient().same_as(b.ambient())) throw RingMismatchError();
  std::vector<Vector> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Submodule(a.ambient(), std::move(g));
}

Submodule product(const Submodule& ideal, const Submodule& m) {
  if (ideal.ring_ptr() != m.ring_ptr()) throw RingMismatchError();
  std::vector<Vector> g;
  for (const auto& f : ideal.ideal_gens()) {
    for (const auto& v : m.gens()) {
      Vector w = f * v;
      if (!w.is_zero()) g.push_back(std::move(w));
    }
  }
  return Submodule(m.ambient(), std::move(g));
}

Submodule multiple_of_ambient(const FreeModule& ambient, const Polynomial& a) {
  std::vector<Vector> g;
  for (int i = 0; i < ambient.rank; ++i) g.push_back(a * Vector::unit(ambient.base(), ambient.rank, i));
  return Submodule(ambient, std::move(g));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (!a.ambient().same_as(b.ambient())) throw RingMismatchError();
  const FreeModule& f = a.ambient();
  const Ring& ring = f.base();
  const int r = f.rank;
  // In F + F: (g, g) for g in a and (h, 0) for h in b. Elements with a zero
  // first block are exactly (0, z) with z in a ∩ b.
  std::vector<int> shifts = f.shifts;
  shifts.insert(shifts.end(), f.shifts.begin(), f.shifts.end());
  FreeModule doubled(f.ring, 2 * r, shifts);
  std::vector<Vector> gens;
  for (const auto& g : a.gens()) {
    std::vector<Polynomial> c = g.components();
    c.insert(c.end(), g.components().begin(), g.components().end());
    gens.push_back(Vector(ring, std::move(c)));
  }
  for (const auto& h : b.gens()) {
    std::vector<Polynomial> c = h.components();
    for (int i = 0; i < r; ++i) c.push_back(ring.zero());
    gens.push_back(Vector(ring, std::move(c)));
  }
  BuchbergerOptions opts;
  opts.order = ModuleOrder{PositionOrder::TOP, r};
  GroebnerBasis gb = buchberger(doubled, gens, opts);
  std::vector<Vector> out;
  for (const auto& e : gb.elements()) {
    if (e.front().comp < r) continue;
    ModPoly tail;
    for (const auto& t : e) tail.push_back(ModTerm{t.mono, t.comp - r, t.coeff});
    out.push_back(kernel::to_vector(tail, ring, r));
  }
  Submodule result(f, std::move(out));
  return result.is_homogeneous() ? minimalize(result) : result;
}

Submodule colon(const Submodule& m, const Polynomial& a) {
  if (a.is_zero()) throw DomainError("colon by the zero element");
  if (a.ring_ptr() != &m.ring()) throw RingMismatchError();
  if (a.is_constant()) return m;
  const Ring& ring = m.ring();
  Submodule meet = intersect(m, multiple_of_ambient(m.ambient(), a));
  std::vector<Vector> out;
  for (const auto& v : meet.gens()) {
    std::vector<Polynomial> c;
    for (const auto& p : v.components()) c.push_back(ring.divide_exact(p, a));
    out.push_back(Vector(ring, std::move(c)));
  }
  return Submodule(m.ambient(), std::move(out));
}

// ---------------------------------------------------------------- minimalization

std::vector<Vector> minimal_generators(const FreeModule& ambient, const std::vector<Vector>& gens) {
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Vector& g = gens[i];
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(ambient.shifts)) {
      throw ValidationError("minimal generators need homogeneous input; got " + g.to_string());
    }
    order.emplace_back(g.degree(ambient.shifts), i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  const Ring& ring = ambient.base();
  ModuleOrder mo{ambient.position, 0};
  TermOrder ord(ring, mo);
  std::vector<Vector> kept;
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int degree = order[pos].first;
    std::optional<GroebnerBasis> lower;
    if (!kept.empty()) {
      BuchbergerOptions opts;
      opts.order = mo;
      lower.emplace(buchberger(ambient, kept, opts));
    }
    std::vector<ModPoly> echelon;
    std::vector<int> all;
    for (; pos < order.size() && order[pos].first == degree; ++pos) {
      const Vector& g = gens[order[pos].second];
      ModPoly h = kernel::from_vector(g, ord);
      if (lower) h = lower->normal_form(h);
      h = kernel::reduce(std::move(h), echelon, all, ord);
      if (h.empty()) continue;
      kernel::make_monic(h, ring.field());
      all.push_back(static_cast<int>(echelon.size()));
      echelon.push_back(std::move(h));
      kept.push_back(g);
    }
  }
  return kept;
}

Submodule minimalize(const Submodule& m) {
  return Submodule(m.ambient(), minimal_generators(m.ambient(), m.gens()));
}

Quotient prune(const Quotient& q) {
  const FreeModule& f = q.ambient();
  const Ring& ring = f.base();
  const Field& k = ring.field();
  const int r = f.rank;

  // Constant parts of the relations span the redundant directions.
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : q.relations.gens()) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(f.shifts)) throw ValidationError("pruning needs homogeneous relations");
    int deg = g.degree(f.shifts);
    std::vector<Coeff> row(static_cast<std::size_t>(r), k.zero());
    bool any = false;
    for (int i = 0; i < r; ++i) {
      if (f.shift(i) != deg || g[i].is_zero()) continue;
      row[static_cast<std::size_t>(i)] = g[i].leading_term().coeff;
      any = true;
    }
    if (any) rows.push_back(std::move(row));
  }
  // Row echelon form over k.
  std::vector<int> pivots;
  std::vector<std::vector<Coeff>> ech;
  for (auto& row : rows) {
    for (std::size_t e = 0; e < ech.size(); ++e) {
      auto p = static_cast<std::size_t>(pivots[e]);
      if (k.is_zero(row[p])) continue;
      Coeff c = k.div(row[p], ech[e][p]);
      for (int i = 0; i < r; ++i) {
        auto ii = static_cast<std::size_t>(i);
        row[ii] = k.sub(row[ii], k.mul(c, ech[e][ii]));
      }
    }
    for (int i = 0; i < r; ++i) {
      if (!k.is_zero(row[static_cast<std::size_t>(i)])) {
        pivots.push_back(i);
        ech.push_back(row);
        break;
      }
    }
  }
  if (pivots.empty()) return Quotient{minimalize(q.relations)};

  std::vector<char> is_pivot(static_cast<std::size_t>(r), 0);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<int> perm;  // new position -> old component
  for (int i = 0; i < r; ++i) {
    if (is_pivot[static_cast<std::size_t>(i)]) perm.push_back(i);
  }
  const int prefix = static_cast<int>(perm.size());
  for (int i = 0; i < r; ++i) {
    if (!is_pivot[static_cast<std::size_t>(i)]) perm.push_back(i);
  }
  std::vector<int> shifts;
  for (int old : perm) shifts.push_back(f.shift(old));
  FreeModule permuted(f.ring, r, shifts);
  std::vector<Vector> gens;
  for (const auto& g : q.relations.gens()) {
    std::vector<Polynomial> c;
    for (int old : perm) c.push_back(g[old]);
    gens.push_back(Vector(ring, std::move(c)));
  }
  BuchbergerOptions opts;
  opts.order = ModuleOrder{PositionOrder::TOP, prefix};
  GroebnerBasis gb = buchberger(permuted, gens, opts);

  std::vector<int> kept_shifts(shifts.begin() + prefix, shifts.end());
  FreeModule smaller(f.ring, r - prefix, kept_shifts, f.position);
  std::vector<Vector> rel;
  for (const auto& e : gb.elements()) {
    if (e.front().comp < prefix) continue;
    ModPoly tail;
    for (const auto& t : e) tail.push_back(ModTerm{t.mono, t.comp - prefix, t.coeff});
    rel.push_back(kernel::to_vector(tail, ring, r - prefix));
  }
  return Quotient{Submodule(smaller, minimal_generators(smaller, rel))};
}

// ---------------------------------------------------------------- dimension theory

HilbertSeries hilbert_series(const Quotient& q) { return hilbert_series(q.relations.gb()); }

std::vector<long long> hilbert_function(const Quotient& q, int from, int to) {
  return hilbert_series(q).values(from, to);
}

int krull_dim(const Quotient& q) { return krull_dim(q.relations.gb()); }

ExtendedInt height(const Submodule& ideal) {
  if (ideal.rank() != 1) throw DomainError("height is defined for ideals");
  int dim = krull_dim(Quotient{ideal});
  if (dim < 0) return ExtendedInt::infinity();
  return ideal.ring().nvars() - dim;
}

Resolution minimal_resolution(const Quotient& q) {
  if (q.is_zero()) throw DomainError("the zero module has no minimal resolution");
  Quotient p = prune(q);
  const Ring& ring = p.ring();
  Resolution res;
  res.modules.push_back(p.ambient());
  FreeModule current_ambient = p.ambient();
  std::vector<Vector> current = p.relations.gens();
  while (!current.empty()) {
    if (res.length() > ring.nvars()) {
      throw InternalInconsistency("resolution longer than the number of variables");
    }
    res.maps.push_back(current);
    std::vector<int> shifts;
    for (const auto& v : current) shifts.push_back(v.degree(current_ambient.shifts));
    FreeModule next(p.relations.ring_ptr(), static_cast<int>(current.size()), shifts);
    res.modules.push_back(next);
    std::vector<Vector> syz = syzygies(current_ambient, current);
    current = minimal_generators(next, syz);
    current_ambient = next;
  }
  return res;
}

ExtendedInt depth(const Quotient& q) {
  if (q.is_zero()) return ExtendedInt::infinity();
  return q.ring().nvars() - minimal_resolution(q).length();
}

Quotient as_abstract_module(const Submodule& m) {
  std::vector<Vector> mg = minimal_generators(m.ambient(), m.gens());
  std::vector<int> shifts;
  for (const auto& g : mg) shifts.push_back(g.degree(m.ambient().shifts));
  FreeModule cover(m.ring_ptr(), static_cast<int>(mg.size()), shifts);
  std::vector<Vector> rel = syzygies(m.ambient(), mg);
  return Quotient{Submodule(cover, minimal_generators(cover, rel))};
}

// ---------------------------------------------------------------- determinants and minors

Polynomial determinant(const Ring& ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return ring.one();
  auto m = rows;
  bool negate = false;
  Polynomial prev = ring.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return ring.zero();
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = ring.divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = ring.zero();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

int matrix_rank(const Ring& ring, std::vector<std::vector<Polynomial>> m) {
  const std::size_t nrows = m.size();
  if (nrows == 0) return 0;
  const std::size_t ncols = m[0].size();
  std::size_t r = 0;
  Polynomial prev = ring.one();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c].is_zero()) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        m[i][j] = ring.divide_exact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      }
      m[i][c] = ring.zero();
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

constexpr long kMaxMinors = 200000;

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
    if (b > 1L << 40) return 1L << 40;
  }
  return b;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Submodule ideal_of_minors(const std::shared_ptr<const Ring>& ring, const std::vector<Vector>& columns,
                          int rows, int k) {
  if (k <= 0) return Submodule::ideal(ring, {ring->one()});
  const int ncols = static_cast<int>(columns.size());
  if (k > rows || k > ncols) return Submodule::ideal(ring, {});
  if (binomial(rows, k) * binomial(ncols, k) > kMaxMinors) {
    throw ResourceError("too many minors for a Fitting ideal");
  }
  std::vector<std::vector<int>> row_sets, col_sets;
  subsets(rows, k, row_sets);
  subsets(ncols, k, col_sets);
  std::vector<Polynomial> minors;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      std::vector<std::vector<Polynomial>> sub;
      for (int i : rs) {
        std::vector<Polynomial> row;
        for (int j : cs) row.push_back(columns[static_cast<std::size_t>(j)][i]);
        sub.push_back(std::move(row));
      }
      Polynomial d = determinant(*ring, sub);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  }
  return Submodule::ideal(ring, std::move(minors));
}

Submodule fitting_ideal(const Quotient& q, int j) {
  if (j < 0) throw DomainError("Fitting index must be non-negative");
  std::vector<Vector> rel = q.relations.is_homogeneous()
                                ? minimal_generators(q.ambient(), q.relations.gens())
                                : q.relations.gens();
  return ideal_of_minors(q.relations.ring_ptr(), rel, q.ambient().rank, q.ambient().rank - j);
}

Submodule fitting_ideal(const Submodule& m, int j) { return fitting_ideal(as_abstract_module(m), j); }

int rank(const Submodule& m) {
  std::vector<std::vector<Polynomial>> rows(static_cast<std::size_t>(m.rank()));
  for (const auto& g : m.gens()) {
    for (int i = 0; i < m.rank(); ++i) rows[static_cast<std::size_t>(i)].push_back(g[i]);
  }
  if (m.gens().empty()) return 0;
  return matrix_rank(m.ring(), std::move(rows));
}

Submodule dual(const Submodule& m) {
  Quotient pres = as_abstract_module(m);
  const FreeModule& cover = pres.ambient();
  const Ring& ring = m.ring();
  const int mu = cover.rank;
  std::vector<int> dual_shifts;
  for (int s : cover.shifts) dual_shifts.push_back(-s);
  FreeModule dual_free(m.ring_ptr(), mu, dual_shifts);
  const auto& rel = pres.relations.gens();
  if (rel.empty()) {
    std::vector<Vector> units;
    for (int i = 0; i < mu; ++i) units.push_back(Vector::unit(ring, mu, i));
    return Submodule(dual_free, std::move(units));
  }
  // Hom(m, R) = {phi in R^mu : phi^T P = 0}: syzygies of the rows of P.
  const int s = static_cast<int>(rel.size());
  std::vector<int> row_shifts;
  for (const auto& col : rel) row_shifts.push_back(-col.degree(cover.shifts));
  FreeModule row_space(m.ring_ptr(), s, row_shifts);
  std::vector<Vector> prow;
  for (int j = 0; j < mu; ++j) {
    std::vector<Polynomial> c;
    for (const auto& col : rel) c.push_back(col[j]);
    prow.push_back(Vector(ring, std::move(c)));
  }
  std::vector<Vector> syz = syzygies(row_space, prow);
  return Submodule(dual_free, minimal_generators(dual_free, syz));
}

bool double_dual_free(const Submodule& m) {
  if (rank(m) != m.rank()) {
    throw DomainError("double dual freeness needs a module of full rank " + std::to_string(m.rank()));
  }
  Submodule dd = dual(dual(m));
  return as_abstract_module(dd).relations.gens().empty();
}

// ---------------------------------------------------------------- monomial primes

namespace {

constexpr long kMaxDivisors = 4000000;

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens, int n) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (divides(h, g, n)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Ass(R/I) for a proper nonzero monomial ideal.
void ass_of_monomial_ideal(const Ring& ring, const std::vector<Monomial>& gens_in,
                           std::set<MonomialPrime>& out) {
  const int n = ring.nvars();
  std::vector<Monomial> gens = minimal_monomials(gens_in, n);
  Monomial l = ring.one_monomial();
  for (const auto& g : gens) l = ring.lcm(l, g);
  long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= l.exp[i] + 1;
    if (count > kMaxDivisors) throw ResourceError("too many monomial divisors for Ass");
  }
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (long idx = 0; idx < count; ++idx) {
    long rest = idx;
    for (int i = 0; i < n; ++i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>(rest % (l.exp[i] + 1));
      rest /= l.exp[i] + 1;
    }
    Monomial u = ring.monomial(e);
    bool in_ideal = false;
    for (const auto& g : gens) {
      if (divides(g, u, n)) {
        in_ideal = true;
        break;
      }
    }
    if (in_ideal) continue;
    std::vector<Monomial> col;
    for (const auto& g : gens) col.push_back(quotient(g, ring.gcd(g, u), n));
    col = minimal_monomials(std::move(col), n);
    MonomialPrime p;
    bool prime = true;
    for (const auto& c : col) {
      int total = 0, var = -1;
      for (int i = 0; i < n; ++i) {
        total += c.exp[i];
        if (c.exp[i]) var = i;
      }
      if (total != 1) {
        prime = false;
        break;
      }
      p.push_back(var);
    }
    if (!prime) continue;
    std::sort(p.begin(), p.end());
    out.insert(p);
  }
}

void require_monomial(const GroebnerBasis& gb) {
  for (const auto& e : gb.elements()) {
    if (e.size() != 1) {
      throw UnsupportedInstance(
          "associated primes are only computed for componentwise monomial relations");
    }
  }
}

}  // namespace

AssociatedPrimes ass_monomial(const Quotient& q) {
  const GroebnerBasis& gb = q.relations.gb();
  require_monomial(gb);
  const Ring& ring = q.ring();
  std::set<MonomialPrime> primes;
  AssociatedPrimes result;
  for (int i = 0; i < q.ambient().rank; ++i) {
    std::vector<Monomial> lm = gb.leading_monomials(i);
    if (lm.empty()) {
      primes.insert(MonomialPrime{});
      result.zero_from_free_summand = true;
      continue;
    }
    bool unit = std::any_of(lm.begin(), lm.end(), [](const Monomial& m) { return m.is_one(); });
    if (unit) continue;
    ass_of_monomial_ideal(ring, lm, primes);
  }
  result.primes.assign(primes.begin(), primes.end());
  return result;
}

std::vector<MonomialPrime> minimal_primes_monomial(const Submodule& ideal) {
  if (ideal.rank() != 1) throw DomainError("minimal primes are defined for ideals");
  AssociatedPrimes ass = ass_monomial(Quotient{ideal});
  std::vector<MonomialPrime> out;
  for (const auto& p : ass.primes) {
    bool minimal = true;
    for (const auto& o : ass.primes) {
      if (o != p && std::includes(p.begin(), p.end(), o.begin(), o.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

Submodule prime_ideal(const std::shared_ptr<const Ring>& ring, const MonomialPrime& p) {
  std::vector<Polynomial> g;
  for (int i : p) g.push_back(ring->variable(i));
  return Submodule::ideal(ring, std::move(g));
}

std::string prime_to_string(const Ring& ring, const MonomialPrime& p) {
  if (p.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += ring.name(p[i]);
  }
  return out + ")";
}

bool is_nonzerodivisor(const Quotient& q, const Polynomial& a) {
  if (a.is_zero()) return q.is_zero();
  if (!a.is_homogeneous()) throw DomainError("nonzerodivisor test needs a homogeneous element");
  HilbertSeries before = hilbert_series(q);
  Quotient cut{sum(q.relations, multiple_of_ambient(q.ambient(), a))};
  HilbertSeries after = hilbert_series(cut);
  // 0 -> (0 :_Q a)(-deg a) -> Q(-deg a) -> Q -> Q/aQ -> 0
  return after.numerator == LaurentPolynomial::one_minus(a.degree()) * before.numerator;
}

}  // namespace reesalg
