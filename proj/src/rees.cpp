#include "reesalg/rees.hpp"

#include <map>
#include <regex>
#include <sstream>

#include "reesalg/error.hpp"

namespace reesalg {

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
    if (b > (1L << 40)) return 1L << 40;
  }
  return b;
}

void basis_rec(int e, int n, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == e - 1) {
    cur[static_cast<std::size_t>(pos)] = n;
    out.push_back(cur);
    return;
  }
  for (int a = n; a >= 0; --a) {
    cur[static_cast<std::size_t>(pos)] = a;
    basis_rec(e, n - a, pos + 1, cur, out);
  }
}

std::vector<std::string> prefixed(const char* base, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(base + std::to_string(i));
  return out;
}

// Images of the variables of `source` in `target`, matched by name; zero
// for names `target` does not have.
std::vector<Polynomial> by_name(const Ring& source, const Ring& target) {
  std::vector<Polynomial> images;
  for (const auto& n : source.names()) {
    int i = target.index_of(n);
    images.push_back(i >= 0 ? target.variable(i) : target.zero());
  }
  return images;
}

}  // namespace

std::vector<Vector> rees_power_products(const Ring& ring, int e, int n, const std::vector<Vector>& prev,
                                        const std::vector<Vector>& gens) {
  auto prev_basis = ReesContext::power_basis(e, n - 1);
  auto basis = ReesContext::power_basis(e, n);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  std::vector<Vector> products;
  for (const auto& v : prev) {
    for (const auto& g : gens) {
      Vector w(ring, static_cast<int>(basis.size()));
      for (std::size_t a = 0; a < prev_basis.size(); ++a) {
        const Polynomial& va = v[static_cast<int>(a)];
        if (va.is_zero()) continue;
        for (int i = 0; i < e; ++i) {
          if (g[i].is_zero()) continue;
          std::vector<int> beta = prev_basis[a];
          ++beta[static_cast<std::size_t>(i)];
          int b = index.at(beta);
          w[b] = w[b] + va * g[i];
        }
      }
      if (!w.is_zero()) products.push_back(std::move(w));
    }
  }
  return products;
}

std::vector<Submodule> rees_powers(const std::shared_ptr<const Ring>& ring, int e,
                                   const std::vector<Vector>& gens, int n_max) {
  std::vector<Submodule> out;
  out.push_back(Submodule(FreeModule(ring, 1), {Vector::unit(*ring, 1, 0)}));
  for (int n = 1; n <= n_max; ++n) {
    FreeModule amb(ring, static_cast<int>(ReesContext::power_basis(e, n).size()));
    auto products = rees_power_products(*ring, e, n, out.back().gens(), gens);
    out.push_back(Submodule(amb, minimal_generators(amb, products)));
  }
  return out;
}

ReesContext::ReesContext(std::shared_ptr<const Ring> ring, int e, std::vector<Vector> gens,
                         ReesLimits limits)
    : ring_(std::move(ring)), e_(e), limits_(limits) {
  if (e_ < 1) throw ValidationError("the ambient free module needs rank at least 1");
  static const std::regex reserved("^[ty][0-9]+$");
  for (const auto& n : ring_->names()) {
    if (std::regex_match(n, reserved)) {
      throw ValidationError("variable name " + n + " is reserved for Rees algebra variables");
    }
  }
  FreeModule g(ring_, e_);
  std::vector<Vector> nonzero;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Vector& v = gens[j];
    if (v.rank() != e_) {
      throw ValidationError("generator " + std::to_string(j + 1) + " has " +
                            std::to_string(v.rank()) + " entries, expected " + std::to_string(e_));
    }
    if (v.is_zero()) continue;
    int deg = -1;
    for (int i = 0; i < e_; ++i) {
      const Polynomial& p = v[i];
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || (deg >= 0 && p.degree() != deg)) {
        throw ValidationError("generator " + std::to_string(j + 1) + " " + v.to_string() +
                              " is not column graded: its entries must be homogeneous of one degree");
      }
      deg = p.degree();
    }
    nonzero.push_back(v);
  }
  if (nonzero.empty()) throw ValidationError("the module E must be nonzero");
  module_ = minimalize(Submodule(g, std::move(nonzero)));
  if (module_.is_whole()) throw ValidationError("E = G: the module must be a proper submodule");
  for (const auto& v : module_.gens()) degrees_.push_back(v.degree(g.shifts));
}

std::vector<std::vector<int>> ReesContext::power_basis(int e, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(e), 0);
  basis_rec(e, n, 0, cur, out);
  return out;
}

std::string ReesContext::basis_label(const std::vector<int>& exponents) const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

FreeModule ReesContext::power_ambient(int n) const {
  if (n < 0) throw DomainError("Rees powers need n >= 0");
  long g = binomial(n + e_ - 1, e_ - 1);
  if (g > limits_.max_power_rank) {
    throw ResourceError("G_" + std::to_string(n) + " has rank " + std::to_string(g) +
                        ", above the limit " + std::to_string(limits_.max_power_rank));
  }
  return FreeModule(ring_, static_cast<int>(g));
}

Submodule ReesContext::power(int n) const {
  std::lock_guard<std::recursive_mutex> lock(power_mutex_);
  if (auto it = powers_.find(n); it != powers_.end()) return it->second;
  FreeModule amb = power_ambient(n);
  Submodule result;
  if (n == 0) {
    result = Submodule(amb, {Vector::unit(*ring_, 1, 0)});
  } else if (n == 1) {
    result = module_;
  } else {
    Submodule prev = power(n - 1);
    auto products = rees_power_products(*ring_, e_, n, prev.gens(), module_.gens());
    result = Submodule(amb, minimal_generators(amb, products));
  }
  powers_.emplace(n, result);
  return result;
}

Submodule ReesContext::power_oracle(int n) const {
  if (n == 0) return power(0);
  FreeModule amb = power_ambient(n);
  const int d = nvars();
  std::vector<std::string> names = ring_->names();
  auto tnames = prefixed("t", e_);
  names.insert(names.end(), tnames.begin(), tnames.end());
  std::vector<int> weights = ring_->weights();
  weights.insert(weights.end(), static_cast<std::size_t>(e_), 1);
  RingOptions opts;
  opts.max_degree = ring_->max_degree();
  auto t_ring = Ring::make(ring_->field(), names, weights, opts);
  RingMap embed(*ring_, *t_ring, by_name(*ring_, *t_ring));

  std::vector<Polynomial> forms;
  for (const auto& g : module_.gens()) {
    Polynomial l = t_ring->zero();
    for (int i = 0; i < e_; ++i) l = l + embed(g[i]) * t_ring->variable(d + i);
    forms.push_back(l);
  }
  auto t_degree = [&](const Polynomial& f) {
    return t_ring->partial_degree(f.leading_monomial(), d, d + e_);
  };
  std::vector<Polynomial> current = forms;
  for (int k = 2; k <= n; ++k) {
    std::vector<Polynomial> products;
    for (const auto& f : current) {
      for (const auto& l : forms) products.push_back(f * l);
    }
    current.clear();
    for (const auto& v : ideal_basis(t_ring, products).generators()) {
      if (t_degree(v[0]) == k) current.push_back(v[0]);
    }
  }

  auto basis = power_basis(e_, n);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  std::vector<Vector> out;
  for (const auto& f : current) {
    std::vector<std::vector<Term>> comps(basis.size());
    for (const auto& t : f.terms()) {
      std::vector<int> alpha(static_cast<std::size_t>(e_));
      std::vector<int> xs(static_cast<std::size_t>(d));
      for (int i = 0; i < e_; ++i) alpha[static_cast<std::size_t>(i)] = t.mono[d + i];
      for (int i = 0; i < d; ++i) xs[static_cast<std::size_t>(i)] = t.mono[i];
      comps[static_cast<std::size_t>(index.at(alpha))].push_back(Term{ring_->monomial(xs), t.coeff});
    }
    std::vector<Polynomial> entries;
    for (auto& c : comps) entries.push_back(ring_->from_terms(std::move(c)));
    out.push_back(Vector(*ring_, std::move(entries)));
  }
  return Submodule(amb, std::move(out));
}

std::string ReesContext::power_csv(int n) const {
  Submodule p = power(n);
  auto basis = power_basis(e_, n);
  std::ostringstream os;
  os << "basis";
  for (std::size_t j = 0; j < p.gens().size(); ++j) os << ",g" << j + 1;
  os << '\n';
  for (std::size_t i = 0; i < basis.size(); ++i) {
    os << basis_label(basis[i]);
    for (const auto& g : p.gens()) os << ',' << g[static_cast<int>(i)].to_string();
    os << '\n';
  }
  return os.str();
}

const ReesPresentation& ReesContext::presentation() const {
  std::call_once(presentation_once_, [this] {
    const int d = nvars();
    const int m = mu();
    auto tnames = prefixed("t", e_);
    auto ynames = prefixed("y", m);
    std::vector<std::string> names = tnames;
    names.insert(names.end(), ring_->names().begin(), ring_->names().end());
    names.insert(names.end(), ynames.begin(), ynames.end());
    std::vector<int> weights(static_cast<std::size_t>(e_), 1);
    weights.insert(weights.end(), ring_->weights().begin(), ring_->weights().end());
    for (int deg : degrees_) weights.push_back(deg + 1);
    RingOptions opts;
    opts.order = MonomialOrder::BlockElimination;
    opts.first_block = e_;
    opts.max_degree = ring_->max_degree();
    auto big = Ring::make(ring_->field(), names, weights, opts);
    RingMap embed(*ring_, *big, by_name(*ring_, *big));

    std::vector<Polynomial> rel;
    for (int j = 0; j < m; ++j) {
      const Vector& g = module_.gens()[static_cast<std::size_t>(j)];
      Polynomial f = big->variable(e_ + d + j);
      for (int i = 0; i < e_; ++i) f = f - embed(g[i]) * big->variable(i);
      rel.push_back(f);
    }
    std::vector<Polynomial> kernel = eliminate(big, rel, e_);

    std::vector<std::string> snames = ring_->names();
    snames.insert(snames.end(), ynames.begin(), ynames.end());
    std::vector<int> sweights(weights.begin() + e_, weights.end());
    RingOptions sopts;
    sopts.max_degree = ring_->max_degree();
    auto s_ring = Ring::make(ring_->field(), snames, sweights, sopts);
    RingMap to_s(*big, *s_ring, by_name(*big, *s_ring));
    std::vector<Polynomial> j_gens;
    for (const auto& f : kernel) j_gens.push_back(to_s(f));
    Submodule j_ideal = minimalize(Submodule::ideal(s_ring, j_gens));

    RingOptions fopts;
    fopts.max_degree = ring_->max_degree();
    auto f_ring = Ring::make(ring_->field(), ynames, {}, fopts);
    RingMap to_f(*s_ring, *f_ring, by_name(*s_ring, *f_ring));
    std::vector<Polynomial> f_gens;
    for (const auto& f : j_ideal.ideal_gens()) {
      Polynomial h = to_f(f);
      if (!h.is_zero()) f_gens.push_back(h);
    }
    Submodule f_ideal = minimalize(Submodule::ideal(f_ring, f_gens));
    presentation_.emplace(ReesPresentation{s_ring, j_ideal, f_ring, f_ideal});
  });
  return *presentation_;
}

int ReesContext::rank() const { return reesalg::rank(module_); }

int ReesContext::dim_rees() const {
  int by_presentation = krull_dim(Quotient{presentation().ideal});
  int by_rank = nvars() + rank();
  if (by_presentation != by_rank) {
    throw InternalInconsistency("dim of the Rees algebra: presentation gives " +
                                std::to_string(by_presentation) + ", d + rank gives " +
                                std::to_string(by_rank));
  }
  return by_presentation;
}

int ReesContext::analytic_spread() const {
  int l = krull_dim(Quotient{presentation().fiber_ideal});
  if (l < 0 || l > mu()) {
    throw InternalInconsistency("analytic spread " + std::to_string(l) + " outside [0, mu]");
  }
  if (nvars() > 0 && l > nvars() + e_ - 1) {
    throw InternalInconsistency("analytic spread " + std::to_string(l) + " exceeds d + e - 1 = " +
                                std::to_string(nvars() + e_ - 1));
  }
  return l;
}

Submodule ReesContext::fitting_invariant() const {
  return ideal_of_minors(ring_, module_.gens(), e_, e_);
}

ExtendedInt ReesContext::fitting_height() const { return height(fitting_invariant()); }

bool ReesContext::is_ideal_module() const {
  std::call_once(ideal_module_once_, [this] {
    ideal_module_ = rank() == e_ && double_dual_free(module_);
  });
  return ideal_module_;
}

void ReesContext::require_ideal_module() const {
  if (rank() != e_) {
    throw DomainError("not an ideal module: rank " + std::to_string(rank()) + " < e = " +
                      std::to_string(e_));
  }
  if (!is_ideal_module()) throw DomainError("not an ideal module: the double dual is not free");
}

int ReesContext::deviation() const {
  require_ideal_module();
  int dev = mu() - e_ + 1 - static_cast<int>(fitting_height().finite());
  int ad = analytic_spread() - e_ + 1 - static_cast<int>(fitting_height().finite());
  if (!(dev >= ad && ad >= 0)) {
    throw InternalInconsistency("deviation " + std::to_string(dev) + " and analytic deviation " +
                                std::to_string(ad) + " violate dev >= ad >= 0");
  }
  return dev;
}

int ReesContext::analytic_deviation() const {
  int dev = deviation();
  return dev - (mu() - analytic_spread());
}

int ReesContext::local_generators(const Submodule& prime) const {
  for (int r = 0; r < mu(); ++r) {
    if (!prime.contains(fitting_ideal(module_, r))) return r;
  }
  return mu();
}

std::vector<Submodule> ReesContext::fitting_minimal_primes(const std::vector<Submodule>& supplied) const {
  if (!supplied.empty()) return supplied;
  std::vector<Submodule> out;
  for (const auto& p : minimal_primes_monomial(fitting_invariant())) out.push_back(prime_ideal(ring_, p));
  return out;
}

bool ReesContext::generically_complete_intersection(const std::vector<Submodule>& supplied) const {
  require_ideal_module();
  long target = fitting_height().finite() + e_ - 1;
  for (const auto& p : fitting_minimal_primes(supplied)) {
    if (local_generators(p) != target) return false;
  }
  return true;
}

Predicates ReesContext::predicates(const std::vector<Submodule>& supplied) const {
  Predicates out;
  out.complete_intersection = deviation() == 0;
  out.equimultiple = analytic_deviation() == 0;
  try {
    out.generically_ci = generically_complete_intersection(supplied);
  } catch (const UnsupportedInstance& err) {
    out.generically_ci_note = err.what();
  }
  return out;
}

}  // namespace reesalg
