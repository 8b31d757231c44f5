#include "reesalg/asymptotics.hpp"

#include <algorithm>
#include <random>

#include "reesalg/error.hpp"

namespace reesalg {

using nlohmann::ordered_json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "CONSISTENT";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

ordered_json CheckerVerdict::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["instance"] = instance;
  j["n_max"] = n_max;
  j["quantities"] = quantities;
  j["verdict"] = verdict_name(verdict);
  j["explanation"] = explanation;
  return j;
}

std::optional<ExtendedInt> DepthSequence::tail_value() const {
  if (!tail) return std::nullopt;
  return values.back();
}

bool DepthSequence::has_zero() const {
  return std::any_of(values.begin(), values.end(), [](const ExtendedInt& v) { return v == ExtendedInt(0); });
}

ordered_json to_json(const ExtendedInt& v) {
  if (v.is_infinite()) return "inf";
  return v.finite();
}

namespace {

ordered_json tail_json(const std::optional<StableTail>& tail) {
  if (!tail) return nullptr;
  return ordered_json{{"start", tail->start}, {"length", tail->length}};
}

ordered_json values_json(const std::vector<ExtendedInt>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::vector<int> generator_degrees(const Submodule& m) {
  std::vector<int> out;
  for (const auto& v : m.gens()) out.push_back(v.degree(m.ambient().shifts));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// dim_k of E_n / (m E_n + K) for K inside E_n; the quotient lives in the
// degrees of the generators of E_n.
long minimal_generator_count_modulo(const Submodule& en, const Submodule& k) {
  const Ring& ring = en.ring();
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring.nvars(); ++i) vars.push_back(ring.variable(i));
  Submodule maximal = Submodule::ideal(en.ring_ptr(), vars);
  Submodule lower = sum(product(maximal, en), k);
  long count = 0;
  for (int deg : generator_degrees(en)) {
    count += hilbert_function(Quotient{lower}, deg, deg)[0] - hilbert_function(Quotient{en}, deg, deg)[0];
  }
  return count;
}

}  // namespace

ordered_json to_json(const DepthSequence& seq) {
  ordered_json j;
  j["values"] = values_json(seq.values);
  j["stableTail"] = tail_json(seq.tail);
  if (auto v = seq.tail_value()) {
    j["tailValue"] = to_json(*v);
  } else {
    j["tailValue"] = nullptr;
  }
  return j;
}

ordered_json to_json(const Ring& ring, const AssSequence& seq) {
  ordered_json values = ordered_json::array();
  for (const auto& ass : seq.values) {
    ordered_json primes = ordered_json::array();
    for (const auto& p : ass.primes) primes.push_back(prime_to_string(ring, p));
    values.push_back(ordered_json{{"primes", primes}, {"zeroFromFreeSummand", ass.zero_from_free_summand}});
  }
  return ordered_json{{"values", values}, {"stableTail", tail_json(seq.tail)}};
}

Asymptotics::Asymptotics(const ReesContext& ctx, AnalysisOptions options)
    : ctx_(ctx), options_(std::move(options)) {
  if (options_.n_max < 1) throw DomainError("the window needs n_max >= 1");
  if (options_.window < 1) throw DomainError("the stability window must be at least 1");
  // Fails early on the resource guard.
  ctx_.power_ambient(options_.n_max);
}

const DepthSequence& Asymptotics::depth_sequence() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (!depths_) {
    DepthSequence seq;
    for (int n = 1; n <= options_.n_max; ++n) seq.values.push_back(depth(Quotient{ctx_.power(n)}));
    seq.tail = find_stable_tail(seq.values, options_.window);
    depths_ = std::move(seq);
  }
  return *depths_;
}

const std::vector<ExtendedInt>& Asymptotics::depth_powers() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (!power_depths_) {
    std::vector<ExtendedInt> out;
    for (int n = 0; n <= options_.n_max; ++n) out.push_back(depth(as_abstract_module(ctx_.power(n))));
    power_depths_ = std::move(out);
  }
  return *power_depths_;
}

const std::vector<int>& Asymptotics::quotient_dimensions() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (!dims_) {
    std::vector<int> out;
    for (int n = 1; n <= options_.n_max; ++n) out.push_back(krull_dim(Quotient{ctx_.power(n)}));
    dims_ = std::move(out);
  }
  return *dims_;
}

AssSequence Asymptotics::ass_sequence() const {
  AssSequence seq;
  for (int n = 1; n <= options_.n_max; ++n) seq.values.push_back(ass_monomial(Quotient{ctx_.power(n)}));
  seq.tail = find_stable_tail(seq.values, options_.window);
  return seq;
}

ExtendedInt Asymptotics::depth_rees() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (!depth_rees_) depth_rees_ = depth(Quotient{ctx_.presentation().ideal});
  return *depth_rees_;
}

bool Asymptotics::regular_in_window(const Polynomial& a) const {
  for (int n = 1; n <= options_.n_max; ++n) {
    if (!is_nonzerodivisor(Quotient{ctx_.power(n)}, a)) return false;
  }
  return true;
}

std::optional<Polynomial> Asymptotics::superficial_element() const {
  const Ring& ring = ctx_.ring();
  const int d = ring.nvars();
  if (d == 0 || depth_sequence().has_zero()) return std::nullopt;

  std::vector<int> class_weights = ring.weights();
  std::sort(class_weights.begin(), class_weights.end());
  class_weights.erase(std::unique(class_weights.begin(), class_weights.end()), class_weights.end());

  std::optional<Polynomial> found;
  const std::vector<long long> coefficient_set{1, -1, 2};
  for (int w : class_weights) {
    std::vector<int> vars;
    for (int i = 0; i < d; ++i) {
      if (ring.weight(i) == w) vars.push_back(i);
    }
    const int m = static_cast<int>(vars.size());
    // Fewest nonzero coefficients first; the leading one is normalized to 1.
    for (int size = 1; size <= m && !found; ++size) {
      std::vector<int> choose(static_cast<std::size_t>(m), 0);
      std::fill(choose.begin(), choose.begin() + size, 1);
      do {
        std::vector<int> support;
        for (int i = 0; i < m; ++i) {
          if (choose[static_cast<std::size_t>(i)]) support.push_back(vars[static_cast<std::size_t>(i)]);
        }
        std::vector<int> digits(static_cast<std::size_t>(size), 0);
        while (!found) {
          Polynomial a = ring.variable(support[0]);
          for (int i = 1; i < size; ++i) {
            a = a + ring.constant(coefficient_set[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])]) *
                        ring.variable(support[static_cast<std::size_t>(i)]);
          }
          if (regular_in_window(a)) found = a;
          int pos = size - 1;
          while (pos >= 1 && digits[static_cast<std::size_t>(pos)] == 2) digits[static_cast<std::size_t>(pos--)] = 0;
          if (pos < 1) break;
          ++digits[static_cast<std::size_t>(pos)];
        }
      } while (!found && std::prev_permutation(choose.begin(), choose.end()));
    }
    if (found) break;
  }

  if (!found) {
    std::mt19937_64 rng(options_.seed);
    std::uniform_int_distribution<long long> coeff(1, 30000);
    for (int w : class_weights) {
      for (int attempt = 0; attempt < 16 && !found; ++attempt) {
        Polynomial a = ring.zero();
        for (int i = 0; i < d; ++i) {
          if (ring.weight(i) == w) a = a + ring.constant(coeff(rng)) * ring.variable(i);
        }
        if (!a.is_zero() && regular_in_window(a)) found = a;
      }
      if (found) break;
    }
  }
  if (!found) return std::nullopt;

  for (int n = 1; n <= options_.n_max; ++n) {
    Submodule en = ctx_.power(n);
    if (!colon(en, *found).equals(en)) {
      throw InternalInconsistency("superficial element " + found->to_string() +
                                  ": Hilbert series and colon disagree at n = " + std::to_string(n));
    }
  }
  return found;
}

CheckerVerdict Asymptotics::verdict(const std::string& name) const {
  CheckerVerdict v;
  v.name = name;
  v.instance = options_.instance;
  v.n_max = options_.n_max;
  return v;
}

CheckerVerdict Asymptotics::bar_reduce_check(const Polynomial& a, int n_max) const {
  const Ring& ring = ctx_.ring();
  ring.check_same(a);
  if (n_max < 1) throw DomainError("the window needs n_max >= 1");
  if (a.is_zero()) throw DomainError("bar reduction needs a nonzero linear form");
  int pivot = -1;
  int weight = -1;
  for (const auto& t : a.terms()) {
    int var = -1;
    for (int i = 0; i < ring.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var >= 0 || t.mono[i] != 1) {
        throw DomainError("bar reduction needs a linear form, got " + a.to_string());
      }
      var = i;
    }
    if (var < 0) throw DomainError("bar reduction needs a linear form, got " + a.to_string());
    if (weight >= 0 && ring.weight(var) != weight) {
      throw DomainError("bar reduction needs a homogeneous linear form, got " + a.to_string());
    }
    weight = ring.weight(var);
    pivot = std::max(pivot, var);
  }

  // R / (a) as the polynomial ring without the pivot variable.
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (i == pivot) continue;
    names.push_back(ring.name(i));
    weights.push_back(ring.weight(i));
  }
  RingOptions ropts;
  ropts.max_degree = ring.max_degree();
  auto bar_ring = Ring::make(ring.field(), names, weights, ropts);
  Coeff pivot_coeff;
  for (const auto& t : a.terms()) {
    if (t.mono[pivot] == 1) pivot_coeff = t.coeff;
  }
  Polynomial pivot_image = bar_ring->zero();
  for (const auto& t : a.terms()) {
    if (t.mono[pivot] == 1) continue;
    for (int i = 0; i < ring.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      int j = bar_ring->index_of(ring.name(i));
      Coeff c = ring.field().neg(ring.field().div(t.coeff, pivot_coeff));
      pivot_image = pivot_image + bar_ring->scale(bar_ring->variable(j), c);
    }
  }
  std::vector<Polynomial> images;
  for (int i = 0; i < ring.nvars(); ++i) {
    images.push_back(i == pivot ? pivot_image : bar_ring->variable(bar_ring->index_of(ring.name(i))));
  }
  RingMap reduce(ring, *bar_ring, images);

  const int e = ctx_.e();
  std::vector<Vector> bar_gens;
  for (const auto& g : ctx_.module().gens()) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < e; ++i) comps.push_back(reduce(g[i]));
    Vector v(*bar_ring, comps);
    if (!v.is_zero()) bar_gens.push_back(v);
  }
  std::vector<Submodule> bar_powers = rees_powers(bar_ring, e, bar_gens, n_max);

  // Fiber cone of the reduced module: from its own presentation when it is
  // a proper nonzero submodule; otherwise 0 or the whole of each G_n.
  FreeModule bar_g(bar_ring, e);
  Submodule bar_module(bar_g, bar_gens);
  std::optional<ReesContext> bar_ctx;
  bool bar_whole = false;
  if (!bar_gens.empty()) {
    bar_whole = bar_module.is_whole();
    if (!bar_whole) bar_ctx.emplace(bar_ring, e, bar_gens);
  }
  auto bar_fiber = [&](int n) -> long {
    if (bar_gens.empty()) return 0;
    if (bar_whole) return binomial(n + e - 1, e - 1);
    return hilbert_function(Quotient{bar_ctx->presentation().fiber_ideal}, n, n)[0];
  };

  CheckerVerdict out = verdict("bar-reduce");
  out.n_max = n_max;
  out.quantities["a"] = a.to_string();
  out.quantities["reducedVariables"] = names;
  ordered_json rows = ordered_json::array();
  std::optional<int> first_zerodivisor;
  std::string failure;
  for (int n = 1; n <= n_max; ++n) {
    Submodule en = ctx_.power(n);
    Submodule a_gn = multiple_of_ambient(en.ambient(), a);
    bool hilbert_ok = hilbert_series(Quotient{sum(en, a_gn)}) == hilbert_series(Quotient{bar_powers[static_cast<std::size_t>(n)]});
    Submodule meet = intersect(a_gn, en);
    Submodule a_en = product(Submodule::ideal(ctx_.ring_ptr(), {a}), en);
    bool meet_ok = meet.equals(a_en);
    long fiber = bar_fiber(n);
    long generators = minimal_generator_count_modulo(en, meet);
    bool fiber_ok = fiber == generators;
    rows.push_back(ordered_json{{"n", n},
                                {"hilbertEqual", hilbert_ok},
                                {"intersectionEqual", meet_ok},
                                {"fiberDimension", fiber},
                                {"generatorsModuloIntersection", generators}});
    if (!meet_ok && !first_zerodivisor) first_zerodivisor = n;
    if (failure.empty() && !hilbert_ok) {
      failure = "Hilbert series of (G_n/E_n)/a(G_n/E_n) and of the reduced quotient differ at n = " +
                std::to_string(n);
    }
    if (failure.empty() && !fiber_ok) {
      failure = "fiber cone degree " + std::to_string(n) + " has dimension " + std::to_string(fiber) +
                " but E_n/(aG_n meet E_n) needs " + std::to_string(generators) + " generators";
    }
  }
  out.quantities["perDegree"] = rows;
  if (!failure.empty()) {
    out.verdict = Verdict::Violation;
    out.explanation = failure;
  } else if (first_zerodivisor) {
    bool zerodivisor = false;
    for (int n = 1; n <= n_max && !zerodivisor; ++n) {
      zerodivisor = !is_nonzerodivisor(Quotient{ctx_.power(n)}, a);
    }
    out.quantities["firstFailingN"] = *first_zerodivisor;
    if (zerodivisor) {
      out.verdict = Verdict::Inconclusive;
      out.explanation = a.to_string() + " is not superficial: aG_n meet E_n differs from aE_n at n = " +
                        std::to_string(*first_zerodivisor);
    } else {
      out.verdict = Verdict::Violation;
      out.explanation = "aG_n meet E_n differs from aE_n at n = " + std::to_string(*first_zerodivisor) +
                        " although a is regular on every G_n/E_n";
    }
  } else {
    out.verdict = Verdict::Consistent;
    out.explanation = "all reduction identities hold for n <= " + std::to_string(n_max);
  }
  return out;
}

CheckerVerdict Asymptotics::burch_check() const {
  CheckerVerdict out = verdict("burch");
  const int d = ctx_.nvars();
  const int e = ctx_.e();
  if (d == 0) {
    out.explanation = "needs at least one variable";
    return out;
  }
  const int ell = ctx_.analytic_spread();
  const DepthSequence& seq = depth_sequence();
  out.quantities["analyticSpread"] = ell;
  out.quantities["d"] = d;
  out.quantities["e"] = e;
  out.quantities["depthSequence"] = to_json(seq);
  out.quantities["weakBound"] = d + e - 1;
  if (ell > d + e - 1) {
    out.verdict = Verdict::Violation;
    out.explanation = "analytic spread " + std::to_string(ell) + " exceeds d + e - 1 = " + std::to_string(d + e - 1);
    return out;
  }
  auto tail = seq.tail_value();
  if (!tail || tail->is_infinite()) {
    out.quantities["sharpBound"] = nullptr;
    out.explanation = "no stable depth tail within the window; only the weak bound was tested";
    return out;
  }
  long bound = d + e - 1 - tail->finite();
  out.quantities["sharpBound"] = bound;
  out.quantities["equality"] = ell == bound;
  if (ell > bound) {
    out.verdict = Verdict::Violation;
    out.explanation = "analytic spread " + std::to_string(ell) + " exceeds d + e - 1 - depth tail = " +
                      std::to_string(bound);
  } else {
    out.verdict = Verdict::Consistent;
    out.explanation = std::to_string(ell) + (ell == bound ? " = " : " < ") + std::to_string(bound);
  }
  return out;
}

CheckerVerdict Asymptotics::grade_and_depth_checks() const {
  CheckerVerdict out = verdict("grade");
  ExtendedInt rees_depth = depth_rees();
  const auto& powers = depth_powers();
  ExtendedInt inf = ExtendedInt::infinity();
  for (const auto& v : powers) {
    if (!v.is_infinite() && (inf.is_infinite() || v.finite() < inf.finite())) inf = v;
  }
  const int ell = ctx_.analytic_spread();
  out.quantities["depthRees"] = to_json(rees_depth);
  out.quantities["dimRees"] = ctx_.dim_rees();
  out.quantities["depthPowers"] = values_json(powers);
  out.quantities["infDepthPowers"] = to_json(inf);
  out.quantities["gradeEstimate"] = to_json(inf);
  out.quantities["analyticSpread"] = ell;
  if (rees_depth.is_infinite() || inf.is_infinite()) {
    out.explanation = "a depth is infinite; nothing to compare";
    return out;
  }
  long bound = inf.finite() + ell;
  out.quantities["bound"] = bound;
  out.quantities["equality"] = rees_depth.finite() == bound;
  if (rees_depth.finite() > bound) {
    out.verdict = Verdict::Violation;
    out.explanation = "depth of the Rees algebra " + rees_depth.to_string() + " exceeds inf depth E_n + spread = " +
                      std::to_string(bound);
  } else {
    out.verdict = Verdict::Consistent;
    out.explanation = rees_depth.to_string() + " <= " + std::to_string(bound);
  }
  return out;
}

CheckerVerdict Asymptotics::cm_equality_check() const {
  CheckerVerdict out = verdict("cm-equality");
  const int d = ctx_.nvars();
  const int e = ctx_.e();
  const int r = ctx_.rank();
  bool is_free = as_abstract_module(ctx_.module()).relations.is_zero();
  out.quantities["rank"] = r;
  out.quantities["free"] = is_free;
  if (r != e || is_free) {
    out.explanation = r != e ? "hypothesis fails: rank " + std::to_string(r) + " differs from e = " + std::to_string(e)
                             : "hypothesis fails: E is free";
    return out;
  }
  const int dim = ctx_.dim_rees();
  ExtendedInt rees_depth = depth_rees();
  bool cm = rees_depth == ExtendedInt(dim);
  out.quantities["dimRees"] = dim;
  out.quantities["depthRees"] = to_json(rees_depth);
  out.quantities["cohenMacaulay"] = cm;
  if (!cm) {
    out.verdict = Verdict::Consistent;
    out.explanation = "the Rees algebra is not Cohen-Macaulay; the equality is not claimed";
    return out;
  }
  const DepthSequence& seq = depth_sequence();
  out.quantities["depthSequence"] = to_json(seq);
  auto tail = seq.tail_value();
  if (!tail || tail->is_infinite()) {
    out.explanation = "Cohen-Macaulay, but no stable depth tail within the window";
    return out;
  }
  long inf = tail->finite();
  for (const auto& v : seq.values) {
    if (!v.is_infinite()) inf = std::min(inf, v.finite());
  }
  const int ell = ctx_.analytic_spread();
  long expected = d + e - 1 - inf;
  out.quantities["analyticSpread"] = ell;
  out.quantities["infDepth"] = inf;
  out.quantities["expectedSpread"] = expected;
  if (ell != expected) {
    out.verdict = Verdict::Violation;
    out.explanation = "Cohen-Macaulay Rees algebra with spread " + std::to_string(ell) + " but d + e - 1 - inf depth = " +
                      std::to_string(expected);
  } else {
    out.verdict = Verdict::Consistent;
    out.explanation = "Cohen-Macaulay and " + std::to_string(ell) + " = " + std::to_string(expected);
  }
  return out;
}

CheckerVerdict Asymptotics::cowsik_nori_check(const std::vector<Submodule>& supplied_primes) const {
  CheckerVerdict out = verdict("cowsik-nori");
  if (!ctx_.is_ideal_module()) {
    out.explanation = "hypothesis fails: E is not an ideal module";
    return out;
  }
  const int d = ctx_.nvars();
  Predicates pred = ctx_.predicates(supplied_primes);
  const int dev = ctx_.deviation();
  const int ad = ctx_.analytic_deviation();
  const long ht = ctx_.fitting_height().finite();
  const DepthSequence& seq = depth_sequence();
  const auto& dims = quotient_dimensions();

  ordered_json rows = ordered_json::array();
  bool all_cm = true;
  bool dims_expected = true;
  for (int n = 1; n <= options_.n_max; ++n) {
    const ExtendedInt& dep = seq.values[static_cast<std::size_t>(n - 1)];
    int dim = dims[static_cast<std::size_t>(n - 1)];
    bool cm = dep == ExtendedInt(dim);
    all_cm = all_cm && cm;
    dims_expected = dims_expected && dim == d - ht;
    rows.push_back(ordered_json{{"n", n}, {"depth", to_json(dep)}, {"dim", dim}, {"cohenMacaulay", cm}});
  }
  out.quantities["completeIntersection"] = pred.complete_intersection;
  out.quantities["deviation"] = dev;
  out.quantities["analyticDeviation"] = ad;
  out.quantities["fittingHeight"] = ht;
  out.quantities["expectedDimension"] = d - ht;
  if (pred.generically_ci) {
    out.quantities["genericallyCompleteIntersection"] = *pred.generically_ci;
  } else {
    out.quantities["genericallyCompleteIntersection"] = "UNSUPPORTED";
  }
  out.quantities["perDegree"] = rows;
  out.quantities["allCohenMacaulay"] = all_cm;

  // The depth tail stands in for "infinitely many n", as in the Burch check.
  const bool tail_cm = seq.tail.has_value() && all_cm && dims_expected;
  out.quantities["stableTail"] = tail_json(seq.tail);
  const bool generic_ci = pred.generically_ci.value_or(false);
  std::string failure;
  if (pred.complete_intersection && !all_cm) {
    failure = "complete intersection but some G_n/E_n is not Cohen-Macaulay";
  } else if (pred.complete_intersection && !dims_expected) {
    failure = "complete intersection but some G_n/E_n has dimension other than d - ht = " + std::to_string(d - ht);
  } else if (tail_cm && ad != 0) {
    failure = "G_n/E_n is Cohen-Macaulay of dimension d - ht along a stable tail but the analytic deviation is " +
              std::to_string(ad);
  } else if (generic_ci && !dims_expected) {
    failure = "generically a complete intersection but some G_n/E_n has dimension other than d - ht = " +
              std::to_string(d - ht);
  } else if (generic_ci && ad == 0 && !pred.complete_intersection) {
    failure = "generically a complete intersection and equimultiple, yet not a complete intersection";
  }
  if (!failure.empty()) {
    out.verdict = Verdict::Violation;
    out.explanation = failure;
  } else if (!pred.generically_ci) {
    out.explanation = "generic complete intersection status unavailable: " + pred.generically_ci_note;
  } else {
    out.verdict = Verdict::Consistent;
    out.explanation = std::string("complete intersection: ") + yes_no(pred.complete_intersection) +
                      ", all quotients Cohen-Macaulay: " + yes_no(all_cm);
  }
  return out;
}

}  // namespace reesalg
