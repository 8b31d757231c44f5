#include "reesalg/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "reesalg/error.hpp"

namespace reesalg {

// ---------------------------------------------------------------- LaurentPolynomial

LaurentPolynomial LaurentPolynomial::monomial(int exponent, long coefficient) {
  LaurentPolynomial p;
  p.low_ = exponent;
  p.coeffs_.push_back(mpz_class(coefficient));
  p.trim();
  return p;
}

LaurentPolynomial LaurentPolynomial::one_minus(int w) {
  return monomial(0) - monomial(w);
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
  int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class LaurentPolynomial::value_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

int LaurentPolynomial::order_at_one() const {
  if (is_zero()) throw DomainError("order at one of the zero polynomial");
  std::vector<mpz_class> c = coeffs_;
  int k = 0;
  for (;;) {
    mpz_class s = 0;
    for (const auto& x : c) s += x;
    if (s != 0) return k;
    // Divide by (1 - t): the quotient has prefix sums as coefficients.
    std::vector<mpz_class> q(c.size() - 1);
    mpz_class run = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      run += c[i];
      q[i] = run;
    }
    c = std::move(q);
    ++k;
  }
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPolynomial r;
  r.low_ = std::min(a.low_, b.low_);
  int hi = std::max(a.high(), b.high());
  r.coeffs_.assign(static_cast<std::size_t>(hi - r.low_ + 1), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    r.coeffs_[static_cast<std::size_t>(a.low_ - r.low_) + i] += a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    r.coeffs_[static_cast<std::size_t>(b.low_ - r.low_) + i] += b.coeffs_[i];
  }
  r.trim();
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial nb = b;
  for (auto& c : nb.coeffs_) c = -c;
  return a + nb;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPolynomial r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

// ---------------------------------------------------------------- HilbertSeries

long long HilbertSeries::value(int degree) const {
  if (numerator.is_zero() || degree < numerator.low()) return 0;
  int span = degree - numerator.low();
  // Power series of 1 / prod (1 - t^w) up to t^span.
  std::vector<mpz_class> inv(static_cast<std::size_t>(span + 1), 0);
  inv[0] = 1;
  for (int w : weights) {
    for (int k = w; k <= span; ++k) inv[static_cast<std::size_t>(k)] += inv[static_cast<std::size_t>(k - w)];
  }
  mpz_class total = 0;
  for (int e = numerator.low(); e <= std::min(degree, numerator.high()); ++e) {
    total += numerator.coefficient(e) * inv[static_cast<std::size_t>(degree - e)];
  }
  if (!total.fits_slong_p()) throw ResourceError("Hilbert function value overflows");
  return total.get_si();
}

std::vector<long long> HilbertSeries::values(int from, int to) const {
  std::vector<long long> out;
  for (int d = from; d <= to; ++d) out.push_back(value(d));
  return out;
}

int HilbertSeries::dimension() const {
  if (numerator.is_zero()) return -1;
  return static_cast<int>(weights.size()) - numerator.order_at_one();
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  std::map<int, int> wa, wb;
  for (int w : a.weights) ++wa[w];
  for (int w : b.weights) ++wb[w];
  LaurentPolynomial lhs = a.numerator, rhs = b.numerator;
  // Multiply each side by the denominator factors the other side has in excess.
  for (auto& [w, count] : wb) {
    int extra = count - (wa.count(w) ? wa[w] : 0);
    for (int i = 0; i < extra; ++i) lhs = lhs * LaurentPolynomial::one_minus(w);
  }
  for (auto& [w, count] : wa) {
    int extra = count - (wb.count(w) ? wb[w] : 0);
    for (int i = 0; i < extra; ++i) rhs = rhs * LaurentPolynomial::one_minus(w);
  }
  return lhs == rhs;
}

// ---------------------------------------------------------------- monomial ideals

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens, int n) {
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

LaurentPolynomial numerator_rec(const Ring& ring, std::vector<Monomial> gens) {
  const int n = ring.nvars();
  gens = minimalize(std::move(gens), n);
  if (gens.empty()) return LaurentPolynomial::monomial(0);
  if (gens.front().is_one()) return {};

  // Pairwise coprime generators form a regular sequence.
  bool coprime_all = true;
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    std::uint32_t s = support_mask(g, n);
    if (s & seen) {
      coprime_all = false;
      break;
    }
    seen |= s;
  }
  if (coprime_all) {
    LaurentPolynomial p = LaurentPolynomial::monomial(0);
    for (const auto& g : gens) p = p * LaurentPolynomial::one_minus(g.degree);
    return p;
  }

  // Pivot on the variable occurring in the most non-linear generators.
  int best = -1, best_count = 0;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (const auto& g : gens) {
      if (g.exp[i] != 0 && support_mask(g, n) != (1u << i)) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  int power = kMaxExponent;
  for (const auto& g : gens) {
    if (g.exp[best] != 0 && support_mask(g, n) != (1u << best)) power = std::min<int>(power, g.exp[best]);
  }
  Monomial pivot = ring.variable_monomial(best, power);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(quotient(g, ring.gcd(g, pivot), n));

  return numerator_rec(ring, std::move(with_pivot)) +
         LaurentPolynomial::monomial(pivot.degree) * numerator_rec(ring, std::move(colon));
}

int min_transversal(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, int best) {
  int size = std::popcount(chosen);
  if (size >= best) return best;
  for (std::uint32_t s : supports) {
    if (s & chosen) continue;
    // Branch on each variable of the first unhit support.
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      best = min_transversal(supports, chosen | bit, best);
    }
    return best;
  }
  return size;
}

}  // namespace

LaurentPolynomial monomial_ideal_numerator(const Ring& ring, std::vector<Monomial> gens) {
  return numerator_rec(ring, std::move(gens));
}

HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  const FreeModule& f = gb.ambient();
  const Ring& ring = f.base();
  HilbertSeries hs;
  hs.weights = ring.weights();
  for (int i = 0; i < f.rank; ++i) {
    hs.numerator = hs.numerator + LaurentPolynomial::monomial(f.shift(i)) *
                                      monomial_ideal_numerator(ring, gb.leading_monomials(i));
  }
  return hs;
}

int monomial_krull_dim(const std::vector<Monomial>& gens, int nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = support_mask(g, nvars);
    if (s == 0) return -1;
    supports.push_back(s);
  }
  // Drop supports containing another support.
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t s : supports) {
    bool dominated = false;
    for (std::uint32_t m : minimal) {
      if ((m & s) == m) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(s);
  }
  return nvars - min_transversal(minimal, 0, nvars + 1);
}

int krull_dim(const GroebnerBasis& gb) {
  const FreeModule& f = gb.ambient();
  int dim = -1;
  for (int i = 0; i < f.rank; ++i) {
    dim = std::max(dim, monomial_krull_dim(gb.leading_monomials(i), f.base().nvars()));
  }
  return dim;
}

}  // namespace reesalg
