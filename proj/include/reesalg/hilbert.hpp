#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "reesalg/groebner.hpp"

namespace reesalg {

// Integer Laurent polynomial sum_i coeffs[i] * t^(low + i), trimmed so the
// first and last coefficients are nonzero (or empty for zero).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, long coefficient = 1);
  // 1 - t^w
  static LaurentPolynomial one_minus(int w);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coefficient(int exponent) const;
  mpz_class value_at_one() const;
  // Largest k with (1 - t)^k dividing this; requires nonzero.
  int order_at_one() const;
  std::string to_string() const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

// numerator / prod_i (1 - t^weights[i])
struct HilbertSeries {
  LaurentPolynomial numerator;
  std::vector<int> weights;

  // dim_k of the graded piece in the given degree.
  long long value(int degree) const;
  std::vector<long long> values(int from, int to) const;
  // Krull dimension: pole order at t = 1; -1 for the zero module.
  int dimension() const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);
};

// Hilbert numerator of k[vars]/I for a monomial ideal I given by generators.
LaurentPolynomial monomial_ideal_numerator(const Ring& ring, std::vector<Monomial> gens);

// Hilbert series of F/M where gb is a Gröbner basis of M in F.
HilbertSeries hilbert_series(const GroebnerBasis& gb);

// Krull dimension of k[vars]/I for a monomial ideal: the largest set of
// variables containing the support of no generator. -1 when 1 is in I.
int monomial_krull_dim(const std::vector<Monomial>& gens, int nvars);

// Krull dimension of F/M via the leading-term module: the maximum over the
// components of F. -1 for the zero module.
int krull_dim(const GroebnerBasis& gb);

}  // namespace reesalg
