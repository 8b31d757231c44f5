#pragma once

#include <array>
#include <cstdint>

namespace reesalg {

inline constexpr int kMaxVars = 32;
inline constexpr int kMaxExponent = 255;

// Exponent vector over at most kMaxVars variables plus its weighted degree.
// Entries past the owning ring's variable count are always zero, so two
// monomials of the same ring compare equal iff their exponents agree.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  int degree = 0;

  int operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }
  bool is_one() const { return degree == 0 && exp == std::array<std::uint8_t, kMaxVars>{}; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// a | b
inline bool divides(const Monomial& a, const Monomial& b, int nvars) {
  if (a.degree > b.degree) return false;
  for (int i = 0; i < nvars; ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

// b / a, assuming a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a, int nvars) {
  Monomial q;
  for (int i = 0; i < nvars; ++i) q.exp[i] = static_cast<std::uint8_t>(b.exp[i] - a.exp[i]);
  q.degree = b.degree - a.degree;
  return q;
}

inline bool coprime(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

// Bit i set iff variable i occurs.
inline std::uint32_t support_mask(const Monomial& m, int nvars) {
  std::uint32_t mask = 0;
  for (int i = 0; i < nvars; ++i) {
    if (m.exp[i] != 0) mask |= (1u << i);
  }
  return mask;
}

}  // namespace reesalg
