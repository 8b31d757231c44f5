#include "reesalg/field.hpp"

#include "reesalg/error.hpp"

namespace reesalg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::Validation: return "VALIDATION_ERROR";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::Domain: return "DOMAIN_ERROR";
    case ErrorCode::Resource: return "RESOURCE_ERROR";
    case ErrorCode::Unsupported: return "UNSUPPORTED_INSTANCE";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
  }
  return "UNKNOWN";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (1u << 31))) {
    throw ValidationError("characteristic must be 0 or a prime below 2^31, got " +
                          std::to_string(p_));
  }
}

Coeff Field::zero() const { return is_rational() ? Coeff(mpq_class(0)) : Coeff(0u); }
Coeff Field::one() const { return is_rational() ? Coeff(mpq_class(1)) : Coeff(1u); }

Coeff Field::from_int(long long v) const {
  if (is_rational()) return Coeff(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Coeff(static_cast<std::uint32_t>(r));
}

Coeff Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DomainError("zero denominator");
  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Coeff(std::move(q));
  }
  mpz_class pn = num % p_;
  if (pn < 0) pn += p_;
  mpz_class pd = den % p_;
  if (pd < 0) pd += p_;
  if (pd == 0) throw DomainError("denominator vanishes modulo the characteristic");
  return div(Coeff(static_cast<std::uint32_t>(pn.get_ui())),
             Coeff(static_cast<std::uint32_t>(pd.get_ui())));
}

bool Field::is_zero(const Coeff& a) const {
  return is_rational() ? sgn(a.rational()) == 0 : a.residue() == 0;
}

bool Field::is_one(const Coeff& a) const {
  return is_rational() ? a.rational() == 1 : a.residue() == 1;
}

bool Field::equal(const Coeff& a, const Coeff& b) const {
  return is_rational() ? a.rational() == b.rational() : a.residue() == b.residue();
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (is_rational()) return Coeff(mpq_class(a.rational() + b.rational()));
  std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
  if (s >= p_) s -= p_;
  return Coeff(static_cast<std::uint32_t>(s));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (is_rational()) return Coeff(mpq_class(a.rational() - b.rational()));
  std::uint64_t s = std::uint64_t{a.residue()} + p_ - b.residue();
  if (s >= p_) s -= p_;
  return Coeff(static_cast<std::uint32_t>(s));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (is_rational()) return Coeff(mpq_class(a.rational() * b.rational()));
  return Coeff(static_cast<std::uint32_t>(std::uint64_t{a.residue()} * b.residue() % p_));
}

Coeff Field::neg(const Coeff& a) const {
  if (is_rational()) return Coeff(mpq_class(-a.rational()));
  return Coeff(a.residue() == 0 ? 0u : p_ - a.residue());
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw DomainError("division by zero coefficient");
  if (is_rational()) return Coeff(mpq_class(1 / a.rational()));
  // Extended Euclid on (a, p).
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a.residue();
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return Coeff(static_cast<std::uint32_t>(t));
}

bool Field::is_negative(const Coeff& a) const {
  if (is_rational()) return sgn(a.rational()) < 0;
  return a.residue() > p_ / 2;
}

std::string Field::to_string(const Coeff& a) const {
  if (is_rational()) return a.rational().get_str();
  if (is_negative(a)) return "-" + std::to_string(p_ - a.residue());
  return std::to_string(a.residue());
}

int Field::compare(const Coeff& a, const Coeff& b) const {
  if (is_rational()) return cmp(a.rational(), b.rational()) < 0 ? -1 : (a.rational() == b.rational() ? 0 : 1);
  return a.residue() < b.residue() ? -1 : (a.residue() == b.residue() ? 0 : 1);
}

}  // namespace reesalg
