#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace reesalg {

// A coefficient of either supported field. Residues mod p are stored inline;
// rationals are heap-allocated and only present when the field has
// characteristic zero. Arithmetic always goes through a Field.
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(std::uint32_t residue) : residue_(residue) {}
  explicit Coeff(mpq_class q) : rational_(std::make_unique<mpq_class>(std::move(q))) {}

  Coeff(const Coeff& other)
      : residue_(other.residue_),
        rational_(other.rational_ ? std::make_unique<mpq_class>(*other.rational_) : nullptr) {}
  Coeff& operator=(const Coeff& other) {
    if (this != &other) {
      residue_ = other.residue_;
      rational_ = other.rational_ ? std::make_unique<mpq_class>(*other.rational_) : nullptr;
    }
    return *this;
  }
  Coeff(Coeff&&) noexcept = default;
  Coeff& operator=(Coeff&&) noexcept = default;

  std::uint32_t residue() const noexcept { return residue_; }
  bool is_rational() const noexcept { return rational_ != nullptr; }
  const mpq_class& rational() const { return *rational_; }

 private:
  std::uint32_t residue_ = 0;
  std::unique_ptr<mpq_class> rational_;
};

// The prime field F_p (p < 2^31) or the rationals (characteristic 0).
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit Field(std::uint32_t characteristic = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long v) const;
  Coeff from_ratio(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool equal(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;  // throws DomainError on zero
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  // Signed textual form: symmetric residue for F_p, reduced fraction for Q.
  std::string to_string(const Coeff& a) const;
  bool is_negative(const Coeff& a) const;

  // Deterministic total order used for canonical sorting only.
  int compare(const Coeff& a, const Coeff& b) const;

  bool operator==(const Field& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace reesalg
