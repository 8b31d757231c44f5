#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "reesalg/ring.hpp"

namespace reesalg {

enum class PositionOrder { TOP, POT };

// R^rank with basis vector e_i in degree shifts[i].
struct FreeModule {
  std::shared_ptr<const Ring> ring;
  int rank = 0;
  std::vector<int> shifts;
  PositionOrder position = PositionOrder::TOP;

  FreeModule() = default;
  FreeModule(std::shared_ptr<const Ring> r, int rk, std::vector<int> sh = {},
             PositionOrder pos = PositionOrder::TOP);

  const Ring& base() const { return *ring; }
  int shift(int i) const { return shifts[static_cast<std::size_t>(i)]; }
  bool same_as(const FreeModule& other) const;
};

// An element of a free module: a fixed-length vector of polynomials.
class Vector {
 public:
  Vector() = default;
  Vector(const Ring& ring, int rank);
  explicit Vector(std::vector<Polynomial> components);
  Vector(const Ring& ring, std::vector<Polynomial> components);

  static Vector unit(const Ring& ring, int rank, int i);

  const Ring& ring() const { return *ring_; }
  int rank() const { return static_cast<int>(comps_.size()); }
  const Polynomial& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }
  Polynomial& operator[](int i) { return comps_[static_cast<std::size_t>(i)]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  bool is_zero() const;
  // Homogeneous with respect to the given basis degrees (zero counts as homogeneous).
  bool is_homogeneous(std::span<const int> shifts) const;
  // Degree of a homogeneous nonzero vector; 0 for the zero vector.
  int degree(std::span<const int> shifts) const;
  // True when every nonzero entry is a single term and at most one entry is nonzero.
  bool is_monomial_in_one_component() const;

  std::string to_string() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Polynomial& f, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  const Ring* ring_ = nullptr;
  std::vector<Polynomial> comps_;
};

// Columns-as-vectors matrix: column j is a Vector of length rows.
using Matrix = std::vector<Vector>;

}  // namespace reesalg
