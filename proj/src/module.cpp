#include "reesalg/module.hpp"

#include "reesalg/error.hpp"

namespace reesalg {

FreeModule::FreeModule(std::shared_ptr<const Ring> r, int rk, std::vector<int> sh,
                       PositionOrder pos)
    : ring(std::move(r)), rank(rk), shifts(std::move(sh)), position(pos) {
  if (rank < 0) throw ValidationError("negative free module rank");
  if (shifts.empty()) shifts.assign(static_cast<std::size_t>(rank), 0);
  if (static_cast<int>(shifts.size()) != rank) {
    throw ValidationError("free module needs one degree shift per basis vector");
  }
}

bool FreeModule::same_as(const FreeModule& other) const {
  return ring == other.ring && rank == other.rank && shifts == other.shifts;
}

Vector::Vector(const Ring& ring, int rank) : ring_(&ring) {
  comps_.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) comps_.push_back(ring.zero());
}

Vector::Vector(std::vector<Polynomial> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw ValidationError("cannot infer the ring of an empty vector");
  ring_ = comps_.front().ring_ptr();
  for (const auto& c : comps_) ring_->check_same(c);
}

Vector::Vector(const Ring& ring, std::vector<Polynomial> components)
    : ring_(&ring), comps_(std::move(components)) {
  for (const auto& c : comps_) ring_->check_same(c);
}

Vector Vector::unit(const Ring& ring, int rank, int i) {
  Vector v(ring, rank);
  v[i] = ring.one();
  return v;
}

bool Vector::is_zero() const {
  for (const auto& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Vector::is_homogeneous(std::span<const int> shifts) const {
  bool seen = false;
  int deg = 0;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    for (const auto& t : comps_[i].terms()) {
      int d = t.mono.degree + shifts[i];
      if (!seen) {
        deg = d;
        seen = true;
      } else if (d != deg) {
        return false;
      }
    }
  }
  return true;
}

int Vector::degree(std::span<const int> shifts) const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (!comps_[i].is_zero()) return comps_[i].leading_monomial().degree + shifts[i];
  }
  return 0;
}

bool Vector::is_monomial_in_one_component() const {
  int nonzero = 0;
  for (const auto& c : comps_) {
    if (c.is_zero()) continue;
    if (c.size() != 1) return false;
    ++nonzero;
  }
  return nonzero <= 1;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string();
  }
  return out + ")";
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.ring_ != b.ring_ || a.rank() != b.rank()) throw RingMismatchError();
  Vector r = a;
  for (int i = 0; i < a.rank(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.ring_ != b.ring_ || a.rank() != b.rank()) throw RingMismatchError();
  Vector r = a;
  for (int i = 0; i < a.rank(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Polynomial& f, const Vector& v) {
  if (f.ring_ptr() != v.ring_) throw RingMismatchError();
  Vector r = v;
  for (int i = 0; i < v.rank(); ++i) r[i] = f * v[i];
  return r;
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.ring_ != b.ring_) throw RingMismatchError();
  if (a.rank() != b.rank()) return false;
  for (int i = 0; i < a.rank(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace reesalg
