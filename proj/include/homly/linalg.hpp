#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "homly/rational.hpp"

namespace homly {

/// Coordinate vector over the rationals.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  /// this += s * o
  Vector& add_scaled(const Rational& s, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  Vector operator-() const { return Vector(dim()) -= *this; }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Vector& v);

 private:
  std::vector<Rational> coords_;
};

/// Square rational matrix. Column j is the image of basis vector e_j, so
/// entry (i, j) is the e_i-coordinate of M(e_j).
class LinearMap {
 public:
  LinearMap() = default;
  /// Zero map of the given dimension.
  explicit LinearMap(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static LinearMap identity(std::size_t dim);
  static LinearMap zero(std::size_t dim) { return LinearMap(dim); }
  static LinearMap scalar(std::size_t dim, const Rational& c);
  /// Builds from rows; throws DimensionMismatch when not square.
  static LinearMap from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Maps e_j to e_{perm[j]}.
  static LinearMap permutation(const std::vector<std::size_t>& perm);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  /// Image of e_j.
  Vector column(std::size_t j) const;
  bool is_identity() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LinearMap& m);

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;  // row-major
};

/// Exact M x. Throws DimensionMismatch.
Vector map_apply(const LinearMap& m, const Vector& x);
/// (m1 ∘ m2)(x) = m1(m2(x)). Throws DimensionMismatch.
LinearMap map_compose(const LinearMap& m1, const LinearMap& m2);
/// m^0 is the identity.
LinearMap map_power(const LinearMap& m, unsigned k);
bool maps_commute(const LinearMap& m1, const LinearMap& m2);

}  // namespace homly
