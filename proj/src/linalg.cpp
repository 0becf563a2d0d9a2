#include "homly/linalg.hpp"

#include <string>

#include "homly/error.hpp"

namespace homly {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
}

}  // namespace

Vector Vector::basis(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_dim(dim(), o.dim(), "vector add");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_dim(dim(), o.dim(), "vector subtract");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Vector& Vector::add_scaled(const Rational& s, const Vector& o) {
  require_same_dim(dim(), o.dim(), "vector axpy");
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!o.coords_[i].is_zero()) coords_[i].add_product(s, o.coords_[i]);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ']';
}

LinearMap LinearMap::identity(std::size_t dim) { return scalar(dim, Rational(1)); }

LinearMap LinearMap::scalar(std::size_t dim, const Rational& c) {
  LinearMap m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = c;
  return m;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Rational>>& rows) {
  LinearMap m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_dim(rows[i].size(), rows.size(), "matrix row");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LinearMap LinearMap::permutation(const std::vector<std::size_t>& perm) {
  LinearMap m(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

Vector LinearMap::column(std::size_t j) const {
  Vector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool LinearMap::is_identity() const { return *this == identity(dim_); }

std::ostream& operator<<(std::ostream& os, const LinearMap& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Vector map_apply(const LinearMap& m, const Vector& x) {
  require_same_dim(m.dim(), x.dim(), "map_apply");
  Vector out(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (!m(i, j).is_zero()) out[i].add_product(m(i, j), x[j]);
  }
  return out;
}

LinearMap map_compose(const LinearMap& m1, const LinearMap& m2) {
  require_same_dim(m1.dim(), m2.dim(), "map_compose");
  const std::size_t n = m1.dim();
  LinearMap out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (m1(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!m2(k, j).is_zero()) out(i, j).add_product(m1(i, k), m2(k, j));
    }
  return out;
}

LinearMap map_power(const LinearMap& m, unsigned k) {
  LinearMap out = LinearMap::identity(m.dim());
  for (unsigned i = 0; i < k; ++i) out = map_compose(m, out);
  return out;
}

bool maps_commute(const LinearMap& m1, const LinearMap& m2) {
  return map_compose(m1, m2) == map_compose(m2, m1);
}

}  // namespace homly
