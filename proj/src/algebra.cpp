#include "homly/algebra.hpp"

#include <random>
#include <string>

#include "homly/error.hpp"

namespace homly {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(expected) +
                            ", got " + std::to_string(got));
}

template <class Table>
bool table_equal_or_zero(const std::optional<Table>& a, const std::optional<Table>& b) {
  if (a && b) return *a == *b;
  if (a) return a->is_zero();
  if (b) return b->is_zero();
  return true;
}

}  // namespace

Vector BinaryTable::product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void BinaryTable::set_product(std::size_t i, std::size_t j, const Vector& v) {
  require_dim(dim_, v.dim(), "binary product");
  for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = v[k];
}

bool BinaryTable::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Vector TernaryTable::product(std::size_t i, std::size_t j, std::size_t k) const {
  Vector v(dim_);
  for (std::size_t l = 0; l < dim_; ++l) v[l] = (*this)(i, j, k, l);
  return v;
}

void TernaryTable::set_product(std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
  require_dim(dim_, v.dim(), "ternary product");
  for (std::size_t l = 0; l < dim_; ++l) (*this)(i, j, k, l) = v[l];
}

bool TernaryTable::is_zero() const {
  for (const auto& d : d_)
    if (!d.is_zero()) return false;
  return true;
}

Algebra Algebra::empty(std::string name, std::size_t dim) {
  Algebra a;
  a.name = std::move(name);
  a.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) a.basis.push_back("e" + std::to_string(i + 1));
  a.alpha = LinearMap::identity(dim);
  return a;
}

void Algebra::validate() const {
  require_dim(dim, basis.size(), "basis labels");
  require_dim(dim, alpha.dim(), "alpha");
  if (binary) require_dim(dim, binary->dim(), "binary table");
  if (ternary) require_dim(dim, ternary->dim(), "ternary table");
}

Vector eval_binary(const Algebra& a, const Vector& x, const Vector& y) {
  require_dim(a.dim, x.dim(), "eval_binary");
  require_dim(a.dim, y.dim(), "eval_binary");
  const std::size_t n = a.dim;
  Vector out(n);
  if (!a.binary) return out;
  const BinaryTable& c = *a.binary;
  Rational xy;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) out[k].add_product(xy, c(i, j, k));
    }
  }
  return out;
}

Vector eval_ternary(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  require_dim(a.dim, x.dim(), "eval_ternary");
  require_dim(a.dim, y.dim(), "eval_ternary");
  require_dim(a.dim, z.dim(), "eval_ternary");
  const std::size_t n = a.dim;
  Vector out(n);
  if (!a.ternary) return out;
  const TernaryTable& d = *a.ternary;
  Rational xy;
  Rational xyz;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        xyz = xy * z[k];
        for (std::size_t l = 0; l < n; ++l)
          if (!d(i, j, k, l).is_zero()) out[l].add_product(xyz, d(i, j, k, l));
      }
    }
  }
  return out;
}

CheckReport is_multiplicative(const Algebra& a, std::size_t cap) {
  a.validate();
  const std::size_t n = a.dim;
  CheckReport report;
  report.suite_id = "multiplicativity";
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(a.alpha.column(i));

  if (a.binary) {
    VerdictBuilder b("mult-binary", cap);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b.record({i, j}, map_apply(a.alpha, a.binary->product(i, j)) - eval_binary(a, img[i], img[j]));
    report.add(std::move(b).finish());
  }
  if (a.ternary) {
    VerdictBuilder b("mult-ternary", cap);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          b.record({i, j, k}, map_apply(a.alpha, a.ternary->product(i, j, k)) -
                                  eval_ternary(a, img[i], img[j], img[k]));
    report.add(std::move(b).finish());
  }
  return report;
}

Algebra random_algebra(std::size_t dim, std::uint64_t seed, const RandomAlgebraOptions& opts) {
  std::mt19937_64 rng(seed);
  // mt19937_64's output sequence is fixed by the standard; the reduction
  // below keeps the draws identical across standard libraries.
  auto draw = [&rng] { return Rational(static_cast<long>(rng() % 7) - 3); };

  Algebra a = Algebra::empty("random-d" + std::to_string(dim) + "-s" + std::to_string(seed), dim);
  BinaryTable c(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (opts.skew_binary && i >= j) continue;
      for (std::size_t k = 0; k < dim; ++k) {
        c(i, j, k) = draw();
        if (opts.skew_binary) c(j, i, k) = -c(i, j, k);
      }
    }
  a.binary = std::move(c);

  if (opts.with_ternary) {
    TernaryTable d(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          for (std::size_t l = 0; l < dim; ++l) d(i, j, k, l) = draw();
    a.ternary = std::move(d);
  }
  if (opts.alpha == AlphaKind::random) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a.alpha(i, j) = draw();
  }
  return a;
}

bool algebras_equal(const Algebra& a1, const Algebra& a2) {
  return a1.dim == a2.dim && a1.alpha == a2.alpha && table_equal_or_zero(a1.binary, a2.binary) &&
         table_equal_or_zero(a1.ternary, a2.ternary);
}

}  // namespace homly
