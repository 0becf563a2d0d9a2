#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homly/linalg.hpp"
#include "homly/report.hpp"

namespace homly {

/// Structure constants of a bilinear operation: e_i * e_j = sum_k c(i,j,k) e_k.
/// No symmetry is imposed here.
class BinaryTable {
 public:
  BinaryTable() = default;
  explicit BinaryTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  /// e_i * e_j as a vector.
  Vector product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const Vector& v);
  bool is_zero() const;

  friend bool operator==(const BinaryTable&, const BinaryTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Structure constants of a trilinear operation:
/// {e_i, e_j, e_k} = sum_l d(i,j,k,l) e_l.
class TernaryTable {
 public:
  TernaryTable() = default;
  explicit TernaryTable(std::size_t dim) : dim_(dim), d_(dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return d_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return d_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  Vector product(std::size_t i, std::size_t j, std::size_t k) const;
  void set_product(std::size_t i, std::size_t j, std::size_t k, const Vector& v);
  bool is_zero() const;

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> d_;
};

/// A binary-ternary Hom-algebra (L, *, {,,}, alpha) on a fixed basis.
/// An absent table is the zero operation; suites that need a table treat
/// its absence as inapplicability.
struct Algebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::optional<BinaryTable> binary;
  std::optional<TernaryTable> ternary;
  LinearMap alpha;

  /// Empty algebra of dimension `dim` with labels e1..en and alpha = identity.
  static Algebra empty(std::string name, std::size_t dim);

  /// Throws DimensionMismatch when tables, labels or alpha disagree with dim.
  void validate() const;
};

/// Bilinear extension of the table; zero when the table is absent.
Vector eval_binary(const Algebra& a, const Vector& x, const Vector& y);
/// Trilinear extension of the table; zero when the table is absent.
Vector eval_ternary(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

/// alpha(e_i * e_j) = alpha(e_i) * alpha(e_j) on all pairs and the ternary
/// analogue on all triples. Absent tables contribute no verdict.
CheckReport is_multiplicative(const Algebra& a, std::size_t cap = kDefaultCounterexampleCap);

enum class AlphaKind { identity, random };

struct RandomAlgebraOptions {
  bool skew_binary = false;
  bool with_ternary = false;
  AlphaKind alpha = AlphaKind::identity;
};

/// Deterministic in `seed`; constants are integers in [-3, 3]. The binary
/// table is always present.
Algebra random_algebra(std::size_t dim, std::uint64_t seed, const RandomAlgebraOptions& opts);

/// Dimensions, tables (absent == zero) and alpha agree entrywise. Names and
/// labels are not compared.
bool algebras_equal(const Algebra& a1, const Algebra& a2);

}  // namespace homly
