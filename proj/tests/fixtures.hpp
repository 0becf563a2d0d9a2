#pragma once

#include <array>
#include <fstream>
#include <iterator>
#include <string>

#include "homly/algebra.hpp"
#include "homly/io.hpp"

namespace homly::test {

inline std::string catalog_path(const std::string& file) { return std::string(HOMLY_CATALOG_DIR) + "/" + file; }

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline Algebra load_catalog(const std::string& file) { return parse_algebra(read_file(catalog_path(file))); }

/// so(3): e1*e2 = e3, e2*e3 = e1, e3*e1 = e2, skew.
inline Algebra so3() {
  Algebra a = Algebra::empty("so3", 3);
  BinaryTable c(3);
  for (auto [i, j, k] : {std::array<std::size_t, 3>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    c(i, j, k) = 1;
    c(j, i, k) = -1;
  }
  a.binary = c;
  return a;
}

/// Commutator algebra of the imaginary octonions, e_i e_{i+1} = e_{i+3} (mod 7).
inline Algebra octonion() {
  Algebra a = Algebra::empty("octonion-commutator", 7);
  BinaryTable c(7);
  for (std::size_t i = 0; i < 7; ++i) {
    const std::size_t p = i, q = (i + 1) % 7, r = (i + 3) % 7;
    for (auto [x, y, z] : {std::array<std::size_t, 3>{p, q, r}, {q, r, p}, {r, p, q}}) {
      c(x, y, z) = 2;
      c(y, x, z) = -2;
    }
  }
  a.binary = c;
  return a;
}

/// e1 -> e2 -> e3 -> e1
inline LinearMap cyclic3() { return LinearMap::permutation({1, 2, 0}); }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

}  // namespace homly::test
