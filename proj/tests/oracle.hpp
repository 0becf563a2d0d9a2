#pragma once

// Test-only oracle. It copies an algebra's structure constants into plain
// mpq_class arrays and evaluates identities at random rational vectors with
// its own loops, so it shares no evaluation code with the checkers it is
// compared against.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "homly/algebra.hpp"

namespace homly::oracle {

using V = std::vector<mpq_class>;

inline mpq_class to_mpq(const Rational& r) {
  mpq_class q(mpz_class(r.numerator()), mpz_class(r.denominator()));
  q.canonicalize();
  return q;
}

struct Alg {
  std::size_t n = 0;
  std::vector<mpq_class> c;  // n^3, zero when absent
  std::vector<mpq_class> d;  // n^4, zero when absent
  std::vector<mpq_class> a;  // n^2 row-major

  explicit Alg(const Algebra& src) : n(src.dim), c(n * n * n), d(n * n * n * n), a(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = to_mpq(src.alpha(i, j));
        for (std::size_t k = 0; k < n; ++k) {
          if (src.binary) c[(i * n + j) * n + k] = to_mpq((*src.binary)(i, j, k));
          for (std::size_t l = 0; l < n; ++l)
            if (src.ternary) d[((i * n + j) * n + k) * n + l] = to_mpq((*src.ternary)(i, j, k, l));
        }
      }
  }

  V zero() const { return V(n); }
  V mul(const V& x, const V& y) const {
    V r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) r[k] += x[i] * y[j] * c[(i * n + j) * n + k];
    return r;
  }
  V tri(const V& x, const V& y, const V& z) const {
    V r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) r[l] += x[i] * y[j] * z[k] * d[((i * n + j) * n + k) * n + l];
    return r;
  }
  V al(const V& x, int times = 1) const {
    V cur = x;
    for (int t = 0; t < times; ++t) {
      V r(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] += a[i * n + j] * cur[j];
      cur = r;
    }
    return cur;
  }
};

inline V operator+(V a, const V& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline V operator-(V a, const V& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline V operator*(const mpq_class& s, V a) {
  for (auto& x : a) x *= s;
  return a;
}
inline bool is_zero(const V& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

/// Random vector with coordinates p/q, p in [-5, 5], q in [1, 3].
inline V random_vector(std::size_t n, std::mt19937_64& rng) {
  V v(n);
  for (auto& x : v) {
    x = mpq_class(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(rng() % 3 + 1));
    x.canonicalize();
  }
  return v;
}

/// Residual of each named identity at one random assignment x, y, z, u, v, w.
/// Identity names match the checkers' axiom ids.
inline std::map<std::string, V> residuals(const Alg& A, const std::vector<V>& s) {
  const V &x = s[0], &y = s[1], &z = s[2], &u = s[3], &v = s[4], &w = s[5];
  auto m = [&](const V& p, const V& q) { return A.mul(p, q); };
  auto t = [&](const V& p, const V& q, const V& r) { return A.tri(p, q, r); };
  auto al = [&](const V& p, int k = 1) { return A.al(p, k); };
  auto com = [&](const V& p, const V& q) { return m(p, q) - m(q, p); };
  auto as = [&](const V& p, const V& q, const V& r) { return m(m(p, q), al(r)) - m(al(p), m(q, r)); };
  auto J = [&](const V& p, const V& q, const V& r) {
    return m(m(p, q), al(r)) + m(m(q, r), al(p)) + m(m(r, p), al(q));
  };
  auto T41 = [&](const V& p, const V& q, const V& r) {
    return mpq_class(2) * m(m(p, q), al(r)) - J(p, q, r);
  };
  auto id = [&](const V& p, int = 1) { return p; };

  std::map<std::string, V> out;
  // Lie-Yamaguti (no twist)
  out["A1"] = m(x, y) + m(y, x);
  out["A2"] = t(x, y, z) + t(y, x, z);
  out["A3"] = m(m(x, y), z) + t(x, y, z) + m(m(y, z), x) + t(y, z, x) + m(m(z, x), y) + t(z, x, y);
  out["A4"] = t(m(x, y), z, u) + t(m(y, z), x, u) + t(m(z, x), y, u);
  out["A5"] = t(x, y, m(u, v)) - m(t(x, y, u), v) - m(u, t(x, y, v));
  out["A6"] = t(x, y, t(u, v, w)) - t(t(x, y, u), v, w) - t(u, t(x, y, v), w) - t(u, v, t(x, y, w));
  (void)id;
  // Hom-LY
  out["B1"] = al(m(x, y)) - m(al(x), al(y));
  out["B2"] = al(t(x, y, z)) - t(al(x), al(y), al(z));
  out["B3"] = out["A1"];
  out["B4"] = out["A2"];
  out["B5"] = m(m(x, y), al(z)) + t(x, y, z) + m(m(y, z), al(x)) + t(y, z, x) + m(m(z, x), al(y)) + t(z, x, y);
  out["B6"] = t(m(x, y), al(z), al(u)) + t(m(y, z), al(x), al(u)) + t(m(z, x), al(y), al(u));
  out["B6-printed"] = out["B6"] + t(m(z, y), al(x), al(u)) + t(m(x, z), al(y), al(u)) + t(m(y, x), al(z), al(u));
  out["B7"] = t(al(x), al(y), m(u, v)) - m(t(x, y, u), al(v, 2)) - m(al(u, 2), t(x, y, v));
  out["B8"] = t(al(x, 2), al(y, 2), t(al(u, 2), al(v, 2), w)) - t(t(x, y, al(u, 2)), al(v, 4), al(w, 2)) -
              t(al(u, 4), t(x, y, al(v, 2)), al(w, 2)) - t(al(u, 4), al(v, 4), t(x, y, w));
  // ternary Hom-algebras
  out["nambu"] = t(al(x), al(y), t(u, v, w)) - t(t(x, y, u), al(v), al(w)) - t(al(u), t(x, y, v), al(w)) -
                 t(al(u), al(v), t(x, y, w));
  out["cyclic"] = t(u, v, w) + t(v, w, u) + t(w, u, v);
  // binary Hom-algebras
  out["akivis"] = com(com(x, y), al(z)) + com(com(y, z), al(x)) + com(com(z, x), al(y)) -
                  (as(x, y, z) + as(y, z, x) + as(z, x, y)) + (as(y, x, z) + as(z, y, x) + as(x, z, y));
  out["jacobi"] = J(x, y, z);
  out["malcev"] = J(al(x), al(y), m(x, z)) - m(J(x, y, z), al(x, 2));
  out["eq44"] = J(al(x), al(y), m(u, v)) - m(J(x, y, u), al(v, 2)) - m(al(u, 2), J(x, y, v)) +
                mpq_class(2) * J(al(u), al(v), m(x, y));
  out["eq45"] = T41(al(x), al(y), m(u, v)) - m(T41(x, y, u), al(v, 2)) - m(al(u, 2), T41(x, y, v));
  return out;
}

/// Identity verdicts from `samples` random assignments: an identity holds
/// iff its residual vanishes at every sample.
inline std::map<std::string, bool> verdicts(const Algebra& src, std::uint64_t seed, int samples = 3) {
  const Alg A(src);
  std::mt19937_64 rng(seed);
  std::map<std::string, bool> out;
  for (int s = 0; s < samples; ++s) {
    std::vector<V> vars;
    for (int k = 0; k < 6; ++k) vars.push_back(random_vector(A.n, rng));
    for (const auto& [name, r] : residuals(A, vars)) {
      auto [it, fresh] = out.emplace(name, true);
      it->second = it->second && is_zero(r);
    }
  }
  return out;
}

}  // namespace homly::oracle
