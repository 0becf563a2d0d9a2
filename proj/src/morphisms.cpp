#include "homly/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homly/error.hpp"

namespace homly {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::user: return "user";
    case Provenance::permutation: return "permutation";
    case Provenance::signed_permutation: return "signed-permutation";
    case Provenance::scalar: return "scalar";
    case Provenance::diagonal_grid: return "diagonal-grid";
  }
  return "user";
}

Provenance provenance_from_string(std::string_view s) {
  for (auto p : {Provenance::user, Provenance::permutation, Provenance::signed_permutation, Provenance::scalar,
                 Provenance::diagonal_grid})
    if (to_string(p) == s) return p;
  throw DocumentError("unknown provenance '" + std::string(s) + "'");
}

void CandidateSet::add(LinearMap m) {
  if (m.dim() != dim)
    throw DimensionMismatch("candidate of dimension " + std::to_string(m.dim()) + " in set of dimension " +
                            std::to_string(dim));
  if (std::find(maps.begin(), maps.end(), m) == maps.end()) maps.push_back(std::move(m));
}

CheckReport is_endomorphism(const Algebra& a, const LinearMap& beta, std::size_t cap) {
  a.validate();
  if (beta.dim() != a.dim)
    throw DimensionMismatch("is_endomorphism: map dimension " + std::to_string(beta.dim()) + " vs algebra " +
                            std::to_string(a.dim));
  const std::size_t n = a.dim;
  CheckReport r;
  r.suite_id = "endomorphism";
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(beta.column(i));

  if (a.binary) {
    VerdictBuilder b("binary", cap);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b.record({i, j}, map_apply(beta, a.binary->product(i, j)) - eval_binary(a, img[i], img[j]));
    r.add(std::move(b).finish());
  }
  if (a.ternary) {
    VerdictBuilder b("ternary", cap);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          b.record({i, j, k},
                   map_apply(beta, a.ternary->product(i, j, k)) - eval_ternary(a, img[i], img[j], img[k]));
    r.add(std::move(b).finish());
  }
  return r;
}

CandidateSet filter_endomorphisms(const Algebra& a, const CandidateSet& cands, bool require_commute_with_alpha) {
  if (cands.dim != a.dim)
    throw DimensionMismatch("candidate set of dimension " + std::to_string(cands.dim) + " vs algebra " +
                            std::to_string(a.dim));
  CandidateSet out;
  out.dim = cands.dim;
  out.provenance = cands.provenance;
  for (const auto& m : cands.maps) {
    if (require_commute_with_alpha && !maps_commute(m, a.alpha)) continue;
    if (is_endomorphism(a, m, 0).passed) out.maps.push_back(m);
  }
  return out;
}

CandidateSet permutation_candidates(std::size_t dim, bool is_signed, std::size_t cap) {
  // count with early exit so huge dimensions do not overflow
  std::size_t count = 1;
  auto too_many = [&] {
    return TooManyCandidates(std::string(is_signed ? "signed " : "") + "permutation candidates of dimension " +
                             std::to_string(dim) + " exceed the cap of " + std::to_string(cap));
  };
  for (std::size_t k = 2; k <= dim; ++k) {
    count *= k;
    if (count > cap) throw too_many();
  }
  if (is_signed)
    for (std::size_t k = 0; k < dim; ++k) {
      count *= 2;
      if (count > cap) throw too_many();
    }
  if (count > cap) throw too_many();

  CandidateSet out;
  out.dim = dim;
  out.provenance = is_signed ? Provenance::signed_permutation : Provenance::permutation;
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t sign_patterns = is_signed ? (std::size_t{1} << dim) : 1;
  do {
    const LinearMap p = LinearMap::permutation(perm);
    for (std::size_t s = 0; s < sign_patterns; ++s) {
      LinearMap m = p;
      for (std::size_t j = 0; j < dim; ++j)
        if (s >> j & 1U) m(perm[j], j) = -1;
      out.maps.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CandidateSet scalar_candidates(std::size_t dim, const std::vector<Rational>& values) {
  CandidateSet out;
  out.dim = dim;
  out.provenance = Provenance::scalar;
  for (const auto& c : values) out.add(LinearMap::scalar(dim, c));
  return out;
}

}  // namespace homly
