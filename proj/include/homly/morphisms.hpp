#pragma once

#include <string_view>
#include <vector>

#include "homly/algebra.hpp"
#include "homly/report.hpp"

namespace homly {

enum class Provenance { user, permutation, signed_permutation, scalar, diagonal_grid };

std::string_view to_string(Provenance p);
/// Throws DocumentError on an unknown name.
Provenance provenance_from_string(std::string_view s);

/// Finite family of candidate maps, all of dimension `dim`, without duplicates.
struct CandidateSet {
  std::size_t dim = 0;
  std::vector<LinearMap> maps;
  Provenance provenance = Provenance::user;

  /// Appends unless an equal map is already present. Throws DimensionMismatch.
  void add(LinearMap m);
};

inline constexpr std::size_t kDefaultCandidateCap = 50'000;

/// b(e_i * e_j) = b(e_i) * b(e_j) and the ternary analogue. Absent tables are
/// skipped. Throws DimensionMismatch.
CheckReport is_endomorphism(const Algebra& a, const LinearMap& beta,
                            std::size_t cap = kDefaultCounterexampleCap);

/// Keeps, in input order, the candidates that are endomorphisms of A and,
/// when requested, commute with A.alpha.
CandidateSet filter_endomorphisms(const Algebra& a, const CandidateSet& cands,
                                  bool require_commute_with_alpha);

/// All (signed) permutation matrices in lexicographic order of the
/// permutation, sign patterns innermost. Throws TooManyCandidates when the
/// count dim! (times 2^dim when signed) exceeds `cap`.
CandidateSet permutation_candidates(std::size_t dim, bool is_signed,
                                    std::size_t cap = kDefaultCandidateCap);

/// {c * Id : c in values}, deduplicated.
CandidateSet scalar_candidates(std::size_t dim, const std::vector<Rational>& values);

}  // namespace homly
