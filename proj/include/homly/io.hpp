#pragma once

#include <string>
#include <string_view>

#include "homly/algebra.hpp"
#include "homly/morphisms.hpp"
#include "homly/report.hpp"

namespace homly {

/// Version written into every emitted document.
inline constexpr int kDocumentVersion = 1;

/// Parses an algebra document:
///
///   {"version": 1, "name": "so3", "dim": 3, "basis": ["e1", "e2", "e3"],
///    "alpha": [["1","0","0"], ...],                      // optional, row-major
///    "binary":  [{"i": 0, "j": 1, "coeffs": {"2": "1"}}, ...],
///    "ternary": [{"i": 0, "j": 1, "k": 2, "coeffs": {"0": "-1/2"}}, ...]}
///
/// Indices are 0-based; unspecified constants are zero. A present "binary" or
/// "ternary" key (even an empty list) yields a present table. Throws
/// DocumentError naming the offending path.
Algebra parse_algebra(std::string_view text);

/// Canonical document: entries sorted by index tuple, zero coefficients
/// omitted, canonical rationals, alpha always written.
std::string emit_algebra(const Algebra& a);

/// {"version": 1, "dim": n, "matrix": [[...], ...]} with row-major rationals.
LinearMap parse_map(std::string_view text);
std::string emit_map(const LinearMap& m);

/// {"version": 1, "dim": n, "provenance": "user", "maps": [matrix, ...]}.
/// Duplicates in the file are dropped.
CandidateSet parse_candidates(std::string_view text);
std::string emit_candidates(const CandidateSet& set);

enum class ReportFormat { text, json };

std::string emit_report(const CheckReport& r, ReportFormat format);

}  // namespace homly
