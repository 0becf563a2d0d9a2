#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homly/algebra.hpp"
#include "homly/report.hpp"

namespace homly {

/// Which reading of the sixth Hom-LY axiom to check.
///   strict:  sigma {x*y, a(z), a(u)} = 0  (reduces to A4 at alpha = Id)
///   printed: sigma [{x*y, a(z), a(u)} + {z*y, a(x), a(u)}] = 0, which is
///            identically zero whenever * is skew.
enum class B6Mode { strict, printed };

struct CheckOptions {
  std::size_t max_counterexamples = kDefaultCounterexampleCap;
  B6Mode b6 = B6Mode::strict;
};

// Every checker verifies its identities exhaustively over basis-index tuples
// and reports residuals as (left side - right side). Identities that are
// multilinear in their element variables are decided exactly this way.
// sigma is the cyclic sum over (x, y, z).

/// Lie-Yamaguti axioms A1..A6. alpha is ignored.
CheckReport check_ly(const Algebra& a, const CheckOptions& opts = {});

/// Hom-LY axioms B1..B8 (B1/B2 are multiplicativity).
CheckReport check_hom_ly(const Algebra& a, const CheckOptions& opts = {});

/// Ternary Hom-Nambu identity over all basis 5-tuples (x, y, u, v, w).
CheckReport check_hom_nambu(const Algebra& a, const CheckOptions& opts = {});

/// Skewness in the first two slots and vanishing cyclic sum; multiplicativity
/// of the ternary operation is reported informationally.
CheckReport check_hom_triple(const Algebra& a, const CheckOptions& opts = {});

/// Hom-triple axioms plus the Hom-Nambu identity.
CheckReport check_hom_lie_triple(const Algebra& a, const CheckOptions& opts = {});

/// sigma [[x,y], a(z)] = sigma as(x,y,z) - sigma as(y,x,z) where [,] is the
/// commutator and as the Hom-associator of the (arbitrary) binary product.
CheckReport check_hom_akivis(const Algebra& a, const CheckOptions& opts = {});

/// Skewness and sigma (x*y)*a(z) = 0.
CheckReport check_hom_jacobi(const Algebra& a, const CheckOptions& opts = {});

/// Skewness and the Hom-Malcev identity
///   J(a(x), a(y), [x,z]) = [J(x,y,z), a^2(x)],  J(x,y,z) = sigma [[x,y], a(z)].
/// The identity is quadratic in x, so it is checked through its polarization:
/// tuples (i, i, y, z) carry the identity itself at x = e_i, tuples (i, j, y, z)
/// with i < j carry the symmetric bilinear form obtained by substituting
/// x = e_i + e_j. Over the rationals this is equivalent to the identity for all x.
CheckReport check_hom_malcev(const Algebra& a, const CheckOptions& opts = {});

/// Skewness and
///   J(a(x),a(y),[u,v]) = [J(x,y,u), a^2(v)] + [a^2(u), J(x,y,v)] - 2 J(a(u),a(v),[x,y]).
CheckReport check_eq44(const Algebra& a, const CheckOptions& opts = {});

/// Skewness and
///   {a(x),a(y),[u,v]} = [{x,y,u}, a^2(v)] + [a^2(u), {x,y,v}]
/// with {x,y,z} = -J(x,y,z) + 2[[x,y], a(z)] formed from the binary table.
/// Any ternary table on the algebra is ignored.
CheckReport check_eq45(const Algebra& a, const CheckOptions& opts = {});

/// Suite identifiers accepted by run_suite.
const std::vector<std::string>& suite_ids();

/// Dispatches on a suite identifier. "all" runs every suite applicable to the
/// algebra and prefixes axiom ids with the suite id. Throws UnknownSuite or
/// SuiteInapplicable.
CheckReport run_suite(const Algebra& a, std::string_view suite_id, const CheckOptions& opts = {});

}  // namespace homly
