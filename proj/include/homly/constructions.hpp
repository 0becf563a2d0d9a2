#pragma once

#include "homly/algebra.hpp"
#include "homly/report.hpp"

namespace homly {

// Derived operations. Each requires a binary table and throws
// SuiteInapplicable when it is absent.

/// [x,y] = x*y - y*x
BinaryTable commutator_product(const Algebra& a);
/// as(x,y,z) = (x*y)*a(z) - a(x)*(y*z)
TernaryTable hom_associator(const Algebra& a);
/// Ternary-only algebra with [x,y,z] = [[x,y], a(z)] - as(x,y,z) + as(y,x,z)
/// (commutator bracket, Hom-associator) and the same alpha. Always a
/// Hom-triple system.
Algebra prop24_triple(const Algebra& a);
/// J(x,y,z) = [[x,y],a(z)] + [[y,z],a(x)] + [[z,x],a(y)], bracket = binary table.
TernaryTable j_alpha(const Algebra& a);
/// {x,y,z} = -J(x,y,z) + 2[[x,y], a(z)]
TernaryTable ternary_41(const Algebra& a);
/// {x,y,z} = (x*y)*z - (y*z)*x - (z*x)*y; alpha is not used.
TernaryTable ternary_33(const Algebra& a);

// Twisting constructions. Hypotheses are verified eagerly; violations throw
// PreconditionFailed with the failing check named in the message.

/// x *' y = b(x*y), {x,y,z}' = b^2({x,y,z}), alpha' = b alpha. Requires b to be
/// an endomorphism of (A, *, {,,}) commuting with alpha. Tables that are
/// absent stay absent.
Algebra yau_twist(const Algebra& a, const LinearMap& beta);

/// Twist of a Lie-Yamaguti algebra: yau_twist of A with alpha := Id, so the
/// output alpha is beta. Requires check_ly to pass and beta to be an
/// endomorphism of both operations.
Algebra twist_ly(const Algebra& a, const LinearMap& beta);

/// Malcev input (A, *) (its alpha is disregarded) and an endomorphism beta of *.
/// Output: x *' y = b(x*y), {x,y,z} = b^2((x*y)*z - (y*z)*x - (z*x)*y),
/// alpha = beta.
Algebra twist_malcev(const Algebra& a, const LinearMap& beta);

/// Lie algebra (checked with alpha := Id) to the Lie-Yamaguti algebra with
/// {x,y,z} = [[x,y],z] and alpha = Id.
Algebra lie_to_ly(const Algebra& a);

/// Algebra (binary, ternary_41(A), alpha) for a Hom-Malcev input.
Algebra with_ternary_41(const Algebra& a);

/// Runs the strict Hom-LY suite on with_ternary_41(A). Requires A to pass
/// check_hom_malcev. Makes no claim about the outcome.
CheckReport probe_homly_from_hommalcev(const Algebra& a, std::size_t cap = kDefaultCounterexampleCap);

}  // namespace homly
