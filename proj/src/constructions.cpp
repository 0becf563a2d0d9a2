#include "homly/constructions.hpp"

#include <functional>
#include <string>

#include "homly/error.hpp"
#include "homly/morphisms.hpp"
#include "homly/suites.hpp"

namespace homly {

namespace {

void require_binary(const Algebra& a, const char* what) {
  a.validate();
  if (!a.binary) throw SuiteInapplicable(std::string(what) + ": algebra has no binary table");
}

TernaryTable build_ternary(std::size_t n, const std::function<Vector(const Vector&, const Vector&, const Vector&)>& f) {
  TernaryTable t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        t.set_product(i, j, k, f(Vector::basis(n, i), Vector::basis(n, j), Vector::basis(n, k)));
  return t;
}

Algebra with_identity_alpha(const Algebra& a) {
  Algebra out = a;
  out.alpha = LinearMap::identity(a.dim);
  return out;
}

void require_pass(const CheckReport& r, const std::string& what) {
  if (r.passed) return;
  std::string msg = what + ": " + r.suite_id + " check failed";
  for (const auto& v : r.axioms)
    if (!v.passed) {
      msg += " (first failing axiom " + v.axiom_id + ")";
      break;
    }
  throw PreconditionFailed(msg);
}

BinaryTable map_binary(const BinaryTable& c, const LinearMap& m) {
  BinaryTable out(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) out.set_product(i, j, map_apply(m, c.product(i, j)));
  return out;
}

TernaryTable map_ternary(const TernaryTable& d, const LinearMap& m) {
  TernaryTable out(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      for (std::size_t k = 0; k < d.dim(); ++k) out.set_product(i, j, k, map_apply(m, d.product(i, j, k)));
  return out;
}

}  // namespace

BinaryTable commutator_product(const Algebra& a) {
  require_binary(a, "commutator_product");
  const BinaryTable& c = *a.binary;
  BinaryTable out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) out(i, j, k) = c(i, j, k) - c(j, i, k);
  return out;
}

TernaryTable hom_associator(const Algebra& a) {
  require_binary(a, "hom_associator");
  return build_ternary(a.dim, [&](const Vector& x, const Vector& y, const Vector& z) {
    return eval_binary(a, eval_binary(a, x, y), map_apply(a.alpha, z)) -
           eval_binary(a, map_apply(a.alpha, x), eval_binary(a, y, z));
  });
}

Algebra prop24_triple(const Algebra& a) {
  require_binary(a, "prop24_triple");
  Algebra bracket = a;
  bracket.binary = commutator_product(a);
  Algebra assoc = a;
  assoc.binary.reset();
  assoc.ternary = hom_associator(a);

  Algebra out = a;
  out.name = a.name + "-prop24";
  out.binary.reset();
  out.ternary = build_ternary(a.dim, [&](const Vector& x, const Vector& y, const Vector& z) {
    Vector r = eval_binary(bracket, eval_binary(bracket, x, y), map_apply(a.alpha, z));
    r -= eval_ternary(assoc, x, y, z);
    r += eval_ternary(assoc, y, x, z);
    return r;
  });
  return out;
}

TernaryTable j_alpha(const Algebra& a) {
  require_binary(a, "j_alpha");
  auto br = [&](const Vector& x, const Vector& y) { return eval_binary(a, x, y); };
  return build_ternary(a.dim, [&](const Vector& x, const Vector& y, const Vector& z) {
    Vector r = br(br(x, y), map_apply(a.alpha, z));
    r += br(br(y, z), map_apply(a.alpha, x));
    r += br(br(z, x), map_apply(a.alpha, y));
    return r;
  });
}

TernaryTable ternary_41(const Algebra& a) {
  require_binary(a, "ternary_41");
  const TernaryTable j = j_alpha(a);
  const TernaryTable two_bracket = build_ternary(a.dim, [&](const Vector& x, const Vector& y, const Vector& z) {
    return Rational(2) * eval_binary(a, eval_binary(a, x, y), map_apply(a.alpha, z));
  });
  TernaryTable out(a.dim);
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j2 = 0; j2 < n; ++j2)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out(i, j2, k, l) = two_bracket(i, j2, k, l) - j(i, j2, k, l);
  return out;
}

TernaryTable ternary_33(const Algebra& a) {
  require_binary(a, "ternary_33");
  auto mul = [&](const Vector& x, const Vector& y) { return eval_binary(a, x, y); };
  return build_ternary(a.dim, [&](const Vector& x, const Vector& y, const Vector& z) {
    return mul(mul(x, y), z) - mul(mul(y, z), x) - mul(mul(z, x), y);
  });
}

Algebra yau_twist(const Algebra& a, const LinearMap& beta) {
  a.validate();
  if (beta.dim() != a.dim)
    throw DimensionMismatch("yau_twist: map dimension " + std::to_string(beta.dim()) + " vs algebra " +
                            std::to_string(a.dim));
  require_pass(is_endomorphism(a, beta), "yau_twist: beta is not an endomorphism");
  if (!maps_commute(beta, a.alpha)) throw PreconditionFailed("yau_twist: beta does not commute with alpha");

  const LinearMap beta2 = map_compose(beta, beta);
  Algebra out = a;
  out.name = a.name + "-twisted";
  if (a.binary) out.binary = map_binary(*a.binary, beta);
  if (a.ternary) out.ternary = map_ternary(*a.ternary, beta2);
  out.alpha = map_compose(beta, a.alpha);
  return out;
}

Algebra twist_ly(const Algebra& a, const LinearMap& beta) {
  require_pass(check_ly(a), "twist_ly: input is not a Lie-Yamaguti algebra");
  return yau_twist(with_identity_alpha(a), beta);
}

Algebra twist_malcev(const Algebra& a, const LinearMap& beta) {
  require_binary(a, "twist_malcev");
  if (beta.dim() != a.dim) throw DimensionMismatch("twist_malcev: map dimension mismatch");
  Algebra plain = with_identity_alpha(a);
  plain.ternary.reset();
  require_pass(check_hom_malcev(plain), "twist_malcev: input is not a Malcev algebra");
  require_pass(is_endomorphism(plain, beta), "twist_malcev: beta is not an endomorphism of the product");

  Algebra out = plain;
  out.name = a.name + "-malcev-twisted";
  out.binary = map_binary(*plain.binary, beta);
  out.ternary = map_ternary(ternary_33(plain), map_compose(beta, beta));
  out.alpha = beta;
  return out;
}

Algebra lie_to_ly(const Algebra& a) {
  require_binary(a, "lie_to_ly");
  Algebra out = with_identity_alpha(a);
  out.ternary.reset();
  require_pass(check_hom_jacobi(out), "lie_to_ly: input is not a Lie algebra");
  out.name = a.name + "-ly";
  out.ternary = build_ternary(a.dim, [&](const Vector& x, const Vector& y, const Vector& z) {
    return eval_binary(out, eval_binary(out, x, y), z);
  });
  return out;
}

Algebra with_ternary_41(const Algebra& a) {
  Algebra out = a;
  out.name = a.name + "-eq41";
  out.ternary = ternary_41(a);
  return out;
}

CheckReport probe_homly_from_hommalcev(const Algebra& a, std::size_t cap) {
  require_binary(a, "probe");
  CheckOptions opts;
  opts.max_counterexamples = cap;
  Algebra binary_only = a;
  binary_only.ternary.reset();
  require_pass(check_hom_malcev(binary_only, opts), "probe: input is not Hom-Malcev");
  CheckReport r = check_hom_ly(with_ternary_41(binary_only), opts);
  r.suite_id = "probe";
  return r;
}

}  // namespace homly
