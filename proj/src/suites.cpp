#include "homly/suites.hpp"

#include <array>
#include <functional>

#include "homly/error.hpp"

namespace homly {

namespace {

using Tuple = std::vector<std::size_t>;

/// Visits every index tuple of the given arity in lexicographic order.
void for_each_tuple(std::size_t n, std::size_t arity, const std::function<void(const Tuple&)>& fn) {
  if (n == 0) return;
  Tuple t(arity, 0);
  while (true) {
    fn(t);
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (arity == 0) return;
  }
}

/// Evaluation context: the algebra's operations plus cached powers of the
/// twist on basis vectors.
class Ops {
 public:
  Ops(const Algebra& a, const LinearMap& twist) : a_(a), n_(a.dim) {
    LinearMap p = LinearMap::identity(n_);
    for (auto& level : pow_) {
      powers_.push_back(p);
      for (std::size_t i = 0; i < n_; ++i) level.push_back(p.column(i));
      p = map_compose(twist, p);
    }
  }

  std::size_t n() const { return n_; }
  /// twist^k (e_i), k <= 4
  const Vector& e(std::size_t i, unsigned k = 0) const { return pow_[k][i]; }
  Vector tw(const Vector& v, unsigned k = 1) const { return map_apply(powers_[k], v); }

  Vector mul(const Vector& x, const Vector& y) const { return eval_binary(a_, x, y); }
  Vector tri(const Vector& x, const Vector& y, const Vector& z) const {
    return eval_ternary(a_, x, y, z);
  }
  /// Commutator of the binary product.
  Vector com(const Vector& x, const Vector& y) const { return mul(x, y) - mul(y, x); }
  /// Hom-associator (xy) a(z) - a(x) (yz).
  Vector as(const Vector& x, const Vector& y, const Vector& z) const {
    return mul(mul(x, y), tw(z)) - mul(tw(x), mul(y, z));
  }
  /// J(x,y,z) = sigma [[x,y], a(z)] with the binary product as bracket.
  Vector jac(const Vector& x, const Vector& y, const Vector& z) const {
    Vector r = mul(mul(x, y), tw(z));
    r += mul(mul(y, z), tw(x));
    r += mul(mul(z, x), tw(y));
    return r;
  }
  /// {x,y,z} = -J(x,y,z) + 2 [[x,y], a(z)]
  Vector t41(const Vector& x, const Vector& y, const Vector& z) const {
    Vector r = -jac(x, y, z);
    r.add_scaled(Rational(2), mul(mul(x, y), tw(z)));
    return r;
  }

  /// Table of f over basis triples, indexed (i*n + j)*n + k.
  std::vector<Vector> cache3(const std::function<Vector(std::size_t, std::size_t, std::size_t)>& f) const {
    std::vector<Vector> out;
    out.reserve(n_ * n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) out.push_back(f(i, j, k));
    return out;
  }
  std::size_t idx3(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

 private:
  const Algebra& a_;
  std::size_t n_;
  std::array<std::vector<Vector>, 5> pow_;
  std::vector<LinearMap> powers_;
};

AxiomVerdict check_tuples(std::string id, std::size_t n, std::size_t arity, const CheckOptions& opts,
                          const std::function<Vector(const Tuple&)>& residual) {
  VerdictBuilder b(std::move(id), opts.max_counterexamples);
  for_each_tuple(n, arity, [&](const Tuple& t) { b.record(t, residual(t)); });
  return std::move(b).finish();
}

void require_binary(const Algebra& a, std::string_view suite) {
  if (!a.binary) throw SuiteInapplicable(std::string(suite) + ": algebra has no binary table");
}
void require_ternary(const Algebra& a, std::string_view suite) {
  if (!a.ternary) throw SuiteInapplicable(std::string(suite) + ": algebra has no ternary table");
}

CheckReport make_report(std::string suite_id) {
  CheckReport r;
  r.suite_id = std::move(suite_id);
  return r;
}

AxiomVerdict binary_skew(std::string id, const Ops& o, const CheckOptions& opts) {
  return check_tuples(std::move(id), o.n(), 2, opts, [&](const Tuple& t) {
    return o.mul(o.e(t[0]), o.e(t[1])) + o.mul(o.e(t[1]), o.e(t[0]));
  });
}

AxiomVerdict ternary_skew(std::string id, const Ops& o, const CheckOptions& opts) {
  return check_tuples(std::move(id), o.n(), 3, opts, [&](const Tuple& t) {
    const auto &x = o.e(t[0]), &y = o.e(t[1]), &z = o.e(t[2]);
    return o.tri(x, y, z) + o.tri(y, x, z);
  });
}

AxiomVerdict ternary_cyclic(std::string id, const Ops& o, const CheckOptions& opts) {
  return check_tuples(std::move(id), o.n(), 3, opts, [&](const Tuple& t) {
    const auto &u = o.e(t[0]), &v = o.e(t[1]), &w = o.e(t[2]);
    return o.tri(u, v, w) + o.tri(v, w, u) + o.tri(w, u, v);
  });
}

/// [a(x), a(y), [u,v,w]] - [[x,y,u], a(v), a(w)] - [a(u), [x,y,v], a(w)]
///   - [a(u), a(v), [x,y,w]]
AxiomVerdict nambu(std::string id, const Ops& o, const CheckOptions& opts) {
  const auto plain = o.cache3([&](auto i, auto j, auto k) { return o.tri(o.e(i), o.e(j), o.e(k)); });
  return check_tuples(std::move(id), o.n(), 5, opts, [&](const Tuple& t) {
    const auto x = t[0], y = t[1], u = t[2], v = t[3], w = t[4];
    Vector r = o.tri(o.e(x, 1), o.e(y, 1), plain[o.idx3(u, v, w)]);
    r -= o.tri(plain[o.idx3(x, y, u)], o.e(v, 1), o.e(w, 1));
    r -= o.tri(o.e(u, 1), plain[o.idx3(x, y, v)], o.e(w, 1));
    r -= o.tri(o.e(u, 1), o.e(v, 1), plain[o.idx3(x, y, w)]);
    return r;
  });
}

void add_multiplicativity(CheckReport& r, const Algebra& a, const CheckOptions& opts, bool as_axioms,
                          std::string_view bin_id, std::string_view ter_id) {
  CheckReport m = is_multiplicative(a, opts.max_counterexamples);
  for (auto& v : m.axioms) {
    v.axiom_id = v.axiom_id == "mult-binary" ? std::string(bin_id) : std::string(ter_id);
    if (as_axioms)
      r.add(std::move(v));
    else
      r.informational.push_back(std::move(v));
  }
}

}  // namespace

CheckReport check_ly(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_binary(a, "ly");
  require_ternary(a, "ly");
  const Ops o(a, LinearMap::identity(a.dim));
  const std::size_t n = a.dim;
  CheckReport r = make_report("ly");

  r.add(binary_skew("A1", o, opts));
  r.add(ternary_skew("A2", o, opts));
  r.add(check_tuples("A3", n, 3, opts, [&](const Tuple& t) {
    const auto &x = o.e(t[0]), &y = o.e(t[1]), &z = o.e(t[2]);
    Vector s = o.mul(o.mul(x, y), z) + o.tri(x, y, z);
    s += o.mul(o.mul(y, z), x) + o.tri(y, z, x);
    s += o.mul(o.mul(z, x), y) + o.tri(z, x, y);
    return s;
  }));
  r.add(check_tuples("A4", n, 4, opts, [&](const Tuple& t) {
    const auto &x = o.e(t[0]), &y = o.e(t[1]), &z = o.e(t[2]), &u = o.e(t[3]);
    return o.tri(o.mul(x, y), z, u) + o.tri(o.mul(y, z), x, u) + o.tri(o.mul(z, x), y, u);
  }));
  r.add(check_tuples("A5", n, 4, opts, [&](const Tuple& t) {
    const auto &x = o.e(t[0]), &y = o.e(t[1]), &u = o.e(t[2]), &v = o.e(t[3]);
    return o.tri(x, y, o.mul(u, v)) - o.mul(o.tri(x, y, u), v) - o.mul(u, o.tri(x, y, v));
  }));
  const auto plain = o.cache3([&](auto i, auto j, auto k) { return o.tri(o.e(i), o.e(j), o.e(k)); });
  r.add(check_tuples("A6", n, 5, opts, [&](const Tuple& t) {
    const auto x = t[0], y = t[1], u = t[2], v = t[3], w = t[4];
    Vector s = o.tri(o.e(x), o.e(y), plain[o.idx3(u, v, w)]);
    s -= o.tri(plain[o.idx3(x, y, u)], o.e(v), o.e(w));
    s -= o.tri(o.e(u), plain[o.idx3(x, y, v)], o.e(w));
    s -= o.tri(o.e(u), o.e(v), plain[o.idx3(x, y, w)]);
    return s;
  }));
  return r;
}

CheckReport check_hom_ly(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  const char* id = opts.b6 == B6Mode::strict ? "hom-ly" : "hom-ly-printed-b6";
  require_binary(a, id);
  require_ternary(a, id);
  const Ops o(a, a.alpha);
  const std::size_t n = a.dim;
  CheckReport r = make_report(id);

  add_multiplicativity(r, a, opts, true, "B1", "B2");
  r.add(binary_skew("B3", o, opts));
  r.add(ternary_skew("B4", o, opts));
  r.add(check_tuples("B5", n, 3, opts, [&](const Tuple& t) {
    const auto x = t[0], y = t[1], z = t[2];
    Vector s = o.mul(o.mul(o.e(x), o.e(y)), o.e(z, 1)) + o.tri(o.e(x), o.e(y), o.e(z));
    s += o.mul(o.mul(o.e(y), o.e(z)), o.e(x, 1)) + o.tri(o.e(y), o.e(z), o.e(x));
    s += o.mul(o.mul(o.e(z), o.e(x)), o.e(y, 1)) + o.tri(o.e(z), o.e(x), o.e(y));
    return s;
  }));
  if (opts.b6 == B6Mode::strict) {
    r.add(check_tuples("B6", n, 4, opts, [&](const Tuple& t) {
      const auto x = t[0], y = t[1], z = t[2], u = t[3];
      Vector s = o.tri(o.mul(o.e(x), o.e(y)), o.e(z, 1), o.e(u, 1));
      s += o.tri(o.mul(o.e(y), o.e(z)), o.e(x, 1), o.e(u, 1));
      s += o.tri(o.mul(o.e(z), o.e(x)), o.e(y, 1), o.e(u, 1));
      return s;
    }));
  } else {
    r.add(check_tuples("B6", n, 4, opts, [&](const Tuple& t) {
      const std::array<std::size_t, 3> xyz{t[0], t[1], t[2]};
      const auto u = t[3];
      Vector s(n);
      for (std::size_t c = 0; c < 3; ++c) {
        const auto x = xyz[c], y = xyz[(c + 1) % 3], z = xyz[(c + 2) % 3];
        s += o.tri(o.mul(o.e(x), o.e(y)), o.e(z, 1), o.e(u, 1));
        s += o.tri(o.mul(o.e(z), o.e(y)), o.e(x, 1), o.e(u, 1));
      }
      return s;
    }));
  }
  r.add(check_tuples("B7", n, 4, opts, [&](const Tuple& t) {
    const auto x = t[0], y = t[1], u = t[2], v = t[3];
    Vector s = o.tri(o.e(x, 1), o.e(y, 1), o.mul(o.e(u), o.e(v)));
    s -= o.mul(o.tri(o.e(x), o.e(y), o.e(u)), o.e(v, 2));
    s -= o.mul(o.e(u, 2), o.tri(o.e(x), o.e(y), o.e(v)));
    return s;
  }));

  // {a2 x, a2 y, {a2 u, a2 v, w}} = {{x,y,a2 u}, a4 v, a2 w} + {a4 u, {x,y,a2 v}, a2 w}
  //                                + {a4 u, a4 v, {x,y,w}}
  const auto inner_l = o.cache3([&](auto u, auto v, auto w) { return o.tri(o.e(u, 2), o.e(v, 2), o.e(w)); });
  const auto inner_r = o.cache3([&](auto x, auto y, auto u) { return o.tri(o.e(x), o.e(y), o.e(u, 2)); });
  const auto plain = o.cache3([&](auto x, auto y, auto w) { return o.tri(o.e(x), o.e(y), o.e(w)); });
  r.add(check_tuples("B8", n, 5, opts, [&](const Tuple& t) {
    const auto x = t[0], y = t[1], u = t[2], v = t[3], w = t[4];
    Vector s = o.tri(o.e(x, 2), o.e(y, 2), inner_l[o.idx3(u, v, w)]);
    s -= o.tri(inner_r[o.idx3(x, y, u)], o.e(v, 4), o.e(w, 2));
    s -= o.tri(o.e(u, 4), inner_r[o.idx3(x, y, v)], o.e(w, 2));
    s -= o.tri(o.e(u, 4), o.e(v, 4), plain[o.idx3(x, y, w)]);
    return s;
  }));
  return r;
}

CheckReport check_hom_nambu(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_ternary(a, "hom-nambu");
  const Ops o(a, a.alpha);
  CheckReport r = make_report("hom-nambu");
  r.add(nambu("nambu", o, opts));
  return r;
}

CheckReport check_hom_triple(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_ternary(a, "hom-triple");
  const Ops o(a, a.alpha);
  CheckReport r = make_report("hom-triple");
  r.add(ternary_skew("skew", o, opts));
  r.add(ternary_cyclic("cyclic", o, opts));
  Algebra ternary_only = a;
  ternary_only.binary.reset();
  add_multiplicativity(r, ternary_only, opts, false, "mult-binary", "mult-ternary");
  return r;
}

CheckReport check_hom_lie_triple(const Algebra& a, const CheckOptions& opts) {
  CheckReport r = check_hom_triple(a, opts);
  r.suite_id = "hom-lts";
  const Ops o(a, a.alpha);
  r.add(nambu("nambu", o, opts));
  return r;
}

CheckReport check_hom_akivis(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_binary(a, "hom-akivis");
  const Ops o(a, a.alpha);
  CheckReport r = make_report("hom-akivis");
  r.add(check_tuples("akivis", a.dim, 3, opts, [&](const Tuple& t) {
    const std::array<std::size_t, 3> xyz{t[0], t[1], t[2]};
    Vector s(a.dim);
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& x = o.e(xyz[c]);
      const auto& y = o.e(xyz[(c + 1) % 3]);
      const auto& z = o.e(xyz[(c + 2) % 3]);
      s += o.com(o.com(x, y), o.tw(z));
      s -= o.as(x, y, z);
      s += o.as(y, x, z);
    }
    return s;
  }));
  return r;
}

CheckReport check_hom_jacobi(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_binary(a, "hom-lie");
  const Ops o(a, a.alpha);
  CheckReport r = make_report("hom-lie");
  r.add(binary_skew("skew", o, opts));
  r.add(check_tuples("jacobi", a.dim, 3, opts, [&](const Tuple& t) {
    return o.jac(o.e(t[0]), o.e(t[1]), o.e(t[2]));
  }));
  return r;
}

CheckReport check_hom_malcev(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_binary(a, "hom-malcev");
  const Ops o(a, a.alpha);
  CheckReport r = make_report("hom-malcev");
  r.add(binary_skew("skew", o, opts));

  const auto jb = o.cache3([&](auto i, auto j, auto k) { return o.jac(o.e(i), o.e(j), o.e(k)); });
  // Q(x; y, z) = J(a x, a y, [x, z]) - [J(x, y, z), a^2 x]
  // F(x, x'; y, z) = Q(x + x') - Q(x) - Q(x')
  VerdictBuilder b("malcev", opts.max_counterexamples);
  const std::size_t n = a.dim;
  for_each_tuple(n, 4, [&](const Tuple& t) {
    const auto x = t[0], xp = t[1], y = t[2], z = t[3];
    if (x > xp) return;
    Vector s = o.jac(o.e(x, 1), o.e(y, 1), o.mul(o.e(xp), o.e(z)));
    s -= o.mul(jb[o.idx3(x, y, z)], o.e(xp, 2));
    if (x != xp) {
      s += o.jac(o.e(xp, 1), o.e(y, 1), o.mul(o.e(x), o.e(z)));
      s -= o.mul(jb[o.idx3(xp, y, z)], o.e(x, 2));
    }
    b.record(t, std::move(s));
  });
  r.add(std::move(b).finish());
  return r;
}

CheckReport check_eq44(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_binary(a, "eq44");
  const Ops o(a, a.alpha);
  CheckReport r = make_report("eq44");
  r.add(binary_skew("skew", o, opts));
  const auto jb = o.cache3([&](auto i, auto j, auto k) { return o.jac(o.e(i), o.e(j), o.e(k)); });
  r.add(check_tuples("eq44", a.dim, 4, opts, [&](const Tuple& t) {
    const auto x = t[0], y = t[1], u = t[2], v = t[3];
    Vector s = o.jac(o.e(x, 1), o.e(y, 1), o.mul(o.e(u), o.e(v)));
    s -= o.mul(jb[o.idx3(x, y, u)], o.e(v, 2));
    s -= o.mul(o.e(u, 2), jb[o.idx3(x, y, v)]);
    s.add_scaled(Rational(2), o.jac(o.e(u, 1), o.e(v, 1), o.mul(o.e(x), o.e(y))));
    return s;
  }));
  return r;
}

CheckReport check_eq45(const Algebra& a, const CheckOptions& opts) {
  a.validate();
  require_binary(a, "eq45");
  const Ops o(a, a.alpha);
  CheckReport r = make_report("eq45");
  r.add(binary_skew("skew", o, opts));
  const auto tb = o.cache3([&](auto i, auto j, auto k) { return o.t41(o.e(i), o.e(j), o.e(k)); });
  r.add(check_tuples("eq45", a.dim, 4, opts, [&](const Tuple& t) {
    const auto x = t[0], y = t[1], u = t[2], v = t[3];
    Vector s = o.t41(o.e(x, 1), o.e(y, 1), o.mul(o.e(u), o.e(v)));
    s -= o.mul(tb[o.idx3(x, y, u)], o.e(v, 2));
    s -= o.mul(o.e(u, 2), tb[o.idx3(x, y, v)]);
    return s;
  }));
  return r;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "ly",         "hom-ly", "hom-ly-printed-b6", "hom-nambu", "hom-triple", "hom-lts",         "hom-akivis",
      "hom-lie",    "hom-malcev", "eq44",           "eq45",      "multiplicativity", "all"};
  return ids;
}

CheckReport run_suite(const Algebra& a, std::string_view suite_id, const CheckOptions& opts) {
  if (suite_id == "ly") return check_ly(a, opts);
  if (suite_id == "hom-ly") return check_hom_ly(a, opts);
  if (suite_id == "hom-ly-printed-b6") {
    CheckOptions printed = opts;
    printed.b6 = B6Mode::printed;
    return check_hom_ly(a, printed);
  }
  if (suite_id == "hom-nambu") return check_hom_nambu(a, opts);
  if (suite_id == "hom-triple") return check_hom_triple(a, opts);
  if (suite_id == "hom-lts") return check_hom_lie_triple(a, opts);
  if (suite_id == "hom-akivis") return check_hom_akivis(a, opts);
  if (suite_id == "hom-lie") return check_hom_jacobi(a, opts);
  if (suite_id == "hom-malcev") return check_hom_malcev(a, opts);
  if (suite_id == "eq44") return check_eq44(a, opts);
  if (suite_id == "eq45") return check_eq45(a, opts);
  if (suite_id == "multiplicativity") return is_multiplicative(a, opts.max_counterexamples);
  if (suite_id != "all") throw UnknownSuite("unknown suite '" + std::string(suite_id) + "'");

  CheckReport all = make_report("all");
  std::vector<std::string> applicable = {"multiplicativity"};
  if (a.binary)
    for (const char* s : {"hom-akivis", "hom-lie", "hom-malcev", "eq44", "eq45"}) applicable.emplace_back(s);
  if (a.ternary)
    for (const char* s : {"hom-nambu", "hom-triple", "hom-lts"}) applicable.emplace_back(s);
  if (a.binary && a.ternary) {
    applicable.emplace_back("ly");
    applicable.emplace_back("hom-ly");
  }
  for (const auto& s : applicable) {
    CheckReport sub = run_suite(a, s, opts);
    for (auto& v : sub.axioms) {
      v.axiom_id = sub.suite_id + "/" + v.axiom_id;
      all.add(std::move(v));
    }
    for (auto& v : sub.informational) {
      v.axiom_id = sub.suite_id + "/" + v.axiom_id;
      all.informational.push_back(std::move(v));
    }
  }
  return all;
}

}  // namespace homly
