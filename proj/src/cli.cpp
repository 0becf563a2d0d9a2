#include "homly/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "homly/constructions.hpp"
#include "homly/error.hpp"
#include "homly/io.hpp"
#include "homly/morphisms.hpp"
#include "homly/suites.hpp"

namespace homly {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DocumentError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_sink(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DocumentError(path + ": cannot open file for writing");
  f << text;
}

Algebra load_algebra(const std::string& path, std::istream& in) {
  try {
    return parse_algebra(read_source(path, in));
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

std::vector<Rational> parse_scalar_list(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw MalformedScalar("empty scalar list");
  return out;
}

struct Options {
  std::string file;
  std::string output;
  std::string suite;
  std::string b6 = "strict";
  std::size_t max_ce = kDefaultCounterexampleCap;
  std::string format = "text";
  std::string construction;
  std::string morphism;
  std::string mode = "thm31";
  std::string candidates;
  bool permutations = false;
  bool is_signed = false;
  std::string scalars;
  bool commute = false;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  bool skew = false;
  bool ternary = false;
  bool random_alpha = false;
};

int report_exit(const CheckReport& r, const Options& o, std::ostream& out) {
  out << emit_report(r, o.format == "json" ? ReportFormat::json : ReportFormat::text);
  return r.passed ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Algebra a = load_algebra(o.file, in);
  CheckOptions opts;
  opts.max_counterexamples = o.max_ce;
  opts.b6 = o.b6 == "printed" ? B6Mode::printed : B6Mode::strict;
  return report_exit(run_suite(a, o.suite, opts), o, out);
}

int cmd_derive(const Options& o, std::istream& in, std::ostream& out) {
  const Algebra a = load_algebra(o.file, in);
  Algebra result;
  if (o.construction == "prop24") {
    result = prop24_triple(a);
  } else if (o.construction == "cor33") {
    result = twist_malcev(a, LinearMap::identity(a.dim));
  } else if (o.construction == "eq41") {
    result = with_ternary_41(a);
  } else if (o.construction == "lie-ly") {
    result = lie_to_ly(a);
  } else {  // j-alpha
    result = a;
    result.name = a.name + "-j-alpha";
    result.ternary = j_alpha(a);
  }
  write_sink(o.output, emit_algebra(result), out);
  return kExitOk;
}

int cmd_twist(const Options& o, std::istream& in, std::ostream& out) {
  const Algebra a = load_algebra(o.file, in);
  const LinearMap beta = parse_map(read_source(o.morphism, in));
  Algebra result;
  if (o.mode == "cor32")
    result = twist_ly(a, beta);
  else if (o.mode == "cor33")
    result = twist_malcev(a, beta);
  else
    result = yau_twist(a, beta);
  write_sink(o.output, emit_algebra(result), out);
  return kExitOk;
}

int cmd_endos(const Options& o, std::istream& in, std::ostream& out) {
  const Algebra a = load_algebra(o.file, in);
  CandidateSet cands;
  if (!o.candidates.empty())
    cands = parse_candidates(read_source(o.candidates, in));
  else if (o.permutations)
    cands = permutation_candidates(a.dim, o.is_signed);
  else
    cands = scalar_candidates(a.dim, parse_scalar_list(o.scalars));
  write_sink(o.output, emit_candidates(filter_endomorphisms(a, cands, o.commute)), out);
  return kExitOk;
}

int cmd_probe(const Options& o, std::istream& in, std::ostream& out) {
  const Algebra a = load_algebra(o.file, in);
  return report_exit(probe_homly_from_hommalcev(a, o.max_ce), o, out);
}

int cmd_random(const Options& o, std::ostream& out) {
  RandomAlgebraOptions opts;
  opts.skew_binary = o.skew;
  opts.with_ternary = o.ternary;
  opts.alpha = o.random_alpha ? AlphaKind::random : AlphaKind::identity;
  write_sink(o.output, emit_algebra(random_algebra(o.dim, o.seed, opts)), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of Lie-Yamaguti and Hom-Lie-Yamaguti algebras", "homly"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check an algebra against an identity suite");
  verify->add_option("algebra", o.file, "Algebra document ('-' for stdin)")->required();
  verify->add_option("--suite", o.suite, "Suite identifier")->required()->check(CLI::IsMember(suite_ids()));
  verify->add_option("--b6", o.b6, "Reading of the sixth Hom-LY axiom")->check(CLI::IsMember({"strict", "printed"}));
  verify->add_option("--max-counterexamples", o.max_ce, "Counterexamples listed per axiom");
  verify->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* derive = app.add_subcommand("derive", "Build a derived algebra");
  derive->add_option("algebra", o.file, "Algebra document ('-' for stdin)")->required();
  derive->add_option("--construction", o.construction, "Construction")
      ->required()
      ->check(CLI::IsMember({"prop24", "cor33", "eq41", "lie-ly", "j-alpha"}));
  derive->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* twist = app.add_subcommand("twist", "Twist an algebra along an endomorphism");
  twist->add_option("algebra", o.file, "Algebra document ('-' for stdin)")->required();
  twist->add_option("--morphism", o.morphism, "Map document")->required();
  twist->add_option("--mode", o.mode, "Twisting construction")->check(CLI::IsMember({"thm31", "cor32", "cor33"}));
  twist->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* endos = app.add_subcommand("endos", "Filter candidate maps down to endomorphisms");
  endos->add_option("algebra", o.file, "Algebra document ('-' for stdin)")->required();
  auto* cand_opt = endos->add_option("--candidates", o.candidates, "Candidate-set document");
  auto* perm_opt = endos->add_flag("--permutations", o.permutations, "All permutation matrices");
  endos->add_flag("--signed", o.is_signed, "Include sign changes (with --permutations)")->needs(perm_opt);
  auto* scal_opt = endos->add_option("--scalars", o.scalars, "Comma-separated scalars c for c*Id");
  cand_opt->excludes(perm_opt)->excludes(scal_opt);
  perm_opt->excludes(scal_opt);
  endos->add_flag("--commute", o.commute, "Also require commuting with alpha");
  endos->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* probe = app.add_subcommand("probe", "Hom-LY suite on a Hom-Malcev algebra with its derived ternary");
  probe->add_option("algebra", o.file, "Algebra document ('-' for stdin)")->required();
  probe->add_option("--max-counterexamples", o.max_ce, "Counterexamples listed per axiom");
  probe->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* random = app.add_subcommand("random", "Generate a seeded random algebra");
  random->add_option("--dim", o.dim, "Dimension")->required();
  random->add_option("--seed", o.seed, "Seed")->required();
  random->add_flag("--skew", o.skew, "Skew-symmetric binary table");
  random->add_flag("--ternary", o.ternary, "Include a ternary table");
  random->add_flag("--random-alpha", o.random_alpha, "Random twist map instead of the identity");
  random->add_option("-o,--output", o.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (endos->parsed() && o.candidates.empty() && !o.permutations && o.scalars.empty())
      throw CLI::ValidationError("endos: one of --candidates, --permutations, --scalars is required");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (derive->parsed()) return cmd_derive(o, in, out);
    if (twist->parsed()) return cmd_twist(o, in, out);
    if (endos->parsed()) return cmd_endos(o, in, out);
    if (probe->parsed()) return cmd_probe(o, in, out);
    return cmd_random(o, out);
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace homly
