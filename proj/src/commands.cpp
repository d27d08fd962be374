// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "expr.hpp"
#include "invariant.hpp"

namespace dpr {

using nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::string spec_path;
  std::string expr, lhs, rhs, gens, ideal, poly;
  std::string sided = "two";
  int deg = 6;
  int maxpow = 0;  // 0: default 2*deg
  int iters = 0;   // 0: default nvars
  bool emit_ring = false;
};

struct Rendered {
  int exit_code = 0;
  ordered_json json;
  std::string text;
};

RingSpec require_ring(const SpecDocument& doc, bool need_valid = true) {
  if (!doc.ring) {
    fail(Errc::bad_argument,
         "this Lie document does not compile to a ring (basis invalid or not adapted)");
  }
  if (need_valid && !doc.ring->is_valid()) {
    const auto& v = doc.ring->validation().violations.front();
    fail(Errc::invalid_spec, "derivation table fails validation: " + v.detail);
  }
  return *doc.ring;
}

std::vector<std::string> poly_strings(const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const Poly& p : polys) out.push_back(p.to_string());
  return out;
}

ordered_json violations_json(const ValidationReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : rep.violations) {
    ordered_json o;
    o["i"] = v.i + 1;
    if (v.k >= 0)
      o["k"] = v.k + 1;
    else
      o["k"] = nullptr;
    o["j"] = v.j + 1;
    o["detail"] = v.detail;
    arr.push_back(std::move(o));
  }
  return arr;
}

ordered_json certificate_json(const ZeroCertificate& c) {
  ordered_json o;
  o["generator"] = c.generator.to_string();
  o["justification"] = c.justification;
  return o;
}

ordered_json powint_core_json(const PowIntReport& rep) {
  ordered_json o;
  o["k_dims"] = rep.dims;
  o["status"] = to_string(rep.status);
  if (rep.stable_k)
    o["stable_k"] = *rep.stable_k;
  else
    o["stable_k"] = nullptr;
  o["candidates"] = poly_strings(rep.candidates);
  if (rep.certificate)
    o["certificate"] = certificate_json(*rep.certificate);
  else
    o["certificate"] = nullptr;
  return o;
}

std::string dims_line(const std::vector<int>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(dims[i]);
  }
  return s;
}

void render_powint_text(std::ostream& os, const PowIntReport& rep) {
  os << "k_dims: " << dims_line(rep.dims) << "\n";
  os << "status: " << to_string(rep.status) << "\n";
  if (rep.stable_k) os << "stable_k: " << *rep.stable_k << "\n";
  if (!rep.candidates.empty()) {
    os << "candidates:\n";
    for (const Poly& p : rep.candidates) os << "  " << p.to_string() << "\n";
  }
  if (rep.certificate) {
    os << "certificate: " << rep.certificate->generator.to_string() << "\n";
    os << "  " << rep.certificate->justification << "\n";
  }
}

int resolved_maxpow(const Options& opt) { return opt.maxpow > 0 ? opt.maxpow : 2 * opt.deg; }

int resolved_iters(const Options& opt, const RingSpec& spec) {
  return opt.iters > 0 ? opt.iters : spec.nvars();
}

// ---------------------------------------------------------------------------
// Command handlers

Rendered cmd_validate(const Options& opt) {
  SpecDocument doc = load_spec_file(opt.spec_path);
  if (doc.kind != SpecDocument::Kind::ring)
    fail(Errc::bad_argument, "validate expects a ring document; use the lie command instead");
  const ValidationReport& rep = doc.ring->validation();
  Rendered r;
  r.exit_code = rep.ok ? 0 : 1;
  r.json["command"] = "validate";
  r.json["params"] = ordered_json{{"spec", opt.spec_path}};
  r.json["ok"] = rep.ok;
  r.json["violations"] = violations_json(rep);
  std::ostringstream os;
  os << "validate: spec=" << opt.spec_path << "\n";
  if (rep.ok) {
    os << "ok\n";
  } else {
    for (const auto& v : rep.violations) {
      if (v.k >= 0)
        os << "violation (" << v.i + 1 << "," << v.k + 1 << "," << v.j + 1 << "): " << v.detail
           << "\n";
      else
        os << "violation (" << v.i + 1 << ",-," << v.j + 1 << "): " << v.detail << "\n";
    }
  }
  r.text = os.str();
  return r;
}

Rendered cmd_nf(const Options& opt) {
  RingSpec spec = require_ring(load_spec_file(opt.spec_path));
  Poly p = parse_expression(opt.expr, spec);
  Rendered r;
  r.json["command"] = "nf";
  r.json["params"] = ordered_json{{"spec", opt.spec_path}, {"expr", opt.expr}};
  r.json["result"] = p.to_string();
  r.text = p.to_string() + "\n";
  return r;
}

Rendered cmd_mul(const Options& opt) {
  RingSpec spec = require_ring(load_spec_file(opt.spec_path));
  Poly a = parse_expression(opt.lhs, spec);
  Poly b = parse_expression(opt.rhs, spec);
  Poly p = mul(a, b);
  Rendered r;
  r.json["command"] = "mul";
  r.json["params"] = ordered_json{{"spec", opt.spec_path}, {"lhs", opt.lhs}, {"rhs", opt.rhs}};
  r.json["result"] = p.to_string();
  r.text = p.to_string() + "\n";
  return r;
}

Rendered cmd_gb(const Options& opt) {
  RingSpec spec = require_ring(load_spec_file(opt.spec_path));
  std::vector<Poly> gens = parse_expression_list(opt.gens, spec);
  if (opt.sided != "left" && opt.sided != "two")
    fail(Errc::bad_argument, "--sided must be 'left' or 'two'");
  GBasis G = opt.sided == "left" ? left_gb(spec, gens) : twosided_gb(spec, gens);
  Rendered r;
  r.json["command"] = "gb";
  r.json["params"] =
      ordered_json{{"spec", opt.spec_path}, {"gens", opt.gens}, {"sided", opt.sided}};
  r.json["basis"] = poly_strings(G.elements);
  std::ostringstream os;
  os << "gb (" << (opt.sided == "left" ? "left" : "two-sided") << " reduced):\n";
  for (const Poly& g : G.elements) os << "  " << g.to_string() << "\n";
  r.text = os.str();
  return r;
}

Rendered cmd_powint(const Options& opt) {
  RingSpec spec = require_ring(load_spec_file(opt.spec_path));
  Ideal I(spec, parse_expression_list(opt.ideal, spec));
  int kmax = resolved_maxpow(opt);
  PowIntReport rep = powint(I, opt.deg, kmax);
  Rendered r;
  r.json["command"] = "powint";
  r.json["params"] = ordered_json{
      {"spec", opt.spec_path}, {"ideal", opt.ideal}, {"deg", opt.deg}, {"maxpow", kmax}};
  ordered_json core = powint_core_json(rep);
  for (auto& [k, v] : core.items()) r.json[k] = v;
  std::ostringstream os;
  os << "powint: spec=" << opt.spec_path << " ideal=(" << opt.ideal << ") deg=" << opt.deg
     << " maxpow=" << kmax << "\n";
  render_powint_text(os, rep);
  r.text = os.str();
  return r;
}

ordered_json rounds_json(const IterationResult& res) {
  ordered_json rounds = ordered_json::array();
  for (const auto& round : res.rounds) {
    ordered_json o;
    o["round"] = round.round;
    o["heuristic"] = round.heuristic;
    ordered_json core = powint_core_json(round.report);
    for (auto& [k, v] : core.items()) o[k] = v;
    rounds.push_back(std::move(o));
  }
  return rounds;
}

void render_rounds_text(std::ostream& os, const IterationResult& res) {
  for (const auto& round : res.rounds) {
    os << "round " << round.round << (round.heuristic ? " (heuristic seed)" : " (exact)") << ":\n";
    render_powint_text(os, round.report);
  }
  for (const auto& w : res.warnings) os << "warning: " << w << "\n";
  if (res.m_obs)
    os << "m_obs: " << *res.m_obs << "\n";
  else
    os << "m_obs: none\n";
}

Rendered cmd_iterate(const Options& opt) {
  RingSpec spec = require_ring(load_spec_file(opt.spec_path));
  Ideal I(spec, parse_expression_list(opt.ideal, spec));
  int kmax = resolved_maxpow(opt);
  int mmax = resolved_iters(opt, spec);
  IterationResult res = iterate_powint(I, opt.deg, kmax, mmax);
  Rendered r;
  r.json["command"] = "iterate";
  r.json["params"] = ordered_json{{"spec", opt.spec_path},
                                  {"ideal", opt.ideal},
                                  {"deg", opt.deg},
                                  {"maxpow", kmax},
                                  {"iters", mmax}};
  r.json["rounds"] = rounds_json(res);
  if (res.m_obs)
    r.json["m_obs"] = *res.m_obs;
  else
    r.json["m_obs"] = nullptr;
  r.json["warnings"] = res.warnings;
  std::ostringstream os;
  os << "iterate: spec=" << opt.spec_path << " ideal=(" << opt.ideal << ") deg=" << opt.deg
     << " maxpow=" << kmax << " iters=" << mmax << "\n";
  render_rounds_text(os, res);
  r.text = os.str();
  return r;
}

Rendered cmd_cert(const Options& opt) {
  RingSpec spec = require_ring(load_spec_file(opt.spec_path));
  Ideal I(spec, parse_expression_list(opt.ideal, spec));
  auto res = cert_zero_principal(I);
  Rendered r;
  r.json["command"] = "cert";
  r.json["params"] = ordered_json{{"spec", opt.spec_path}, {"ideal", opt.ideal}};
  std::ostringstream os;
  os << "cert: spec=" << opt.spec_path << " ideal=(" << opt.ideal << ")\n";
  if (std::holds_alternative<ZeroCertificate>(res)) {
    const auto& cert = std::get<ZeroCertificate>(res);
    r.json["status"] = "CERTIFIED";
    r.json["reason"] = nullptr;
    r.json["certificate"] = certificate_json(cert);
    os << "status: CERTIFIED\n";
    os << "generator: " << cert.generator.to_string() << "\n";
    os << "justification: " << cert.justification << "\n";
  } else {
    r.json["status"] = "FAILED";
    r.json["reason"] = to_string(std::get<CertFailure>(res));
    r.json["certificate"] = nullptr;
    os << "status: FAILED\n";
    os << "reason: " << to_string(std::get<CertFailure>(res)) << "\n";
  }
  r.text = os.str();
  return r;
}

Rendered cmd_invariant_factor(const Options& opt) {
  RingSpec spec = require_ring(load_spec_file(opt.spec_path));
  std::vector<UniDerivation> ds = restrict_derivations(spec);
  Poly p = parse_expression(opt.poly, spec);
  if (p.top_var() > 0)
    fail(Errc::bad_argument, "--poly must be univariate in the first variable");
  UniPoly f = to_unipoly(p);
  InvariantFactorReport rep = invariant_factorization(f, ds);
  Rendered r;
  r.exit_code = rep.complete ? 0 : 1;
  r.json["command"] = "invariant-factor";
  r.json["params"] = ordered_json{{"spec", opt.spec_path}, {"poly", opt.poly}};
  const std::string& var = spec.names()[0];
  r.json["input"] = rep.input.to_string(var);
  ordered_json sigma = ordered_json::array();
  for (const auto& g : rep.sigma_m) sigma.push_back(g.to_string(var));
  r.json["sigma_m"] = std::move(sigma);
  r.json["exponents"] = rep.exponents;
  r.json["complete"] = rep.complete;
  r.json["notes"] = rep.notes;
  std::ostringstream os;
  os << "invariant-factor: spec=" << opt.spec_path << " poly=" << opt.poly << "\n";
  os << "input: " << rep.input.to_string(var) << "\n";
  for (std::size_t t = 0; t < rep.sigma_m.size(); ++t)
    os << "maximal invariant: " << rep.sigma_m[t].to_string(var) << " exponent "
       << rep.exponents[t] << "\n";
  os << "complete: " << (rep.complete ? "yes" : "no") << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  r.text = os.str();
  return r;
}

Rendered cmd_lie(const Options& opt) {
  SpecDocument doc = load_spec_file(opt.spec_path);
  if (doc.kind != SpecDocument::Kind::lie)
    fail(Errc::bad_argument, "lie expects a Lie document with \"dim\" and \"brackets\"");
  const LieAlgebra& L = *doc.lie;
  Rendered r;
  r.exit_code = L.is_valid() ? 0 : 1;
  std::vector<int> derived = L.derived_series();
  std::vector<int> lower = L.lower_central_series();
  r.json["command"] = "lie";
  r.json["params"] = ordered_json{{"spec", opt.spec_path}};
  r.json["ok"] = L.is_valid();
  ordered_json viols = ordered_json::array();
  for (const auto& v : L.validation().violations) {
    viols.push_back(ordered_json{
        {"i", v.i + 1}, {"j", v.j + 1}, {"k", v.k + 1}, {"detail", v.detail}});
  }
  r.json["violations"] = std::move(viols);
  r.json["adapted_basis"] = L.is_adapted_flag();
  r.json["derived_dims"] = derived;
  r.json["solvable"] = L.is_solvable();
  r.json["lower_central_dims"] = lower;
  r.json["nilpotent"] = L.is_nilpotent();
  r.json["derived_nilpotent"] = L.derived_is_nilpotent();
  if (doc.ring)
    r.json["ring"] = ring_to_json(*doc.ring);
  else
    r.json["ring"] = nullptr;
  std::ostringstream os;
  if (opt.emit_ring) {
    // Bare ring document, for piping into the ring commands.
    if (!doc.ring) fail(Errc::bad_argument, "basis is invalid or not adapted; no ring to emit");
    r.json = ring_to_json(*doc.ring);
    r.text = r.json.dump(2) + "\n";
    return r;
  }
  os << "lie: spec=" << opt.spec_path << "\n";
  os << "ok: " << (L.is_valid() ? "yes" : "no") << "\n";
  for (const auto& v : L.validation().violations) os << "violation: " << v.detail << "\n";
  os << "adapted_basis: " << (L.is_adapted_flag() ? "yes" : "no") << "\n";
  os << "derived_dims: " << dims_line(derived) << "\n";
  os << "solvable: " << (L.is_solvable() ? "yes" : "no") << "\n";
  os << "lower_central_dims: " << dims_line(lower) << "\n";
  os << "nilpotent: " << (L.is_nilpotent() ? "yes" : "no") << "\n";
  os << "derived_nilpotent: " << (L.derived_is_nilpotent() ? "yes" : "no") << "\n";
  if (doc.ring) os << "ring: " << ring_to_json(*doc.ring).dump() << "\n";
  r.text = os.str();
  return r;
}

ordered_json verify_json(const VerifyReport& rep, const std::string& spec_path) {
  ordered_json j;
  j["command"] = "verify";
  j["params"] = ordered_json{{"spec", spec_path},
                             {"ideal", rep.ideal_gens},
                             {"deg", rep.deg},
                             {"maxpow", rep.maxpow},
                             {"iters", rep.iters}};
  ordered_json hyp;
  hyp["table_validated"] = rep.table_validated;
  hyp["filtered"] = rep.filtered;
  hyp["linear_leading_shape"] = rep.linear_leading;
  hyp["scalars_stable_under_derivations"] = rep.scalars_stable;
  hyp["scalar_field_simple"] = rep.scalar_field_simple;
  if (rep.lie) {
    hyp["lie"] = ordered_json{{"solvable", rep.lie->solvable},
                              {"completely_solvable", rep.lie->completely_solvable},
                              {"nilpotent", rep.lie->nilpotent},
                              {"derived_nilpotent", rep.lie->derived_nilpotent}};
  } else {
    hyp["lie"] = nullptr;
  }
  j["hypotheses"] = std::move(hyp);
  ordered_json ideal;
  ideal["proper"] = rep.ideal_proper;
  if (rep.qdim.finite)
    ideal["quotient_dim"] = rep.qdim.dim;
  else
    ideal["quotient_dim"] = "infinite";
  j["ideal"] = std::move(ideal);
  j["rounds"] = rounds_json(rep.iteration);
  if (rep.m_obs)
    j["m_obs"] = *rep.m_obs;
  else
    j["m_obs"] = nullptr;
  if (rep.bound)
    j["bound"] = *rep.bound;
  else
    j["bound"] = nullptr;
  ordered_json sources;
  sources["variable_count"] = rep.bound_nvars;
  if (rep.bound_codim)
    sources["finite_codimension"] = *rep.bound_codim;
  else
    sources["finite_codimension"] = nullptr;
  j["bound_sources"] = std::move(sources);
  j["warnings"] = rep.iteration.warnings;
  j["verdict"] = rep.verdict;
  return j;
}

std::string verify_text(const VerifyReport& rep, const std::string& spec_path) {
  std::ostringstream os;
  os << "verify: spec=" << spec_path << " ideal=(";
  for (std::size_t i = 0; i < rep.ideal_gens.size(); ++i)
    os << (i ? ", " : "") << rep.ideal_gens[i];
  os << ") deg=" << rep.deg << " maxpow=" << rep.maxpow << " iters=" << rep.iters << "\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "hypotheses: table_validated=" << yn(rep.table_validated)
     << " filtered=" << yn(rep.filtered) << " linear_leading_shape=" << yn(rep.linear_leading)
     << " scalars_stable=" << yn(rep.scalars_stable)
     << " scalar_field_simple=" << yn(rep.scalar_field_simple) << "\n";
  if (rep.lie) {
    os << "lie: solvable=" << yn(rep.lie->solvable)
       << " completely_solvable=" << yn(rep.lie->completely_solvable)
       << " nilpotent=" << yn(rep.lie->nilpotent)
       << " derived_nilpotent=" << yn(rep.lie->derived_nilpotent) << "\n";
  }
  os << "ideal: proper=" << yn(rep.ideal_proper) << " quotient_dim=";
  if (rep.qdim.finite)
    os << rep.qdim.dim;
  else
    os << "infinite";
  os << "\n";
  render_rounds_text(os, rep.iteration);
  os << "bound: ";
  if (rep.bound)
    os << *rep.bound;
  else
    os << "none";
  os << " (variable_count=" << rep.bound_nvars << ", finite_codimension=";
  if (rep.bound_codim)
    os << *rep.bound_codim;
  else
    os << "n/a";
  os << ")\n";
  os << "verdict: " << rep.verdict << "\n";
  return os.str();
}

Rendered cmd_verify(const Options& opt) {
  SpecDocument doc = load_spec_file(opt.spec_path);
  RingSpec spec = require_ring(doc);
  if (!spec.filtered())
    fail(Errc::unfiltered_ring, "verify needs a filtered table (all entries of degree <= 1)");
  std::vector<Poly> gens = parse_expression_list(opt.ideal, spec);
  int kmax = resolved_maxpow(opt);
  int mmax = resolved_iters(opt, spec);
  VerifyReport rep = verify_theorem(doc, gens, opt.deg, kmax, mmax);
  Rendered r;
  r.exit_code = rep.ideal_proper ? 0 : 1;
  r.json = verify_json(rep, opt.spec_path);
  r.text = verify_text(rep, opt.spec_path);
  return r;
}

}  // namespace

VerifyReport verify_theorem(const SpecDocument& doc, const std::vector<Poly>& gens, int d,
                            int kmax, int mmax) {
  VerifyReport rep;
  RingSpec spec = require_ring(doc);
  rep.deg = d;
  rep.maxpow = kmax;
  rep.iters = mmax;
  for (const Poly& g : gens) rep.ideal_gens.push_back(g.to_string());
  rep.table_validated = spec.is_valid();
  rep.filtered = spec.filtered();
  rep.linear_leading = spec.linear_leading_shape();
  std::optional<LieAlgebra> L = doc.lie;
  if (!L) L = lie_from_ring(spec);
  if (L && L->is_valid()) {
    LieFlags flags;
    flags.solvable = L->is_solvable();
    flags.completely_solvable = L->is_adapted_flag();
    flags.nilpotent = L->is_nilpotent();
    flags.derived_nilpotent = L->derived_is_nilpotent();
    rep.lie = flags;
  }
  Ideal I(spec, gens);
  rep.ideal_proper = is_proper(I);
  rep.qdim = quotient_dim(I.gb());
  rep.iteration = iterate_powint(I, d, kmax, mmax);
  rep.m_obs = rep.iteration.m_obs;
  rep.bound_nvars = spec.nvars();
  if (rep.lie && rep.lie->derived_nilpotent && rep.qdim.finite) rep.bound_codim = 2;
  if (rep.table_validated && rep.filtered && rep.linear_leading) {
    int b = rep.bound_nvars;
    if (rep.bound_codim) b = std::min(b, *rep.bound_codim);
    rep.bound = b;
  } else if (rep.bound_codim) {
    rep.bound = rep.bound_codim;
  }
  if (rep.ideal_proper && rep.m_obs && rep.bound && *rep.m_obs <= *rep.bound) {
    rep.verdict = "CONSISTENT";
  } else {
    rep.verdict = "INCONCLUSIVE";
  }
  return rep;
}

CommandResult run_command(const std::vector<std::string>& argv) {
  CommandResult result;
  Options opt;
  CLI::App app{"exact arithmetic, Groebner bases, and iterated power intersections in "
               "iterated differential polynomial rings"};
  app.name("dpring");
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec_path, "spec document (JSON)")->required();
  };
  CLI::App* validate = app.add_subcommand("validate", "check a derivation table");
  add_spec(validate);
  CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
  add_spec(nf);
  nf->add_option("--expr", opt.expr, "expression")->required();
  CLI::App* mulc = app.add_subcommand("mul", "product of two expressions");
  add_spec(mulc);
  mulc->add_option("--lhs", opt.lhs, "left factor")->required();
  mulc->add_option("--rhs", opt.rhs, "right factor")->required();
  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_spec(gb);
  gb->add_option("--gens", opt.gens, "comma-separated generators")->required();
  gb->add_option("--sided", opt.sided, "left or two")->capture_default_str();
  CLI::App* powintc = app.add_subcommand("powint", "truncated power intersection");
  add_spec(powintc);
  powintc->add_option("--ideal", opt.ideal, "comma-separated generators")->required();
  powintc->add_option("--deg", opt.deg, "truncation degree")->capture_default_str();
  powintc->add_option("--maxpow", opt.maxpow, "largest power (default 2*deg)");
  CLI::App* iterate = app.add_subcommand("iterate", "iterated power intersections");
  add_spec(iterate);
  iterate->add_option("--ideal", opt.ideal, "comma-separated generators")->required();
  iterate->add_option("--deg", opt.deg, "truncation degree")->capture_default_str();
  iterate->add_option("--maxpow", opt.maxpow, "largest power (default 2*deg)");
  iterate->add_option("--iters", opt.iters, "iteration rounds (default #vars)");
  CLI::App* cert = app.add_subcommand("cert", "principal zero-certificate");
  add_spec(cert);
  cert->add_option("--ideal", opt.ideal, "comma-separated generators")->required();
  CLI::App* invf = app.add_subcommand("invariant-factor",
                                      "factor into maximal invariant ideals of the univariate "
                                      "subring");
  add_spec(invf);
  invf->add_option("--poly", opt.poly, "monic polynomial in the first variable")->required();
  CLI::App* lie = app.add_subcommand("lie", "Lie algebra checks and enveloping ring");
  add_spec(lie);
  lie->add_flag("--emit-ring", opt.emit_ring, "print only the compiled ring document");
  CLI::App* verify = app.add_subcommand("verify", "vanishing-theorem harness");
  add_spec(verify);
  verify->add_option("--ideal", opt.ideal, "comma-separated generators")->required();
  verify->add_option("--deg", opt.deg, "truncation degree")->capture_default_str();
  verify->add_option("--maxpow", opt.maxpow, "largest power (default 2*deg)");
  verify->add_option("--iters", opt.iters, "iteration rounds (default #vars)");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  }

  try {
    Rendered r;
    if (validate->parsed())
      r = cmd_validate(opt);
    else if (nf->parsed())
      r = cmd_nf(opt);
    else if (mulc->parsed())
      r = cmd_mul(opt);
    else if (gb->parsed())
      r = cmd_gb(opt);
    else if (powintc->parsed())
      r = cmd_powint(opt);
    else if (iterate->parsed())
      r = cmd_iterate(opt);
    else if (cert->parsed())
      r = cmd_cert(opt);
    else if (invf->parsed())
      r = cmd_invariant_factor(opt);
    else if (lie->parsed())
      r = cmd_lie(opt);
    else if (verify->parsed())
      r = cmd_verify(opt);
    else {
      result.out = app.help();
      return result;
    }
    result.exit_code = r.exit_code;
    result.out = opt.format == "json" ? r.json.dump(2) + "\n" : r.text;
    return result;
  } catch (const Error& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = e.is_usage() ? 2 : 1;
    return result;
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = 1;
    return result;
  }
}

}  // namespace dpr
