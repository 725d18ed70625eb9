/* Copyright 2026 The Witt Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "expr.hpp"
#include "witt/delta.hpp"
#include "witt/descent.hpp"
#include "witt/multi.hpp"
#include "witt/parse.hpp"
#include "witt/presentations.hpp"
#include "witt/rings.hpp"
#include "witt/selftest.hpp"
#include "witt/structural.hpp"

namespace witt::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::InvalidRing:
    case ErrorCode::NotPrimeElement:
    case ErrorCode::ContextMismatch:
    case ErrorCode::NotDivisorClosed:
    case ErrorCode::NotRectangular:
    case ErrorCode::UnsupportedPresentation:
      return 3;
    case ErrorCode::DivisionInexact:
    case ErrorCode::CongruenceViolation:
    case ErrorCode::LengthZero:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NotAUnit:
    case ErrorCode::TorsionNotSupported:
    case ErrorCode::LiftViolation:
    case ErrorCode::NotSurjective:
    case ErrorCode::Unsupported:
      return 4;
    default:
      return 1;
  }
}

namespace {

struct ContextFlags {
  std::string base = "Z";
  std::string pi = "2";
  std::size_t len = 1;
  std::string alg;
  std::string t_image;
};

struct Common {
  std::string format = "text";
};

void add_context_flags(CLI::App* app, ContextFlags& f, bool with_alg = true) {
  app->add_option("--base", f.base, "base ring: Z or Fp[t]:p")->capture_default_str();
  app->add_option("--pi", f.pi, "prime element of the base")->capture_default_str();
  app->add_option("--len", f.len, "normalized length n (n + 1 components)")->capture_default_str();
  if (with_alg) {
    app->add_option("--alg", f.alg, "coefficient algebra, e.g. Z/4, F2[t]/(t^2), Z[x] (default: the base)");
    app->add_option("--t-image", f.t_image, "image of t in the algebra (F_p[t] bases)");
  }
}

void add_format_flag(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

RingPtr parse_base(const std::string& s) {
  RingPtr r = parse_ring(s);
  if (r->kind() != RingKind::Integers && r->kind() != RingKind::UnivariatePoly) {
    fail(ErrorCode::InvalidRing, "the base ring must be Z or Fp[t]:p, got " + r->name());
  }
  return r;
}

struct Built {
  WittContext ctx;
  AlgebraPtr alg;
};

Built build(const ContextFlags& f) {
  RingPtr base = parse_base(f.base);
  WittContext ctx = WittContext::make(base, parse_element(base, f.pi).value(), f.len);
  AlgebraPtr alg;
  if (f.alg.empty()) {
    alg = AlgebraStructure::identity(base);
  } else {
    RingPtr target = parse_ring(f.alg);
    std::optional<Value> t;
    if (!f.t_image.empty()) t = parse_element(target, f.t_image).value();
    alg = AlgebraStructure::make(base, target, t);
  }
  return {ctx, alg};
}

EvalPath parse_path(const std::string& s) {
  if (s == "auto") return EvalPath::Auto;
  if (s == "structural") return EvalPath::Structural;
  if (s == "ghost") return EvalPath::Ghost;
  if (s == "cover") return EvalPath::Cover;
  fail(ErrorCode::ParseError, "unknown evaluation path '" + s + "'");
}

std::string convention_note(std::size_t n) {
  return "our W_" + std::to_string(n) + " is traditionally denoted W_" + std::to_string(n + 1);
}

json context_json(const WittContext& ctx, const AlgebraStructure& alg) {
  return {{"base", ctx.base()->name()},
          {"pi", ctx.base()->format(ctx.pi())},
          {"q", std::to_string(ctx.q())},
          {"n", std::to_string(ctx.n())},
          {"traditional_length", std::to_string(ctx.n() + 1)},
          {"algebra", alg.target()->name()},
          {"description", ctx.describe()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json strings(const Ring& A, const std::vector<Value>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(A.format(x));
  return out;
}

std::string tuple(const Ring& A, const std::vector<Value>& xs, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + A.format(xs[i]);
  return s + close;
}

std::string vector_document(const WittVector& w, const std::string& format, const std::string& kind = "vector") {
  const Ring& A = *w.ring();
  const bool tf = w.algebra()->torsion_free(w.context().pi());
  std::optional<GhostVector> g;
  if (tf) g = ghost(w);
  if (format == "json") {
    json j{{"context", context_json(w.context(), *w.algebra())},
           {"kind", kind},
           {"components", strings(A, w.components())},
           {"convention_note", convention_note(w.n())}};
    if (g) j["ghost"] = strings(A, g->entries());
    return dump(j);
  }
  std::string s = tuple(A, w.components(), '(', ')') + "\n";
  if (g) s += "ghost " + tuple(A, g->entries(), '<', '>') + "\n";
  s += w.context().describe() + ", A = " + A.name() + "\n";
  return s;
}

std::string result_document(const ExprValue& v, const WittContext& ctx, const AlgebraPtr& alg,
                            const std::string& format) {
  const Ring& A = *alg->target();
  switch (v.kind) {
    case ExprValue::Kind::Vector:
      return vector_document(*v.vector, format);
    case ExprValue::Kind::Ghost: {
      const auto& g = *v.ghost;
      if (format == "json") {
        return dump({{"context", context_json(g.context(), *alg)},
                     {"kind", "ghost"},
                     {"components", strings(A, g.entries())},
                     {"convention_note", convention_note(g.context().n())}});
      }
      return tuple(A, g.entries(), '<', '>') + "\n" + g.context().describe() + ", A = " + A.name() + "\n";
    }
    case ExprValue::Kind::Element:
      if (format == "json") {
        return dump({{"context", context_json(ctx, *alg)},
                     {"kind", "element"},
                     {"components", json::array({A.format(v.element)})},
                     {"convention_note", convention_note(ctx.n())}});
      }
      return A.format(v.element) + "\n";
  }
  return {};
}

std::string report_document(const Report& r, const std::string& format) {
  if (format == "json") return report_json(r) + "\n";
  Report sorted = r;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Claim& a, const Claim& b) { return a.claim_id < b.claim_id; });
  std::ostringstream s;
  std::size_t bad = 0;
  for (const auto& c : sorted) {
    if (c.passed()) {
      s << "PASS " << c.claim_id << " (" << c.universe_size << " cases)\n";
    } else {
      ++bad;
      s << "FAIL " << c.claim_id << " (" << c.failure_count << " of " << c.universe_size << " cases)\n";
      for (const auto& w : c.failures) s << "  " << w << "\n";
    }
  }
  s << sorted.size() << " claims, " << bad << " failed\n";
  return s.str();
}

std::string polynomial_document(const StructuralPolynomialSet& s, const std::string& format) {
  static const char* letters = "SPNF";
  const char letter = letters[static_cast<int>(s.op)];
  const MultiPolyRing& P = *s.ring;
  const Ring& B = *s.ctx.base();
  if (format == "json") {
    json polys = json::array();
    for (std::size_t k = 0; k < s.polys.size(); ++k) {
      json terms = json::array();
      for (const auto& t : poly_terms(s.polys[k])) {
        json ex = json::object();
        for (std::size_t v = 0; v < t.exponents.size(); ++v) {
          if (t.exponents[v]) ex[P.var_names()[v]] = std::to_string(t.exponents[v]);
        }
        terms.push_back({{"coeff", B.format(t.coeff)}, {"exponents", ex}});
      }
      polys.push_back({{"index", std::to_string(k)},
                       {"name", std::string(1, letter) + "_" + std::to_string(k)},
                       {"text", P.format(s.polys[k])},
                       {"terms", terms}});
    }
    return dump({{"context", context_json(s.ctx, *AlgebraStructure::identity(s.ctx.base()))},
                 {"op", std::string(witt_op_name(s.op))},
                 {"variables", P.var_names()},
                 {"polynomials", polys},
                 {"convention_note", convention_note(s.ctx.n())}});
  }
  std::string out = "# " + std::string(witt_op_name(s.op)) + ", " + s.ctx.describe() + "\n";
  for (std::size_t k = 0; k < s.polys.size(); ++k) {
    out += std::string(1, letter) + "_" + std::to_string(k) + " = " + P.format(s.polys[k]) + "\n";
  }
  return out;
}

std::string read_spec(const std::string& inline_text, const std::string& path) {
  if (!inline_text.empty()) return inline_text;
  if (path.empty()) fail(ErrorCode::ParseError, "one of --spec or --spec-file is required");
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& part : split_top_level(s)) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "expected a comma-separated list of natural numbers, got '" + s + "'");
    }
  }
  return out;
}

std::string multi_document(const MultiWittVector& w, const std::string& format) {
  const Ring& A = *w.shape()->alg->target();
  const auto comps = w.components();
  const bool tf = [&] {
    for (std::size_t a = 0; a < w.shape()->family.size(); ++a) {
      if (!w.shape()->alg->torsion_free(w.shape()->family.prime(a))) return false;
    }
    return true;
  }();
  std::map<MultiIndex, Value> g;
  if (tf) g = multi_ghost(w);
  auto idx = [](const MultiIndex& i) {
    std::string s = "(";
    for (std::size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
    return s + ")";
  };
  if (format == "json") {
    json c = json::array(), gj = json::array(), ix = json::array();
    for (const auto& [i, v] : comps) {
      ix.push_back(idx(i));
      c.push_back(A.format(v));
      if (tf) gj.push_back(A.format(g.at(i)));
    }
    json n = json::array();
    for (auto k : w.shape()->n) n.push_back(std::to_string(k));
    json j{{"context", {{"family", w.shape()->family.to_string()}, {"n", n}, {"algebra", A.name()}}},
           {"kind", "multi_vector"},
           {"indices", ix},
           {"components", c},
           {"convention_note", "each n_alpha is normalized: n_alpha + 1 components per prime"}};
    if (tf) j["ghost"] = gj;
    return dump(j);
  }
  std::string s = "# " + w.shape()->family.to_string() + ", A = " + A.name() + "\n";
  for (const auto& [i, v] : comps) {
    s += "x" + idx(i) + " = " + A.format(v);
    if (tf) s += "    gh = " + A.format(g.at(i));
    s += "\n";
  }
  return s;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Outcome o;
  CLI::App app{"Exact arithmetic on generalized truncated Witt vectors", "witt"};
  app.require_subcommand(1);
  Common common;
  std::string result;

  // eval / ghost
  ContextFlags ef;
  std::string expr, path = "auto", rebase;
  auto* eval = app.add_subcommand("eval", "evaluate a Witt expression");
  add_context_flags(eval, ef);
  add_format_flag(eval, common);
  eval->add_option("--expr,expr", expr, "expression")->required();
  eval->add_option("--path", path, "auto, structural, ghost or cover")->capture_default_str();
  eval->add_option("--rebase", rebase, "rewrite the result for the uniformizer u*pi, u a unit");

  ContextFlags gf;
  std::string gexpr;
  auto* gh = app.add_subcommand("ghost", "ghost components of a Witt expression");
  add_context_flags(gh, gf);
  add_format_flag(gh, common);
  gh->add_option("--expr,expr", gexpr, "expression")->required();

  ContextFlags uf;
  std::string gvec;
  auto* ug = app.add_subcommand("unghost", "Witt components of a ghost vector");
  add_context_flags(ug, uf);
  add_format_flag(ug, common);
  ug->add_option("--ghost,ghost", gvec, "entries, e.g. \"1,3,11\" or \"<1,3,11>\"")->required();

  ContextFlags sf;
  std::string op = "sum";
  auto* sp = app.add_subcommand("structpoly", "structural polynomials of a ring operation");
  add_context_flags(sp, sf, false);
  add_format_flag(sp, common);
  sp->add_option("--op", op, "sum, product, negation or frobenius")->capture_default_str();

  ContextFlags pf;
  std::string vars, style = "theta";
  std::vector<std::string> rels;
  auto* pr = app.add_subcommand("present", "presentation of Lambda_n applied to R0[x..]/(f..)");
  add_context_flags(pr, pf, false);
  add_format_flag(pr, common);
  pr->add_option("--vars", vars, "generators, comma separated")->required();
  pr->add_option("--rel", rels, "relation (repeatable)");
  pr->add_option("--style", style, "theta or delta")->capture_default_str();

  std::string spec_text, spec_file, element, prime, lens;
  std::size_t clen = 1;
  auto* co = app.add_subcommand("coaction", "the Lambda-coaction A -> W_n(A) of a Frobenius lift");
  add_format_flag(co, common);
  co->add_option("--spec", spec_text, "lift spec as JSON");
  co->add_option("--spec-file", spec_file, "file holding the lift spec");
  co->add_option("--element", element, "element of A")->required();
  co->add_option("--prime", prime, "which prime of the family (default: the first)");
  co->add_option("--len", clen, "normalized length")->capture_default_str();
  co->add_option("--lens", lens, "multi-index n, one entry per prime in family order");

  std::string tset, classical;
  std::uint64_t bigN = 0;
  auto* bw = app.add_subcommand("bigwitt", "big Witt vectors over Z on a divisor-closed truncation set");
  add_format_flag(bw, common);
  bw->add_option("--set", tset, "truncation set, e.g. 1,2,3,6");
  bw->add_option("--N", bigN, "use the divisors of N");
  bw->add_option("--classical", classical, "classical coordinates x_d, one per element of the set");

  ContextFlags vf;
  std::string check;
  std::string vspec, vspec_file;
  std::size_t samples = 1000;
  std::uint64_t vseed = 1, max_pairs = 0;
  auto* ve = app.add_subcommand("verify", "run one structural check and print its report");
  add_context_flags(ve, vf);
  add_format_flag(ve, common);
  ve->add_option("--check", check, "wn-presentation, descent, coord-change, lift or delta-axioms")
      ->required()
      ->check(CLI::IsMember({"wn-presentation", "descent", "coord-change", "lift", "delta-axioms"}));
  ve->add_option("--spec", vspec, "lift spec as JSON (lift, delta-axioms)");
  ve->add_option("--spec-file", vspec_file, "file holding the lift spec");
  ve->add_option("--samples", samples, "sample count")->capture_default_str();
  ve->add_option("--seed", vseed, "seed")->capture_default_str();
  ve->add_option("--max-pairs", max_pairs, "pair budget for enumerations, 0 for exhaustive")->capture_default_str();

  SelftestOptions st;
  std::string size = "small";
  auto* se = app.add_subcommand("selftest", "run the property batteries");
  add_format_flag(se, common);
  se->add_option("--suite", st.suite, "suite name or all")->capture_default_str();
  se->add_option("--size", size, "small or medium")->capture_default_str();
  se->add_option("--seed", st.seed, "seed")->capture_default_str();
  se->add_option("--jobs", st.jobs, "worker threads, 0 for all cores")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    o.out = app.help();
    return o;
  } catch (const CLI::CallForAllHelp&) {
    o.out = app.help("", CLI::AppFormatMode::All);
    return o;
  } catch (const CLI::ParseError& e) {
    o.err = std::string("error: ") + e.what() + "\n";
    o.exit_code = 2;
    return o;
  }

  const std::string& fmt = common.format;
  try {
    if (eval->parsed()) {
      const auto b = build(ef);
      ExprValue v = evaluate_expression(expr, b.ctx, b.alg, parse_path(path));
      if (!rebase.empty()) {
        if (v.kind != ExprValue::Kind::Vector) fail(ErrorCode::ParseError, "--rebase needs a vector result");
        v.vector = rebase_uniformizer(*v.vector, parse_element(b.ctx.base(), rebase).value());
      }
      o.out = result_document(v, b.ctx, b.alg, fmt);
    } else if (gh->parsed()) {
      const auto b = build(gf);
      ExprValue v = evaluate_expression("gh " + gexpr, b.ctx, b.alg);
      o.out = result_document(v, b.ctx, b.alg, fmt);
    } else if (ug->parsed()) {
      const auto b = build(uf);
      std::string inner = gvec;
      if (!inner.empty() && inner.front() != '<') inner = "<" + inner + ">";
      o.out = vector_document(*evaluate_expression(inner, b.ctx, b.alg).vector, fmt);
    } else if (sp->parsed()) {
      const auto b = build(sf);
      o.out = polynomial_document(*structural_polys(b.ctx, parse_witt_op(op)), fmt);
    } else if (pr->parsed()) {
      const auto b = build(pf);
      std::vector<std::string> names;
      for (auto& v : split_top_level(vars)) {
        v.erase(0, v.find_first_not_of(" \t"));
        v.erase(v.find_last_not_of(" \t") + 1);
        names.push_back(v);
      }
      const auto L = lambda_presentation(make_presentation(b.ctx.base(), names, rels), b.ctx, parse_style(style));
      o.out = fmt == "json" ? L.to_json() + "\n" : L.to_text();
    } else if (co->parsed()) {
      const auto spec = FrobeniusLiftSpec::from_json(read_spec(spec_text, spec_file));
      const Value a = parse_element(spec.ring(), element).value();
      if (!lens.empty()) {
        o.out = multi_document(coaction(spec, a, parse_sizes(lens)), fmt);
      } else {
        const std::size_t alpha =
            prime.empty() ? 0 : spec.family().index_of(parse_element(spec.base(), prime).value());
        o.out = vector_document(coaction(spec, alpha, a, clen), fmt);
      }
    } else if (bw->parsed()) {
      std::set<std::uint64_t> T;
      if (bigN) {
        for (std::uint64_t d = 1; d <= bigN; ++d) {
          if (bigN % d == 0) T.insert(d);
        }
      }
      if (!tset.empty()) {
        for (auto d : parse_sizes(tset)) T.insert(d);
      }
      if (T.empty()) fail(ErrorCode::ParseError, "one of --set or --N is required");
      const auto ts = truncation_set_context(T);
      const auto change = big_witt_change(ts);
      const RingPtr Z = integers();
      json j{{"set", json::array()}, {"family", ts.family.to_string()}, {"n", json::array()}};
      for (auto d : ts.elements) j["set"].push_back(std::to_string(d));
      for (auto k : ts.n) j["n"].push_back(std::to_string(k));
      std::string text = "# T = divisors of " + std::to_string(ts.N) + " = W_{" + ts.family.to_string() + "}\n";
      for (auto d : ts.elements) {
        const auto i = ts.index_of(d);
        const std::string xv = change->nested_ring->format(change->classical_of_nested.at(d));
        const std::string yv = change->classical_ring->format(change->nested_of_classical.at(i));
        j["classical_of_nested"][std::to_string(d)] = xv;
        j["nested_of_classical"][std::to_string(d)] = yv;
        text += "d = " + std::to_string(d) + ": x_d = " + xv + "; y_d = " + yv + "\n";
      }
      if (!classical.empty()) {
        const auto parts = split_top_level(classical);
        if (parts.size() != ts.elements.size()) {
          fail(ErrorCode::ParseError, "--classical needs one value per element of the set");
        }
        std::map<std::uint64_t, Value> x;
        for (std::size_t k = 0; k < parts.size(); ++k) x.emplace(ts.elements[k], parse_element(Z, parts[k]).value());
        const auto w = from_classical(x, ts, AlgebraStructure::identity(Z));
        const auto gh_vals = classical_big_ghost(*Z, x, ts);
        text += "# x = (";
        for (std::size_t k = 0; k < parts.size(); ++k) text += (k ? "," : "") + Z->format(x.at(ts.elements[k]));
        text += ")\n";
        for (auto d : ts.elements) {
          const std::string yd = Z->format(w.component(ts.index_of(d)));
          const std::string wd = Z->format(gh_vals.at(d));
          j["nested"][std::to_string(d)] = yd;
          j["ghost"][std::to_string(d)] = wd;
          text += "d = " + std::to_string(d) + ": y_d = " + yd + ", w_d = " + wd + "\n";
        }
      }
      o.out = fmt == "json" ? dump(j) : text;
    } else if (ve->parsed()) {
      Report r;
      const EnumerationLimits lim{max_pairs, vseed};
      if (check == "wn-presentation") {
        const auto b = build(vf);
        r = verify_wn_presentation(b.ctx.base(), b.ctx.pi(), b.ctx.n());
      } else if (check == "descent") {
        const auto b = build(vf);
        r = kernel_report(b.alg, b.ctx);
        for (auto& c : equalizer_report(b.alg, b.ctx)) r.push_back(c);
        for (auto& c : ghost_congruence_report(b.alg, b.ctx)) r.push_back(c);
        for (auto& c : alpha_homomorphism_report(b.alg, b.ctx, lim)) r.push_back(c);
        for (std::size_t j = 0; j <= 2; ++j) {
          for (auto& c : v_sequence_report(b.alg, b.ctx, j, lim)) r.push_back(c);
        }
      } else if (check == "coord-change") {
        const auto b = build(vf);
        const auto c = coord_change(b.ctx);
        Claim cl{"presentation.coord_change[" + b.ctx.base()->format(b.ctx.pi()) + "]",
                 "delta^k in theta coordinates and back"};
        for (std::size_t i = 0; i <= b.ctx.n(); ++i) {
          cl.check(true, "delta" + std::to_string(i) + " = " + c->theta_ring->format(c->delta_of_theta[i]));
        }
        r.push_back(cl);
        if (fmt == "text") {
          std::string text;
          for (std::size_t i = 0; i <= b.ctx.n(); ++i) {
            text += "delta^" + std::to_string(i) + " = " + c->theta_ring->format(c->delta_of_theta[i]) + "\n";
          }
          for (std::size_t i = 0; i <= b.ctx.n(); ++i) {
            text += "theta_" + std::to_string(i) + " = " + c->delta_ring->format(c->theta_of_delta[i]) + "\n";
          }
          o.out = text;
          return o;
        }
      } else {
        const auto spec = FrobeniusLiftSpec::from_json(read_spec(vspec, vspec_file));
        Claim valid{"delta.lift_valid", "psi is a commuting family of Frobenius lifts"};
        const auto lc = check_frobenius_lift(spec);
        valid.check(lc.ok, lc.ok ? spec.to_string() : lc.diagnostic);
        r.push_back(valid);
        if (check == "delta-axioms" && lc.ok) {
          for (auto& c : check_delta_axioms(spec, samples, vseed)) r.push_back(c);
        }
      }
      o.out = report_document(r, fmt);
      if (!all_passed(r)) o.exit_code = 1;
    } else if (se->parsed()) {
      st.size = parse_suite_size(size);
      const Report r = run_selftest(st);
      o.out = report_document(r, fmt);
      if (!all_passed(r)) o.exit_code = 1;
    }
  } catch (const Error& e) {
    o.exit_code = exit_code_for(e.code());
    o.err = std::string("error: ") + e.what() + "\n";
    if (fmt == "json") {
      o.out = dump({{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}});
    }
  } catch (const std::exception& e) {
    o.exit_code = 1;
    o.err = std::string("error: ") + e.what() + "\n";
  }
  return o;
}

}  // namespace witt::cli
