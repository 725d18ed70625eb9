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

#include "witt/structural.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace witt {

namespace {

constexpr int kCacheVersion = 1;

template <class C>
CoeffDomain<C> domain_of(const Ring& r0);

template <>
CoeffDomain<Integer> domain_of<Integer>(const Ring&) {
  return CoeffDomain<Integer>{0};
}

template <>
CoeffDomain<FpPoly> domain_of<FpPoly>(const Ring& r0) {
  const auto& u = static_cast<const UnivariatePolyRing&>(r0);
  return CoeffDomain<FpPoly>{u.prime(), u.var()};
}

template <class C>
C coeff_of(const Value& v);
template <>
Integer coeff_of<Integer>(const Value& v) { return v.integer(); }
template <>
FpPoly coeff_of<FpPoly>(const Value& v) { return v.fp_poly(); }

// Symbolic ghost/unghost over R0[x...].
template <class C>
struct Engine {
  using P = SparsePoly<C>;
  CoeffDomain<C> dom;
  std::size_t nv;
  C pi;
  std::uint64_t q;

  P pi_power(std::size_t i) const { return P::constant(nv, dom.pow(pi, i), dom); }

  // sum_{i<=k} pi^i x_{off+i}^{q^{k-i}}
  P ghost_monomials(std::size_t off, std::size_t k) const {
    std::vector<std::pair<std::vector<Exponent>, C>> terms;
    std::uint64_t e = 1;
    for (std::size_t i = k + 1; i-- > 0;) {
      std::vector<Exponent> ex(nv, 0);
      ex[off + i] = static_cast<Exponent>(e);
      terms.emplace_back(std::move(ex), dom.pow(pi, i));
      e *= q;
    }
    return P::from_terms(nv, std::move(terms), dom);
  }

  std::vector<P> unghost(const std::vector<P>& targets) const {
    std::vector<P> xs, pw;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      for (auto& w : pw) w = poly::pow(w, q, dom);
      if (k > 0) pw.push_back(poly::pow(xs[k - 1], q, dom));
      P num = targets[k];
      for (std::size_t i = 0; i < k; ++i) num = poly::sub(num, poly::scale(pw[i], dom.pow(pi, i), dom), dom);
      auto x = poly::exact_div_coeff(num, dom.pow(pi, k), dom);
      if (!x) {
        fail(ErrorCode::InternalIntegrityError,
             "symbolic unghost: component " + std::to_string(k) + " is not divisible by pi^" + std::to_string(k));
      }
      xs.push_back(std::move(*x));
    }
    return xs;
  }

  // Ghost components of a list of polynomials, recomputed from scratch.
  std::vector<P> ghosts(const std::vector<P>& xs) const {
    std::vector<P> out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      P acc(nv);
      std::uint64_t e = 1;
      for (std::size_t i = k + 1; i-- > 0;) {
        acc = poly::add(acc, poly::scale(poly::pow(xs[i], e, dom), dom.pow(pi, i), dom), dom);
        e *= q;
      }
      out.push_back(std::move(acc));
    }
    return out;
  }
};

std::vector<std::string> var_names(std::size_t n, bool binary) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("a" + std::to_string(i));
  if (binary) {
    for (std::size_t i = 0; i <= n; ++i) names.push_back("b" + std::to_string(i));
  }
  return names;
}

bool is_binary(WittOp op) { return op == WittOp::Sum || op == WittOp::Product; }

template <class C>
std::vector<SparsePoly<C>> targets_for(const Engine<C>& e, WittOp op, std::size_t n) {
  using P = SparsePoly<C>;
  std::vector<P> t;
  const std::size_t count = op == WittOp::Frobenius ? n : n + 1;
  for (std::size_t k = 0; k < count; ++k) {
    switch (op) {
      case WittOp::Sum:
        t.push_back(poly::add(e.ghost_monomials(0, k), e.ghost_monomials(n + 1, k), e.dom));
        break;
      case WittOp::Product:
        t.push_back(poly::mul(e.ghost_monomials(0, k), e.ghost_monomials(n + 1, k), e.dom));
        break;
      case WittOp::Negation:
        t.push_back(poly::neg(e.ghost_monomials(0, k), e.dom));
        break;
      case WittOp::Frobenius:
        t.push_back(e.ghost_monomials(0, k + 1));
        break;
    }
  }
  return t;
}

template <class C>
Engine<C> engine_for(const WittContext& ctx, std::size_t nv) {
  return Engine<C>{domain_of<C>(*ctx.base()), nv, coeff_of<C>(ctx.pi()), ctx.q()};
}

template <class C>
std::vector<Value> synthesize(const WittContext& ctx, WittOp op, std::size_t nv) {
  auto e = engine_for<C>(ctx, nv);
  // Make sure every q-power exponent fits before doing any work.
  ctx.q_power(ctx.n());
  auto xs = e.unghost(targets_for(e, op, ctx.n()));
  return {xs.begin(), xs.end()};
}

template <class C>
bool check_compatible(const StructuralPolynomialSet& s) {
  const std::size_t nv = s.ring->nvars();
  auto e = engine_for<C>(s.ctx, nv);
  std::vector<SparsePoly<C>> xs;
  for (const auto& v : s.polys) xs.push_back(std::get<SparsePoly<C>>(v.rep));
  return e.ghosts(xs) == targets_for(e, s.op, s.ctx.n());
}

// ---- on-disk cache ---------------------------------------------------------

nlohmann::json coeff_to_json(const Integer& c) { return to_string(c); }
nlohmann::json coeff_to_json(const FpPoly& c) { return c.coeffs(); }

template <class C>
C coeff_from_json(const nlohmann::json& j, const CoeffDomain<C>& dom);
template <>
Integer coeff_from_json<Integer>(const nlohmann::json& j, const CoeffDomain<Integer>&) {
  return Integer(j.get<std::string>());
}
template <>
FpPoly coeff_from_json<FpPoly>(const nlohmann::json& j, const CoeffDomain<FpPoly>& dom) {
  return FpPoly(dom.p, j.get<std::vector<std::uint32_t>>());
}

std::filesystem::path cache_path(const std::string& key) {
  const char* dir = std::getenv("WITT_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream name;
  name << std::hex << std::hash<std::string>{}(key) << ".json";
  return std::filesystem::path(dir) / name.str();
}

template <class C>
nlohmann::json polys_to_json(const std::string& key, std::size_t nv, const std::vector<Value>& polys) {
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["fingerprint"] = key;
  j["nvars"] = nv;
  auto& arr = j["polys"] = nlohmann::json::array();
  for (const auto& v : polys) {
    const auto& p = std::get<SparsePoly<C>>(v.rep);
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<Exponent> e(p.exps(i).begin(), p.exps(i).end());
      terms.push_back({{"e", e}, {"c", coeff_to_json(p.coeff(i))}});
    }
    arr.push_back(std::move(terms));
  }
  return j;
}

template <class C>
std::optional<std::vector<Value>> polys_from_json(const nlohmann::json& j, const std::string& key,
                                                  std::size_t nv, const CoeffDomain<C>& dom) {
  if (j.value("version", -1) != kCacheVersion || j.value("fingerprint", "") != key ||
      j.value("nvars", std::size_t{0}) != nv) {
    return std::nullopt;
  }
  std::vector<Value> out;
  for (const auto& terms : j.at("polys")) {
    std::vector<std::pair<std::vector<Exponent>, C>> ts;
    for (const auto& t : terms) {
      auto e = t.at("e").get<std::vector<Exponent>>();
      if (e.size() != nv) return std::nullopt;
      ts.emplace_back(std::move(e), coeff_from_json<C>(t.at("c"), dom));
    }
    out.emplace_back(SparsePoly<C>::from_terms(nv, std::move(ts), dom));
  }
  return out;
}

template <class C>
std::optional<std::vector<Value>> disk_load(const std::string& key, std::size_t nv, const CoeffDomain<C>& dom) {
  auto path = cache_path(key);
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return polys_from_json<C>(nlohmann::json::parse(in), key, nv, dom);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

template <class C>
void disk_store(const std::string& key, std::size_t nv, const std::vector<Value>& polys) {
  auto path = cache_path(key);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << polys_to_json<C>(key, nv, polys).dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, StructuralPtr>& memo() {
  static std::map<std::string, StructuralPtr> m;
  return m;
}

std::map<std::string, std::shared_ptr<const RebasePolys>>& rebase_memo() {
  static std::map<std::string, std::shared_ptr<const RebasePolys>> m;
  return m;
}

template <class C>
std::vector<Value> load_or_synthesize(const WittContext& ctx, WittOp op, const std::string& key, std::size_t nv) {
  const auto dom = domain_of<C>(*ctx.base());
  if (auto hit = disk_load<C>(key, nv, dom)) return std::move(*hit);
  auto polys = synthesize<C>(ctx, op, nv);
  disk_store<C>(key, nv, polys);
  return polys;
}

}  // namespace

std::string_view witt_op_name(WittOp op) {
  switch (op) {
    case WittOp::Sum: return "sum";
    case WittOp::Product: return "product";
    case WittOp::Negation: return "negation";
    case WittOp::Frobenius: return "frobenius";
  }
  return "?";
}

WittOp parse_witt_op(std::string_view s) {
  for (WittOp op : {WittOp::Sum, WittOp::Product, WittOp::Negation, WittOp::Frobenius}) {
    if (s == witt_op_name(op)) return op;
  }
  fail(ErrorCode::ParseError, "unknown operation '" + std::string(s) + "'");
}

std::size_t StructuralPolynomialSet::term_count() const {
  std::size_t n = 0;
  for (const auto& p : polys) n += ring->term_count(p);
  return n;
}

StructuralPtr structural_polys(const WittContext& ctx, WittOp op) {
  if (op == WittOp::Frobenius && ctx.n() == 0) fail(ErrorCode::LengthZero, "Frobenius needs n >= 1");
  const std::string key = std::string(witt_op_name(op)) + "|" + ctx.key() + "|" + std::to_string(ctx.n());
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = memo().find(key); it != memo().end()) return it->second;
  }
  auto ring = std::static_pointer_cast<const MultiPolyRing>(multi(ctx.base(), var_names(ctx.n(), is_binary(op))));
  const std::size_t nv = ring->nvars();
  std::vector<Value> polys = ctx.positive_characteristic() ? load_or_synthesize<FpPoly>(ctx, op, key, nv)
                                                           : load_or_synthesize<Integer>(ctx, op, key, nv);
  auto set = std::make_shared<const StructuralPolynomialSet>(StructuralPolynomialSet{op, ctx, ring, std::move(polys)});
  std::lock_guard lock(cache_mutex());
  return memo().emplace(key, set).first->second;
}

bool ghost_compatible(const StructuralPolynomialSet& s) {
  return s.ctx.positive_characteristic() ? check_compatible<FpPoly>(s) : check_compatible<Integer>(s);
}

std::vector<Value> target_ghosts(const StructuralPolynomialSet& s) {
  auto run = [&](auto tag) {
    using C = decltype(tag);
    auto e = engine_for<C>(s.ctx, s.ring->nvars());
    auto t = targets_for(e, s.op, s.ctx.n());
    return std::vector<Value>(t.begin(), t.end());
  };
  return s.ctx.positive_characteristic() ? run(FpPoly()) : run(Integer());
}

std::shared_ptr<const RebasePolys> rebase_polys(const WittContext& ctx, const Value& u) {
  const Ring& r0 = *ctx.base();
  if (!r0.exact_div(r0.one(), u)) fail(ErrorCode::NotAUnit, r0.format(u) + " is not a unit of " + r0.name());
  WittContext target = WittContext::make(ctx.base(), r0.mul(u, ctx.pi()), ctx.n());
  const std::string key = "rebase|" + ctx.key() + "|" + std::to_string(ctx.n()) + "|" + r0.format(u);
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = rebase_memo().find(key); it != rebase_memo().end()) return it->second;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= ctx.n(); ++i) names.push_back("x" + std::to_string(i));
  auto ring = std::static_pointer_cast<const MultiPolyRing>(multi(ctx.base(), names));
  auto run = [&](auto tag) {
    using C = decltype(tag);
    auto src = engine_for<C>(ctx, names.size());
    auto dst = engine_for<C>(target, names.size());
    std::vector<SparsePoly<C>> g;
    for (std::size_t k = 0; k <= ctx.n(); ++k) g.push_back(src.ghost_monomials(0, k));
    auto ys = dst.unghost(g);
    return std::vector<Value>(ys.begin(), ys.end());
  };
  std::vector<Value> polys = ctx.positive_characteristic() ? run(FpPoly()) : run(Integer());
  auto r = std::make_shared<const RebasePolys>(RebasePolys{ctx, target, ring, std::move(polys)});
  std::lock_guard lock(cache_mutex());
  return rebase_memo().emplace(key, r).first->second;
}

void clear_structural_cache() {
  std::lock_guard lock(cache_mutex());
  memo().clear();
  rebase_memo().clear();
}

}  // namespace witt
