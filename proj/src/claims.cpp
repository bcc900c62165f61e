#include "nonassoc/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <thread>

#include "nonassoc/catalog.hpp"
#include "nonassoc/cohomology.hpp"
#include "nonassoc/conservative.hpp"
#include "nonassoc/contraction.hpp"
#include "nonassoc/io.hpp"

#ifndef NONASSOC_DATA_DIR
#define NONASSOC_DATA_DIR "data"
#endif

namespace nonassoc {

using nlohmann::json;

Algebra resolve_algebra(const std::string& spec) {
  static const std::regex adapted_re(R"(W2bar_adapted\(\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\))");
  std::smatch m;
  if (std::regex_match(spec, m, adapted_re)) return w2bar_adapted(Rational::parse(m[1].str()), Rational::parse(m[2].str()));
  std::error_code ec;
  if (spec.ends_with(".json") && std::filesystem::is_regular_file(spec, ec)) return load_algebra(spec);
  return catalog(spec);
}

IdentityCombination w14_alternating(std::size_t k) {
  if (k < 1 || k > 5) throw std::out_of_range("w14_alternating index must be 1..5");
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < 5; ++v)
    if (v != k - 1) others.push_back(v);
  IdentityCombination c(5);
  const BracketShape shape = right_comb(5);
  std::vector<std::size_t> s(4);
  std::iota(s.begin(), s.end(), std::size_t{0});
  do {
    std::vector<std::size_t> leaves;
    for (auto i : s) leaves.push_back(others[i]);
    leaves.push_back(k - 1);
    c.add({shape, leaves}, Rational(permutation_sign(s)));
  } while (std::next_permutation(s.begin(), s.end()));
  return c;
}

namespace {

Rational coef_of(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or \"p/q\" string");
}

} // namespace

IdentityCombination resolve_identity(const json& spec) {
  if (spec.is_string()) {
    const std::string s = spec.get<std::string>();
    std::error_code ec;
    if (s.ends_with(".json") && std::filesystem::is_regular_file(s, ec)) return load_identity(s);
    return parse_identity_expression(s);
  }
  if (!spec.is_object()) throw std::invalid_argument("identity specification must be a string or object");
  if (spec.contains("w14_alternating")) return w14_alternating(spec["w14_alternating"].get<std::size_t>());
  if (spec.contains("combination")) {
    std::optional<IdentityCombination> total;
    for (const auto& item : spec["combination"]) {
      IdentityCombination term = resolve_identity(item.at(1)) * coef_of(item.at(0));
      total = total ? *total + term : term;
    }
    if (!total) throw std::invalid_argument("empty combination");
    return *total;
  }
  const json& terms = spec.at("terms");
  if (!terms.empty() && terms.front().is_object()) return identity_from_json(spec);
  const std::size_t n = spec.at("degree").get<std::size_t>();
  std::vector<std::pair<Rational, std::string>> list;
  for (const auto& t : terms) list.emplace_back(coef_of(t.at(0)), t.at(1).get<std::string>());
  return IdentityCombination::from_terms(n, list);
}

namespace {

std::vector<IdentityCombination> identity_list(const json& specs) {
  std::vector<IdentityCombination> out;
  for (const auto& s : specs) out.push_back(resolve_identity(s));
  return out;
}

json cocycle_value(const Algebra& a, const IdentityCombination& P, const std::string& what) {
  try {
    CohomologyReport r = cohomology(a, P);
    if (what == "Z") return r.dim_Z;
    if (what == "B") return r.dim_B;
    if (!r.contained) return "B2 not contained in Z2 (coborder of e" + std::to_string(*r.witness + 1) + "*)";
    return r.dim_H;
  } catch (const BaseViolatesIdentity& e) {
    return e.what();
  }
}

} // namespace

json evaluate_check(const json& check) {
  const std::string kind = check.at("kind").get<std::string>();
  auto alg = [&] { return resolve_algebra(check.at("algebra").get<std::string>()); };

  if (kind == "derivation_dim") return derivation_algebra(alg()).dimension;
  if (kind == "contraction") {
    Algebra source = resolve_algebra(check.at("source").get<std::string>());
    Algebra target = resolve_algebra(check.at("target").get<std::string>());
    Algebra got = iw_contract(source, check.at("scale").get<std::vector<std::size_t>>(), target.name);
    auto diff = table_differences(target, got);
    if (diff.empty()) return "table matches";
    return "mismatch: " + diff.front() + (diff.size() > 1 ? " (+" + std::to_string(diff.size() - 1) + " more)" : "");
  }
  if (kind == "terminal") return is_terminal(alg());
  if (kind == "conservative") return conservative_solve(alg()).has_value();
  if (kind == "witness") {
    Algebra a = alg();
    Algebra F = algebra_from_json(json{{"name", "F"}, {"dim", a.dim()}, {"products", check.at("F")}});
    return verify_witness(a, F.product);
  }
  if (kind == "ideal") return is_ideal(alg(), Subspace::of_basis_vectors(alg().dim(), check.at("span").get<std::vector<std::size_t>>()));
  if (kind == "identity_dim") return identity_space(alg(), check.at("degree").get<std::size_t>()).dimension;
  if (kind == "shape_dim")
    return shape_identity_space(alg(), check.at("degree").get<std::size_t>(), check.at("shape").get<std::size_t>()).dimension;
  if (kind == "satisfies") return satisfies_identity(alg(), resolve_identity(check.at("identity")));
  if (kind == "span_equals" || kind == "span_equals_shape") {
    // Every listed identity vanishes and together they span the whole space.
    Algebra a = alg();
    auto ids = identity_list(check.at("identities"));
    for (const auto& c : ids)
      if (!satisfies_identity(a, c)) return "listed identity does not vanish: " + c.str();
    const std::size_t n = check.at("degree").get<std::size_t>();
    IdentitySpace space = check.contains("shape") ? shape_identity_space(a, n, check.at("shape").get<std::size_t>())
                                                  : identity_space(a, n);
    return same_span(ids, space.basis);
  }
  if (kind == "spaces_equal") {
    auto names = check.at("algebras").get<std::vector<std::string>>();
    const std::size_t n = check.at("degree").get<std::size_t>();
    IdentitySpace first = identity_space(resolve_algebra(names.at(0)), n);
    for (std::size_t i = 1; i < names.size(); ++i)
      if (!same_span(first.basis, identity_space(resolve_algebra(names[i]), n).basis)) return false;
    return true;
  }
  if (kind == "identities_equal") return resolve_identity(check.at("lhs")) == resolve_identity(check.at("rhs"));
  if (kind == "coborder_dim") return coborder_space(alg()).dimension;
  if (kind == "cocycle_dim") return cocycle_value(alg(), resolve_identity(check.at("identity")), "Z");
  if (kind == "cohomology_dim") return cocycle_value(alg(), resolve_identity(check.at("identity")), "H");
  if (kind == "terminal_cohomology_dim") {
    Algebra a = alg();
    if (!is_terminal(a)) return "not terminal";
    return cocycle_value(a, terminal_identity(), "H");
  }
  throw std::invalid_argument("unknown check kind \"" + kind + "\"");
}

std::vector<Claim> load_claims(const std::filesystem::path& manifest) {
  json j = read_json_file(manifest);
  std::vector<Claim> out;
  for (const auto& c : j.at("claims")) {
    Claim claim;
    claim.id = c.at("id").get<std::string>();
    claim.criterion = c.value("criterion", 0);
    claim.scope = c.at("scope").get<std::string>();
    claim.source = c.value("source", "");
    claim.command = c.value("command", "");
    claim.check = c.at("check");
    claim.expected = c.at("expected");
    out.push_back(std::move(claim));
  }
  return out;
}

ClaimResult run_claim(const Claim& c) {
  ClaimResult r{c, nullptr, false, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.computed = evaluate_check(c.check);
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.match = r.computed == c.expected;
  return r;
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NONASSOC_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, unsigned threads) {
  if (threads == 0) threads = default_thread_count();
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, claims.size()));

  // Longest-running kinds first so the slow claims do not straggle.
  std::vector<std::size_t> order(claims.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto weight = [&](std::size_t i) {
    const auto& k = claims[i].check.at("kind");
    return (k == "cocycle_dim" || k == "cohomology_dim") ? 2 : (k == "shape_dim" || k == "span_equals") ? 1 : 0;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return weight(a) > weight(b); });

  std::vector<ClaimResult> results(claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < order.size();) results[order[i]] = run_claim(claims[order[i]]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.claim.id < b.claim.id; });
  return results;
}

std::filesystem::path default_manifest_path() {
  if (const char* env = std::getenv("NONASSOC_CLAIMS")) return env;
  return std::filesystem::path(NONASSOC_DATA_DIR) / "claims.json";
}

} // namespace nonassoc
