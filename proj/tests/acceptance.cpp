// One PASS/FAIL line per acceptance criterion.  Criteria 1-8 replay the
// claims manifest; criterion 9 runs the property suites.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nonassoc/catalog.hpp"
#include "nonassoc/claims.hpp"
#include "nonassoc/cohomology.hpp"
#include "nonassoc/conservative.hpp"
#include "oracles.hpp"

using namespace nonassoc;
using nlohmann::json;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "derivation algebras"},
    {2, "IW contraction tables"},
    {3, "conservative and terminal verdicts"},
    {4, "identity-space dimension tables"},
    {5, "explicit identity bases"},
    {6, "st identity table"},
    {7, "degree-5 shape spaces"},
    {8, "cohomology tables"},
    {9, "property suites"},
};

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

Algebra random_algebra(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  Algebra a("random", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rng() % 3 == 0) a.product.at(i, j, k) = d(rng);
  return a;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t target_rank) {
  std::uniform_int_distribution<int> d(-3, 3);
  if (target_rank == 0) return Matrix(rows, cols);
  Matrix left(rows, target_rank), right(target_rank, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < target_rank; ++k) left(r, k) = Rational(d(rng), 1 + (d(rng) + 3) % 3);
  for (std::size_t k = 0; k < target_rank; ++k)
    for (std::size_t c = 0; c < cols; ++c) right(k, c) = Rational(d(rng));
  return left * right;
}

void rank_nullity(Outcome& out) {
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    Matrix m = random_matrix(rng, rows, cols, rng() % (std::min(rows, cols) + 1));
    std::size_t r = rank(m);
    RowEchelonBasis k = nullspace(m);
    bool kernel_ok = std::all_of(k.rows.begin(), k.rows.end(), [&](const Vector& v) { return m * v == Vector(rows); });
    if (r + k.rank() != cols || r != oracle::rank(m) || !kernel_ok) {
      out.expect(false, "rank-nullity fails on random matrix #" + std::to_string(t));
      return;
    }
  }
}

void incremental_vs_batch(Outcome& out) {
  std::mt19937 rng(20261015);
  for (int t = 0; t < 1000; ++t) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 9;
    Matrix m = random_matrix(rng, rows, cols, rng() % (std::min(rows, cols) + 1));
    RankSink sink(cols);
    for (std::size_t r = 0; r < rows; ++r) sink.feed(m.row(r));
    if (sink.basis() != rref(m) || sink.nullspace() != nullspace(m)) {
      out.expect(false, "streaming and batch elimination disagree on random matrix #" + std::to_string(t));
      return;
    }
  }
}

void cocycles_vs_extensions(Outcome& out, const std::vector<Claim>& claims) {
  // Every degree-3 (algebra, P) pair of the cohomology claims, plus D2 and E2 in degree 4.
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::pair<std::string, json>> cases;
  for (const auto& c : claims) {
    const std::string kind = c.check.at("kind");
    if (kind != "cocycle_dim" && kind != "cohomology_dim") continue;
    const std::string alg = c.check.at("algebra");
    if (resolve_identity(c.check.at("identity")).degree() != 3) continue;
    if (seen.insert({alg, c.check.at("identity").dump()}).second) cases.emplace_back(alg, c.check.at("identity"));
  }
  for (const char* alg : {"D2", "E2"})
    for (const char* id : {"st4_1", "st4_2"}) cases.emplace_back(alg, id);
  cases.emplace_back("D2", "terminal");
  cases.emplace_back("E2", "terminal");

  for (const auto& [name, spec] : cases) {
    Algebra a = resolve_algebra(name);
    IdentityCombination P = resolve_identity(spec);
    auto brute = oracle::cocycle_dim_by_extension(a, P);
    std::string label = name + " with " + spec.dump();
    try {
      FormSpace z = cocycle_space(a, P);
      out.expect(brute && *brute == z.dimension, "cocycle dimension differs from extension oracle: " + label);
    } catch (const BaseViolatesIdentity&) {
      out.expect(!brute, "base rejected but extension oracle accepts: " + label);
    }
  }
  out.notes.push_back(std::to_string(cases.size()) + " cocycle cases");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries())
    if (!e.parameterized) names.push_back(e.key);
  for (const char* s : {"Sab_bar(-1,1)", "Sab_bar(0,0)", "Sab_bar(2,1)", "Sab_bar(0,-3)", "Sab_bar(1/2,-3/7)",
                        "Sab_sub(0,0)", "Sab_sub(-1,1)", "Sab_sub(2,1)"})
    names.push_back(s);
  return names;
}

void terminal_implies_conservative(Outcome& out) {
  for (const auto& name : catalog_names()) {
    Algebra a = catalog(name);
    if (!is_terminal(a)) continue;
    out.expect(verify_witness(a, terminal_F(a)) && conservative_solve(a).has_value(),
               name + " is terminal but not conservative");
  }
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    Algebra a = random_algebra(rng, 2 + t % 2);
    if (is_terminal(a)) out.expect(conservative_solve(a).has_value(), "random terminal algebra not conservative");
  }
}

void permutation_invariance(Outcome& out) {
  std::mt19937 rng(17);
  for (const auto& name : catalog_names()) {
    Algebra a = catalog(name);
    std::vector<std::size_t> perm(a.dim());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Algebra p = permute_basis(a, perm);
    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
      if (n == 4 && a.dim() > 5) continue;
      out.expect(identity_space(a, n).dimension == identity_space(p, n).dimension,
                 name + ": degree " + std::to_string(n) + " dimension changes under relabelling");
    }
  }
}

Outcome property_suites(const std::vector<Claim>& claims) {
  Outcome out;
  rank_nullity(out);
  incremental_vs_batch(out);
  cocycles_vs_extensions(out, claims);
  terminal_implies_conservative(out);
  permutation_invariance(out);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  std::filesystem::path manifest = argc > 1 ? std::filesystem::path(argv[1]) : default_manifest_path();
  std::vector<Claim> claims;
  try {
    claims = load_claims(manifest);
  } catch (const std::exception& e) {
    std::printf("FAIL manifest: %s\n", e.what());
    return 1;
  }

  auto results = run_claims(claims);
  std::map<int, std::vector<const ClaimResult*>> by_criterion;
  for (const auto& r : results) by_criterion[r.claim.criterion].push_back(&r);

  bool all = true;
  for (int criterion = 1; criterion <= 8; ++criterion) {
    const auto& group = by_criterion[criterion];
    std::size_t passed = 0;
    std::vector<std::string> failures;
    for (const auto* r : group) {
      if (r->match)
        ++passed;
      else
        failures.push_back(r->claim.id + ": expected " + r->claim.expected.dump() + ", computed " + r->computed.dump());
    }
    const bool ok = !group.empty() && failures.empty();
    all = all && ok;
    std::printf("%s criterion %d: %s (%zu/%zu claims)\n", ok ? "PASS" : "FAIL", criterion, kTitles.at(criterion).c_str(),
                passed, group.size());
    for (const auto& f : failures) std::printf("    %s\n", f.c_str());
  }

  auto t0 = std::chrono::steady_clock::now();
  Outcome props = property_suites(claims);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  all = all && props.ok;
  std::printf("%s criterion 9: %s (%.1fs)\n", props.ok ? "PASS" : "FAIL", kTitles.at(9).c_str(), secs);
  for (const auto& n : props.notes) std::printf("    %s\n", n.c_str());
  return all ? 0 : 1;
}
