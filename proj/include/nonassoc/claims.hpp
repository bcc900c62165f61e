#ifndef NONASSOC_CLAIMS_HPP
#define NONASSOC_CLAIMS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonassoc/algebra.hpp"
#include "nonassoc/identity.hpp"

namespace nonassoc {

/// A catalog name such as "W2bar" or "Sab_bar(0,-3)", or a path to an
/// algebra JSON file.
Algebra resolve_algebra(const std::string& spec);

/// Identity specifications used by the claims manifest and the CLI:
///   "2*st3_1 - 3*st3_2"                       expression over named identities
///   {"degree": 3, "terms": [["1", "x1(x2x3)"], ...]}  human-readable terms
///   {"degree": 3, "terms": [{"shape":..., "perm":..., "coef":...}]}  file format
///   {"w14_alternating": k}                    alternating sum over the right comb with x_k last
///   {"combination": [["c", spec], ...]}        rational combination of specs
/// A string naming an existing file is loaded as an identity file.
IdentityCombination resolve_identity(const nlohmann::json& spec);

/// sum over permutations s of the other four variables of
/// sign(s) x_{s1}(x_{s2}(x_{s3}(x_{s4} x_k))), k 1-based.
IdentityCombination w14_alternating(std::size_t k);

struct Claim {
  std::string id;
  int criterion = 0;
  std::string scope;
  std::string source;
  std::string command;
  nlohmann::json check;
  nlohmann::json expected;
};

struct ClaimResult {
  Claim claim;
  nlohmann::json computed;
  bool match = false;
  double seconds = 0;
};

std::vector<Claim> load_claims(const std::filesystem::path& manifest);

/// Evaluates one check object; failures of the check itself (for example a
/// base algebra that violates P) are reported as string values, not thrown.
nlohmann::json evaluate_check(const nlohmann::json& check);

ClaimResult run_claim(const Claim& c);

/// Runs the claims on up to `threads` worker threads (0: hardware
/// concurrency, capped by NONASSOC_THREADS).  Results are sorted by id.
std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, unsigned threads = 0);

unsigned default_thread_count();

std::filesystem::path default_manifest_path();

} // namespace nonassoc

#endif
