#include "nonassoc/contraction.hpp"

#include "nonassoc/catalog.hpp"

namespace nonassoc {

ScaledBasis ScaledBasis::from_indices(std::size_t dim, const std::vector<std::size_t>& one_based_scaled) {
  ScaledBasis b;
  b.exponents.assign(dim, 0);
  for (auto i : one_based_scaled) {
    if (i == 0 || i > dim)
      throw std::out_of_range("scaled index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    b.exponents[i - 1] = 1;
  }
  return b;
}

std::vector<std::size_t> ScaledBasis::unscaled() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] == 0) out.push_back(i + 1);
  return out;
}

void LaurentConstant::add(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(exponent, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LaurentConstant::at_zero() const {
  if (!terms_.empty() && terms_.begin()->first < 0)
    throw ContractionError(ContractionError::Kind::NegativePower, "negative t-power in structure constant");
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational() : it->second;
}

std::vector<LaurentConstant> laurent_structure(const Algebra& a, const ScaledBasis& basis) {
  const std::size_t n = a.dim();
  if (basis.dim() != n) throw DimensionMismatch("scaled basis dimension does not match algebra");
  std::vector<LaurentConstant> mu(n * n * n);
  // E_i E_j = t^{s_i + s_j} sum_k c_ij^k e_k = sum_k c_ij^k t^{s_i + s_j - s_k} E_k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        mu[(i * n + j) * n + k].add(basis.exponents[i] + basis.exponents[j] - basis.exponents[k], a.c(i, j, k));
  return mu;
}

Algebra iw_contract(const Algebra& a, const std::vector<std::size_t>& scaled, std::string name) {
  const std::size_t n = a.dim();
  ScaledBasis basis = ScaledBasis::from_indices(n, scaled);

  Subspace kept = Subspace::of_basis_vectors(n, basis.unscaled());
  for (auto i : basis.unscaled())
    for (auto j : basis.unscaled())
      if (!kept.contains(a.basis_product(i - 1, j - 1))) {
        std::string msg = "not a subalgebra: e" + std::to_string(i) + " e" + std::to_string(j) + " leaves span of unscaled vectors";
        throw ContractionError(ContractionError::Kind::NotSubalgebra, msg);
      }

  auto mu = laurent_structure(a, basis);
  Algebra out(name.empty() ? a.name + "|contracted" : std::move(name), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& m = mu[(i * n + j) * n + k];
        if (m.is_zero()) continue;
        if (m.min_exponent() < 0)
          throw ContractionError(ContractionError::Kind::NegativePower,
                                 "negative t-power at e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
                                     " -> e" + std::to_string(k + 1));
        out.product.at(i, j, k) = m.at_zero();
      }
  return out;
}

std::vector<std::string> table_differences(const Algebra& expected, const Algebra& computed) {
  std::vector<std::string> out;
  if (expected.dim() != computed.dim()) {
    out.push_back("dimension " + std::to_string(expected.dim()) + " vs " + std::to_string(computed.dim()));
    return out;
  }
  const std::size_t n = expected.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (expected.c(i, j, k) != computed.c(i, j, k))
          out.push_back("e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " [e" + std::to_string(k + 1) +
                        "]: expected " + expected.c(i, j, k).str() + ", computed " + computed.c(i, j, k).str());
  return out;
}

std::vector<ContractionCheck> contraction_chain_check(const std::vector<std::pair<Rational, Rational>>& sab_params) {
  struct Job {
    std::string target;
    std::string source_name;
    Algebra source;
    std::vector<std::size_t> scaled;
  };
  std::vector<Job> jobs;
  const Algebra w2 = catalog("W2(big)");
  const Algebra w2bar = catalog("W2bar");
  jobs.push_back({"W2bar", "W2(big)", w2, {2}});
  jobs.push_back({"S1bar", "W2bar", w2bar, {1}});
  jobs.push_back({"S5bar", "W2bar", w2bar, {5}});
  for (const auto& [a, b] : sab_params) {
    std::string args = "(" + a.str() + "," + b.str() + ")";
    jobs.push_back({"Sab_bar" + args, "W2bar_adapted" + args, w2bar_adapted(a, b), {8}});
  }
  jobs.push_back({"W2hat", "W2(big)", w2, {7, 8}});
  jobs.push_back({"W2hathat", "W2(big)", w2, {5, 6, 7, 8}});
  jobs.push_back({"W2tilde", "W2(big)", w2, {3, 4, 5, 6, 7, 8}});
  jobs.push_back({"W2tildetilde", "W2(big)", w2, {2, 3, 4, 5, 6, 7, 8}});

  std::vector<ContractionCheck> out;
  for (const auto& job : jobs) {
    ContractionCheck rec{job.target, job.source_name, job.scaled, false, {}};
    try {
      Algebra got = iw_contract(job.source, job.scaled, job.target);
      rec.mismatches = table_differences(catalog(job.target), got);
    } catch (const std::exception& e) {
      rec.mismatches.push_back(e.what());
    }
    rec.matched = rec.mismatches.empty();
    out.push_back(std::move(rec));
  }
  return out;
}

} // namespace nonassoc
