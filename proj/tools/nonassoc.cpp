#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nonassoc/catalog.hpp"
#include "nonassoc/claims.hpp"
#include "nonassoc/cohomology.hpp"
#include "nonassoc/conservative.hpp"
#include "nonassoc/contraction.hpp"
#include "nonassoc/io.hpp"

using namespace nonassoc;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string vector_str(std::span<const Rational> v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const Rational& c = v[k];
    Rational mag = c.sign() < 0 ? -c : c;
    s += s.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    if (!mag.is_one()) s += mag.str() + " ";
    s += "e" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

std::string tuple_str(std::span<const std::size_t> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", e" : "e") + std::to_string(t[i] + 1);
  return s + ")";
}

void print_table(const BilinearMap& m, const std::string& op) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      auto v = m.on_basis(i, j);
      if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) continue;
      std::cout << "e" << i + 1 << op << "e" << j + 1 << " = " << vector_str(v) << "\n";
    }
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size() || v < 1) throw std::invalid_argument("bad index \"" + item + "\" in --scale");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

IdentityCombination identity_arg(const std::string& text) { return resolve_identity(json(text)); }

int cmd_catalog() {
  std::cout << std::left << std::setw(16) << "name" << std::setw(5) << "dim" << "source\n";
  for (const auto& e : catalog_entries()) {
    std::string name = e.parameterized ? e.key + "(a,b)" : e.key;
    std::cout << std::setw(16) << name << std::setw(5) << e.dim << e.provenance << (e.parameterized ? " [parameterized]" : "")
              << "\n";
  }
  return 0;
}

int cmd_show(const std::string& spec, bool as_json) {
  Algebra a = resolve_algebra(spec);
  if (as_json) {
    std::cout << dump_canonical(algebra_to_json(a));
    return 0;
  }
  std::cout << a.name << " (dim " << a.dim() << ")\n";
  print_table(a.product, " ");
  return 0;
}

int cmd_derivations(const std::string& spec, bool show_basis) {
  Algebra a = resolve_algebra(spec);
  DerivationAlgebra d = derivation_algebra(a);
  std::cout << "dim Der(" << a.name << ") = " << d.dimension << "\n";
  if (show_basis)
    for (std::size_t b = 0; b < d.basis.size(); ++b) {
      std::cout << "D" << b + 1 << ":\n";
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vector col(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) col[i] = d.basis[b](i, j);
        std::cout << "  e" << j + 1 << " -> " << vector_str(col) << "\n";
      }
    }
  return 0;
}

int cmd_contract(const std::string& spec, const std::string& scale, const std::string& name, bool as_json) {
  Algebra a = resolve_algebra(spec);
  Algebra c = iw_contract(a, parse_index_list(scale), name);
  if (as_json) {
    std::cout << dump_canonical(algebra_to_json(c));
    return 0;
  }
  std::cout << c.name << " (dim " << c.dim() << ")\n";
  print_table(c.product, " ");
  for (const auto& e : catalog_entries()) {
    if (e.parameterized || e.dim != c.dim()) continue;
    if (catalog(e.key).same_table(c)) std::cout << "matches catalog entry " << e.key << "\n";
  }
  return 0;
}

void print_space(const IdentitySpace& s, bool as_json, const std::string& label) {
  if (as_json) {
    ordered_json j;
    j["dimension"] = s.dimension;
    j["basis"] = ordered_json::array();
    for (const auto& b : s.basis) j["basis"].push_back(identity_to_json(b));
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << label << " = " << s.dimension << "\n";
  for (std::size_t i = 0; i < s.basis.size(); ++i) std::cout << "  " << i + 1 << ". " << s.basis[i].str() << "\n";
}

int cmd_identities(const std::string& spec, std::size_t degree, bool as_json) {
  Algebra a = resolve_algebra(spec);
  if (degree == 5 && a.dim() >= 8 && !as_json)
    std::cerr << "note: the full degree-5 system has 1680 columns and can take a long time\n";
  print_space(identity_space(a, degree), as_json, "dim S^" + std::to_string(degree) + "(" + a.name + ")");
  return 0;
}

int cmd_shape_space(const std::string& spec, std::size_t degree, std::size_t shape, bool as_json) {
  Algebra a = resolve_algebra(spec);
  const auto& shapes = shapes_of_degree(degree);
  if (shape < 1 || shape > shapes.size())
    throw std::out_of_range("shape index must be in 1.." + std::to_string(shapes.size()));
  if (!as_json) std::cout << "w" << shape << " = " << shapes[shape - 1].str() << "\n";
  print_space(shape_identity_space(a, degree, shape), as_json, "dim Z^" + std::to_string(shape) + "(" + a.name + ")");
  return 0;
}

int cmd_check(const std::string& spec, const std::string& identity) {
  Algebra a = resolve_algebra(spec);
  IdentityCombination c = identity_arg(identity);
  auto bad = find_violation(a, c);
  if (!bad) {
    std::cout << a.name << " satisfies " << identity << "\n";
    return 0;
  }
  std::vector<std::size_t> t = *bad;
  std::cout << a.name << " does not satisfy " << identity << "\n";
  std::cout << "first violation at (x1, ..., x" << t.size() << ") = " << tuple_str(t) << "\n";
  return 0;
}

int cmd_conservative(const std::string& spec, bool as_json) {
  Algebra a = resolve_algebra(spec);
  auto w = conservative_solve(a);
  if (as_json) {
    ordered_json j;
    j["algebra"] = a.name;
    j["conservative"] = w.has_value();
    if (w) {
      j["freedom"] = w->freedom;
      j["F"] = {{"name", a.name + " F"}, {"dim", a.dim()}, {"products", products_to_json(w->F)}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (!w) {
    std::cout << a.name << " is not conservative\n";
    return 0;
  }
  std::cout << a.name << " is conservative\n";
  std::cout << "homogeneous solution dimension: " << w->freedom << "\n";
  std::cout << "associated multiplication F (free variables zero):\n";
  print_table(w->F, "*");
  return 0;
}

int cmd_terminal(const std::string& spec) {
  Algebra a = resolve_algebra(spec);
  auto v = terminal_violation(a);
  std::cout << "terminal: " << (v ? "false" : "true") << "\n";
  if (v) {
    std::cout << "first violation at (a, b, x, y) = " << tuple_str(*v) << "\n";
    std::cout << "residual: " << vector_str(conservative_residual(a, terminal_F(a), *v)) << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string& spec, const std::vector<std::string>& identities) {
  Algebra a = resolve_algebra(spec);
  const std::size_t b = coborder_space(a).dimension;
  std::cout << std::left << std::setw(22) << "identity" << std::setw(8) << "dim B2" << std::setw(8) << "dim Z2" << "dim H2\n";
  for (const auto& id : identities) {
    std::cout << std::setw(22) << id << std::setw(8) << b;
    try {
      CohomologyReport r = cohomology(a, identity_arg(id));
      std::cout << std::setw(8) << r.dim_Z;
      if (r.contained)
        std::cout << r.dim_H << "\n";
      else
        std::cout << "B2 not in Z2: coborder of e" << *r.witness + 1 << "* fails\n";
    } catch (const BaseViolatesIdentity&) {
      std::cout << std::setw(8) << "-" << "- (base does not satisfy P)\n";
    }
  }
  return 0;
}

int cmd_reproduce(const std::string& scope, bool as_json, const std::string& manifest, unsigned threads) {
  std::vector<Claim> all = load_claims(manifest.empty() ? default_manifest_path() : std::filesystem::path(manifest));
  std::vector<Claim> chosen;
  for (auto& c : all)
    if (scope == "all" || c.scope == scope) chosen.push_back(std::move(c));
  if (chosen.empty()) throw std::invalid_argument("no claims in scope \"" + scope + "\"");
  auto results = run_claims(chosen, threads);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.match;

  if (as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : results)
      j.push_back({{"id", r.claim.id},
                   {"source", r.claim.source},
                   {"expected", r.claim.expected},
                   {"computed", r.computed},
                   {"match", r.match},
                   {"seconds", r.seconds}});
    std::cout << ordered_json{{"scope", scope}, {"passed", passed}, {"total", results.size()}, {"claims", j}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.match ? "PASS " : "FAIL ") << std::left << std::setw(48) << r.claim.id << " expected "
                << r.claim.expected.dump() << ", computed " << r.computed.dump() << "  [" << std::fixed
                << std::setprecision(2) << r.seconds << "s]\n";
      if (!r.match) std::cout << "     " << r.claim.source << "\n";
    }
    std::cout << passed << "/" << results.size() << " claims match\n";
  }
  return passed == results.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional nonassociative algebras"};
  app.require_subcommand(1);
  std::string alg, scale, name, identity, scope = "all", manifest;
  std::vector<std::string> identities;
  std::size_t degree = 0, shape = 0;
  unsigned threads = 0;
  bool as_json = false, show_basis = false;

  app.add_subcommand("catalog", "List built-in algebras");
  auto* show = app.add_subcommand("show", "Print a multiplication table");
  auto* der = app.add_subcommand("derivations", "Dimension of the derivation algebra");
  auto* contract = app.add_subcommand("contract", "Inonu-Wigner contraction scaling the given basis vectors");
  auto* ids = app.add_subcommand("identities", "Space of multilinear identities of one degree");
  auto* shp = app.add_subcommand("shape-space", "Identities spanned by the relabellings of one bracketing");
  auto* chk = app.add_subcommand("check", "Test a multilinear identity");
  auto* cons = app.add_subcommand("conservative", "Solve for an associated multiplication");
  auto* term = app.add_subcommand("terminal", "Test the terminal identity");
  auto* coh = app.add_subcommand("cohomology", "Coborders, cocycles and H^2 with respect to identities");
  auto* rep = app.add_subcommand("reproduce", "Check every registered claim");

  for (auto* sub : {show, der, contract, ids, shp, chk, cons, term, coh})
    sub->add_option("algebra", alg, "Catalog name or algebra JSON file")->required();
  for (auto* sub : {show, contract, ids, shp, cons}) sub->add_flag("--json", as_json, "JSON output");
  der->add_flag("--basis", show_basis, "Print a basis of derivations");
  contract->add_option("--scale", scale, "Comma-separated 1-based indices of scaled basis vectors")->required();
  contract->add_option("--name", name, "Name of the result");
  ids->add_option("--degree", degree, "Degree (2..5)")->required();
  shp->add_option("--degree", degree, "Degree (2..5)")->default_val(5);
  shp->add_option("--shape", shape, "1-based shape index")->required();
  chk->add_option("--identity", identity, "st3_1, terminal, 2*st3_1-3*st3_2, or an identity JSON file")->required();
  coh->add_option("--identity", identities, "One or more identities")->required();
  rep->add_option("scope", scope, "all, derivations, contractions, conservative, identities, st, shapes, cohomology");
  rep->add_flag("--json", as_json, "JSON output");
  rep->add_option("--claims", manifest, "Claims manifest");
  rep->add_option("--threads", threads, "Worker threads (default: hardware, capped by NONASSOC_THREADS)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("catalog")) return cmd_catalog();
    if (*show) return cmd_show(alg, as_json);
    if (*der) return cmd_derivations(alg, show_basis);
    if (*contract) return cmd_contract(alg, scale, name, as_json);
    if (*ids) return cmd_identities(alg, degree, as_json);
    if (*shp) return cmd_shape_space(alg, degree, shape, as_json);
    if (*chk) return cmd_check(alg, identity);
    if (*cons) return cmd_conservative(alg, as_json);
    if (*term) return cmd_terminal(alg);
    if (*coh) return cmd_cohomology(alg, identities);
    if (*rep) return cmd_reproduce(scope, as_json, manifest, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
