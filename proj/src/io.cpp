#include "nonassoc/io.hpp"

#include <fstream>
#include <sstream>

namespace nonassoc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw FormatError((path.empty() ? std::string("/") : path) + ": " + why);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "object expected");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t positive_index(const json& v, const std::string& path, std::size_t limit) {
  if (!v.is_number_integer()) fail(path, "integer expected");
  long long x = v.get<long long>();
  if (x < 1 || static_cast<std::size_t>(x) > limit)
    fail(path, "index " + std::to_string(x) + " outside 1.." + std::to_string(limit));
  return static_cast<std::size_t>(x);
}

Rational rational_field(const json& v, const std::string& path) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, std::string("bad rational: ") + e.what());
  }
  fail(path, "rational expected as \"p/q\" string or integer");
}

} // namespace

ordered_json products_to_json(const BilinearMap& m) {
  ordered_json products = ordered_json::array();
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto col = m.on_basis(i, j);
      bool nonzero = std::any_of(col.begin(), col.end(), [](const Rational& x) { return !x.is_zero(); });
      if (!nonzero) continue;
      ordered_json v = ordered_json::array();
      for (const auto& x : col) v.push_back(x.str());
      products.push_back({{"i", i + 1}, {"j", j + 1}, {"v", v}});
    }
  return products;
}

ordered_json algebra_to_json(const Algebra& a) {
  ordered_json j;
  j["name"] = a.name;
  j["dim"] = a.dim();
  j["products"] = products_to_json(a.product);
  return j;
}

Algebra algebra_from_json(const json& j) {
  const json& name = field(j, "", "name");
  if (!name.is_string()) fail("/name", "string expected");
  const json& dim = field(j, "", "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 0) fail("/dim", "nonnegative integer expected");
  const std::size_t n = dim.get<std::size_t>();
  const json& products = field(j, "", "products");
  if (!products.is_array()) fail("/products", "array expected");

  Algebra a(name.get<std::string>(), n);
  std::vector<bool> seen(n * n, false);
  for (std::size_t r = 0; r < products.size(); ++r) {
    const std::string at = "/products/" + std::to_string(r);
    const json& entry = products[r];
    const std::size_t i = positive_index(field(entry, at, "i"), at + "/i", n);
    const std::size_t jj = positive_index(field(entry, at, "j"), at + "/j", n);
    if (seen[(i - 1) * n + jj - 1]) fail(at, "duplicate product e" + std::to_string(i) + " e" + std::to_string(jj));
    seen[(i - 1) * n + jj - 1] = true;
    const json& v = field(entry, at, "v");
    if (!v.is_array()) fail(at + "/v", "array expected");
    if (v.size() != n) fail(at + "/v", "length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) a.product.at(i - 1, jj - 1, k) = rational_field(v[k], at + "/v/" + std::to_string(k));
  }
  return a;
}

ordered_json identity_to_json(const IdentityCombination& c) {
  ordered_json j;
  j["degree"] = c.degree();
  ordered_json terms = ordered_json::array();
  for (const auto& [coef, m] : c.terms()) {
    ordered_json perm = ordered_json::array();
    for (auto p : m.perm) perm.push_back(p + 1);
    terms.push_back({{"shape", m.shape.str()}, {"perm", perm}, {"coef", coef.str()}});
  }
  j["terms"] = terms;
  return j;
}

IdentityCombination identity_from_json(const json& j) {
  const json& deg = field(j, "", "degree");
  if (!deg.is_number_integer()) fail("/degree", "integer expected");
  const long long d = deg.get<long long>();
  if (d < 2 || d > static_cast<long long>(kMaxDegree)) fail("/degree", "degree outside 2.." + std::to_string(kMaxDegree));
  const std::size_t n = static_cast<std::size_t>(d);
  const json& terms = field(j, "", "terms");
  if (!terms.is_array()) fail("/terms", "array expected");

  IdentityCombination c(n);
  for (std::size_t r = 0; r < terms.size(); ++r) {
    const std::string at = "/terms/" + std::to_string(r);
    const json& t = terms[r];
    const json& shape_text = field(t, at, "shape");
    if (!shape_text.is_string()) fail(at + "/shape", "string expected");
    BracketShape shape;
    try {
      shape = BracketShape::parse(shape_text.get<std::string>());
    } catch (const std::exception& e) {
      fail(at + "/shape", e.what());
    }
    if (shape.degree() != n) fail(at + "/shape", "shape has " + std::to_string(shape.degree()) + " leaves");
    const json& perm = field(t, at, "perm");
    if (!perm.is_array() || perm.size() != n) fail(at + "/perm", "array of " + std::to_string(n) + " indices expected");
    std::vector<std::size_t> p;
    std::vector<bool> used(n, false);
    for (std::size_t q = 0; q < n; ++q) {
      std::size_t v = positive_index(perm[q], at + "/perm/" + std::to_string(q), n);
      if (used[v - 1]) fail(at + "/perm", "not a permutation");
      used[v - 1] = true;
      p.push_back(v - 1);
    }
    c.add({shape, p}, rational_field(field(t, at, "coef"), at + "/coef"));
  }
  return c;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw FormatError(p.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(p.string() + ": " + e.what());
  }
}

Algebra load_algebra(const std::filesystem::path& p) {
  json j = read_json_file(p);
  try {
    return algebra_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(p.string() + ": " + e.what());
  }
}

std::string dump_canonical(const ordered_json& j) { return j.dump(2) + "\n"; }

void save_algebra(const Algebra& a, const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw FormatError(p.string() + ": cannot write");
  out << dump_canonical(algebra_to_json(a));
}

IdentityCombination load_identity(const std::filesystem::path& p) {
  json j = read_json_file(p);
  try {
    return identity_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(p.string() + ": " + e.what());
  }
}

} // namespace nonassoc
