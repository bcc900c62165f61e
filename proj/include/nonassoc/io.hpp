#ifndef NONASSOC_IO_HPP
#define NONASSOC_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nonassoc/algebra.hpp"
#include "nonassoc/identity.hpp"

namespace nonassoc {

/// Malformed input.  The message names the line (syntax errors) or the JSON
/// field path (schema errors), e.g. "/products/2/v/5: bad rational".
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// {"name": str, "dim": n, "products": [{"i": 1, "j": 2, "v": ["p/q", ...]}]}
/// Only nonzero products are listed, in (i, j) order, indices 1-based.
nlohmann::ordered_json products_to_json(const BilinearMap& m);
nlohmann::ordered_json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const nlohmann::json& j);

/// {"degree": n, "terms": [{"shape": "(xx)x", "perm": [1, 2, 3], "coef": "p/q"}]}
nlohmann::ordered_json identity_to_json(const IdentityCombination& c);
IdentityCombination identity_from_json(const nlohmann::json& j);

/// Parses text, mapping syntax errors to "line L, column C: ..." messages.
nlohmann::json parse_json(const std::string& text);
nlohmann::json read_json_file(const std::filesystem::path& p);

Algebra load_algebra(const std::filesystem::path& p);
/// Canonical form: two-space indentation, trailing newline.
std::string dump_canonical(const nlohmann::ordered_json& j);
void save_algebra(const Algebra& a, const std::filesystem::path& p);

IdentityCombination load_identity(const std::filesystem::path& p);

} // namespace nonassoc

#endif
