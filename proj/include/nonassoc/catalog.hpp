#ifndef NONASSOC_CATALOG_HPP
#define NONASSOC_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nonassoc/algebra.hpp"

namespace nonassoc {

class UnknownAlgebra : public std::invalid_argument {
public:
  UnknownAlgebra(const std::string& name, std::vector<std::string> suggestions);
  const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

private:
  std::vector<std::string> suggestions_;
};

struct CatalogEntry {
  std::string key;  // e.g. "Sab_bar" for the parameterized family
  std::size_t dim;
  bool parameterized;
  std::string provenance;
};

/// Every built-in algebra, in listing order.
const std::vector<CatalogEntry>& catalog_entries();

/// Looks an algebra up by name.  Parameterized families take concrete
/// rationals: "Sab_bar(2,1)", "Sab_sub(-1/2,3)".  Throws UnknownAlgebra.
Algebra catalog(std::string_view name);

/// Closest catalog names to a misspelt one.
std::vector<std::string> suggest_names(std::string_view name);

/// overline{W(2)} rewritten in the basis
/// (e1 + alpha e8, e2, e3, e4, e5 + beta e8, e6, e7, e8), in which the first
/// seven vectors span the codimension-1 subalgebra S_{alpha,beta}.
Algebra w2bar_adapted(const Rational& alpha, const Rational& beta);

/// The 1-based basis indices spanning each named subalgebra of W2(big).
struct NamedSpan {
  std::string name;
  std::vector<std::size_t> indices;
};
const std::vector<NamedSpan>& w2_subalgebra_spans();
/// Same for the codimension-1 coordinate subalgebras of W2bar.
const std::vector<NamedSpan>& w2bar_subalgebra_spans();

} // namespace nonassoc

#endif
