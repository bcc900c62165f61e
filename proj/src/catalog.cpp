#include "nonassoc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace nonassoc {

UnknownAlgebra::UnknownAlgebra(const std::string& name, std::vector<std::string> suggestions)
    : std::invalid_argument([&] {
        std::string msg = "unknown algebra \"" + name + "\"";
        if (!suggestions.empty()) {
          msg += "; did you mean";
          for (std::size_t i = 0; i < suggestions.size(); ++i) msg += (i ? ", " : " ") + suggestions[i];
          msg += "?";
        }
        return msg;
      }()),
      suggestions_(std::move(suggestions)) {}

namespace {

struct Term {
  int k;
  Rational c;
};

// One nonzero cell of a multiplication table: e_i e_j = sum c e_k (1-based).
struct Cell {
  int i;
  int j;
  std::vector<Term> terms;
};

Algebra from_table(std::string name, std::size_t dim, const std::vector<Cell>& cells) {
  Algebra a(std::move(name), dim);
  for (const auto& cell : cells)
    for (const auto& t : cell.terms) a.product.at(cell.i - 1, cell.j - 1, t.k - 1) += t.c;
  return a;
}

// Tables as printed (row e_i, column e_j).
Algebra w2_big() {
  return from_table("W2(big)", 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, 1}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {2, 3, {{1, 2}}},
      {2, 4, {{3, 1}}},
      {2, 6, {{5, -1}}},
      {2, 7, {{8, 1}}},
      {3, 1, {{3, -2}}},
      {3, 2, {{1, -1}}},
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}}},
      {3, 8, {{7, -1}}},
      {5, 1, {{1, -2}}},
      {5, 2, {{2, -3}}},
      {5, 3, {{3, -1}}},
      {5, 5, {{5, -2}}},
      {5, 6, {{6, -1}}},
      {5, 7, {{7, -1}}},
      {5, 8, {{8, -2}}},
      {6, 1, {{3, 2}}},
      {6, 2, {{1, 1}}},
      {6, 3, {{4, 3}}},
      {6, 5, {{6, -1}}},
      {6, 8, {{7, 1}}},
      {7, 1, {{3, 2}}},
      {7, 2, {{1, 1}}},
      {7, 3, {{4, 3}}},
      {7, 5, {{6, -1}}},
      {7, 8, {{7, 1}}},
      {8, 2, {{2, 1}}},
      {8, 3, {{3, -1}}},
      {8, 4, {{4, -2}}},
      {8, 6, {{6, -1}}},
      {8, 7, {{7, -1}}},
    });
}

Algebra w2_bar() {
  return from_table("W2bar", 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, 1}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {3, 1, {{3, -2}}},
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}}},
      {3, 8, {{7, -1}}},
      {5, 1, {{1, -2}}},
      {5, 2, {{2, -3}}},
      {5, 3, {{3, -1}}},
      {5, 5, {{5, -2}}},
      {5, 6, {{6, -1}}},
      {5, 7, {{7, -1}}},
      {5, 8, {{8, -2}}},
      {6, 1, {{3, 2}}},
      {6, 3, {{4, 3}}},
      {6, 5, {{6, -1}}},
      {6, 8, {{7, 1}}},
      {7, 1, {{3, 2}}},
      {7, 3, {{4, 3}}},
      {7, 5, {{6, -1}}},
      {7, 8, {{7, 1}}},
      {8, 2, {{2, 1}}},
      {8, 3, {{3, -1}}},
      {8, 4, {{4, -2}}},
      {8, 6, {{6, -1}}},
      {8, 7, {{7, -1}}},
    });
}

Algebra s1_bar() {
  return from_table("S1bar", 8,
    {
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}}},
      {3, 8, {{7, -1}}},
      {5, 1, {{1, -2}}},
      {5, 2, {{2, -3}}},
      {5, 3, {{3, -1}}},
      {5, 5, {{5, -2}}},
      {5, 6, {{6, -1}}},
      {5, 7, {{7, -1}}},
      {5, 8, {{8, -2}}},
      {6, 3, {{4, 3}}},
      {6, 5, {{6, -1}}},
      {6, 8, {{7, 1}}},
      {7, 3, {{4, 3}}},
      {7, 5, {{6, -1}}},
      {7, 8, {{7, 1}}},
      {8, 2, {{2, 1}}},
      {8, 3, {{3, -1}}},
      {8, 4, {{4, -2}}},
      {8, 6, {{6, -1}}},
      {8, 7, {{7, -1}}},
    });
}

Algebra s5_bar() {
  return from_table("S5bar", 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, 1}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {3, 1, {{3, -2}}},
      {3, 3, {{4, -3}}},
      {3, 8, {{7, -1}}},
      {6, 1, {{3, 2}}},
      {6, 3, {{4, 3}}},
      {6, 8, {{7, 1}}},
      {7, 1, {{3, 2}}},
      {7, 3, {{4, 3}}},
      {7, 8, {{7, 1}}},
      {8, 2, {{2, 1}}},
      {8, 3, {{3, -1}}},
      {8, 4, {{4, -2}}},
      {8, 6, {{6, -1}}},
      {8, 7, {{7, -1}}},
    });
}

Algebra sab_bar(const Rational& a, const Rational& b, std::string name) {
  return from_table(std::move(name), 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, (-3+a)}}},
      {1, 3, {{3, (1-a)}}},
      {1, 4, {{4, (3-2 * a)}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, (1-a)}}},
      {1, 7, {{7, (1-a)}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {3, 1, {{3, -2}, {7, -a}}},
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}, {7, -b}}},
      {5, 1, {{1, -2}}},
      {5, 2, {{2, (-3+b)}}},
      {5, 3, {{3, (-1-b)}}},
      {5, 4, {{4, -2 * b}}},
      {5, 5, {{5, -2}}},
      {5, 6, {{6, (-1-b)}}},
      {5, 7, {{7, (-1-b)}}},
      {5, 8, {{8, -2}}},
      {6, 1, {{3, 2}, {7, a}}},
      {6, 3, {{4, 3}}},
      {6, 5, {{6, -1}, {7, b}}},
      {7, 1, {{3, 2}, {7, a}}},
      {7, 3, {{4, 3}}},
      {7, 5, {{6, -1}, {7, b}}},
    });
}

Algebra sab_adapted(const Rational& a, const Rational& b, std::string name) {
  return from_table(std::move(name), 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, (-3+a)}}},
      {1, 3, {{3, (1-a)}}},
      {1, 4, {{4, (3-2 * a)}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, (1-a)}}},
      {1, 7, {{7, (1-a)}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {3, 1, {{3, -2}, {7, -a}}},
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}, {7, -b}}},
      {3, 8, {{7, -1}}},
      {5, 1, {{1, -2}}},
      {5, 2, {{2, (-3+b)}}},
      {5, 3, {{3, (-1-b)}}},
      {5, 4, {{4, -2 * b}}},
      {5, 5, {{5, -2}}},
      {5, 6, {{6, (-1-b)}}},
      {5, 7, {{7, (-1-b)}}},
      {5, 8, {{8, -2}}},
      {6, 1, {{3, 2}, {7, a}}},
      {6, 3, {{4, 3}}},
      {6, 5, {{6, -1}, {7, b}}},
      {6, 8, {{7, 1}}},
      {7, 1, {{3, 2}, {7, a}}},
      {7, 3, {{4, 3}}},
      {7, 5, {{6, -1}, {7, b}}},
      {7, 8, {{7, 1}}},
      {8, 2, {{2, 1}}},
      {8, 3, {{3, -1}}},
      {8, 4, {{4, -2}}},
      {8, 6, {{6, -1}}},
      {8, 7, {{7, -1}}},
    });
}

Algebra w2_hat() {
  return from_table("W2hat", 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, 1}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {2, 3, {{1, 2}}},
      {2, 4, {{3, 1}}},
      {2, 6, {{5, -1}}},
      {2, 7, {{8, 1}}},
      {3, 1, {{3, -2}}},
      {3, 2, {{1, -1}}},
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}}},
      {3, 8, {{7, -1}}},
      {5, 1, {{1, -2}}},
      {5, 2, {{2, -3}}},
      {5, 3, {{3, -1}}},
      {5, 5, {{5, -2}}},
      {5, 6, {{6, -1}}},
      {5, 7, {{7, -1}}},
      {5, 8, {{8, -2}}},
      {6, 1, {{3, 2}}},
      {6, 2, {{1, 1}}},
      {6, 3, {{4, 3}}},
      {6, 5, {{6, -1}}},
      {6, 8, {{7, 1}}},
    });
}

Algebra w2_hathat() {
  return from_table("W2hathat", 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, 1}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {2, 3, {{1, 2}}},
      {2, 4, {{3, 1}}},
      {2, 6, {{5, -1}}},
      {2, 7, {{8, 1}}},
      {3, 1, {{3, -2}}},
      {3, 2, {{1, -1}}},
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}}},
      {3, 8, {{7, -1}}},
    });
}

Algebra w2_tilde() {
  return from_table("W2tilde", 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, 1}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {2, 4, {{3, 1}}},
      {2, 6, {{5, -1}}},
      {2, 7, {{8, 1}}},
      {3, 1, {{3, -2}}},
      {6, 1, {{3, 2}}},
      {7, 1, {{3, 2}}},
    });
}

Algebra w2_tildetilde() {
  return from_table("W2tildetilde", 8,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, 1}}},
      {1, 8, {{8, -1}}},
      {2, 1, {{2, 3}}},
      {3, 1, {{3, -2}}},
      {6, 1, {{3, 2}}},
      {7, 1, {{3, 2}}},
    });
}

// span(e1, e3, e4, e5, e6, e7, e8) of W2(big), renumbered 1..7
Algebra sub_b2() {
  return from_table("B2", 7,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, 1}}},
      {1, 3, {{3, 3}}},
      {1, 4, {{4, -1}}},
      {1, 5, {{5, 1}}},
      {1, 6, {{6, 1}}},
      {1, 7, {{7, -1}}},
      {2, 1, {{2, -2}}},
      {2, 2, {{3, -3}}},
      {2, 4, {{5, 1}}},
      {2, 7, {{6, -1}}},
      {4, 1, {{1, -2}}},
      {4, 2, {{2, -1}}},
      {4, 4, {{4, -2}}},
      {4, 5, {{5, -1}}},
      {4, 6, {{6, -1}}},
      {4, 7, {{7, -2}}},
      {5, 1, {{2, 2}}},
      {5, 2, {{3, 3}}},
      {5, 4, {{5, -1}}},
      {5, 7, {{6, 1}}},
      {6, 1, {{2, 2}}},
      {6, 2, {{3, 3}}},
      {6, 4, {{5, -1}}},
      {6, 7, {{6, 1}}},
      {7, 2, {{2, -1}}},
      {7, 3, {{3, -2}}},
      {7, 5, {{5, -1}}},
      {7, 6, {{6, -1}}},
    });
}

// span(e1, e2, e3, e4, e5, e6) of W2(big), renumbered 1..6
Algebra sub_w2() {
  return from_table("W2", 6,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {1, 5, {{5, -1}}},
      {1, 6, {{6, 1}}},
      {2, 1, {{2, 3}}},
      {2, 3, {{1, 2}}},
      {2, 4, {{3, 1}}},
      {2, 6, {{5, -1}}},
      {3, 1, {{3, -2}}},
      {3, 2, {{1, -1}}},
      {3, 3, {{4, -3}}},
      {3, 5, {{6, 1}}},
      {5, 1, {{1, -2}}},
      {5, 2, {{2, -3}}},
      {5, 3, {{3, -1}}},
      {5, 5, {{5, -2}}},
      {5, 6, {{6, -1}}},
      {6, 1, {{3, 2}}},
      {6, 2, {{1, 1}}},
      {6, 3, {{4, 3}}},
      {6, 5, {{6, -1}}},
    });
}

// span(e1, e3, e4, e5, e6) of W2(big), renumbered 1..5
Algebra sub_c2() {
  return from_table("C2", 5,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, 1}}},
      {1, 3, {{3, 3}}},
      {1, 4, {{4, -1}}},
      {1, 5, {{5, 1}}},
      {2, 1, {{2, -2}}},
      {2, 2, {{3, -3}}},
      {2, 4, {{5, 1}}},
      {4, 1, {{1, -2}}},
      {4, 2, {{2, -1}}},
      {4, 4, {{4, -2}}},
      {4, 5, {{5, -1}}},
      {5, 1, {{2, 2}}},
      {5, 2, {{3, 3}}},
      {5, 4, {{5, -1}}},
    });
}

// span(e1, e2, e3, e4) of W2(big), renumbered 1..4
Algebra sub_s2() {
  return from_table("S2", 4,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {1, 3, {{3, 1}}},
      {1, 4, {{4, 3}}},
      {2, 1, {{2, 3}}},
      {2, 3, {{1, 2}}},
      {2, 4, {{3, 1}}},
      {3, 1, {{3, -2}}},
      {3, 2, {{1, -1}}},
      {3, 3, {{4, -3}}},
    });
}

// span(e1, e3, e4) of W2(big), renumbered 1..3
Algebra sub_d2() {
  return from_table("D2", 3,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, 1}}},
      {1, 3, {{3, 3}}},
      {2, 1, {{2, -2}}},
      {2, 2, {{3, -3}}},
    });
}

// span(e1, e2) of W2(big), renumbered 1..2
Algebra sub_e2() {
  return from_table("E2", 2,
    {
      {1, 1, {{1, -1}}},
      {1, 2, {{2, -3}}},
      {2, 1, {{2, 3}}},
    });
}

std::vector<std::size_t> iota1(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

std::string param_name(const std::string& key, const Rational& a, const Rational& b) {
  return key + "(" + a.str() + "," + b.str() + ")";
}

using Builder = std::function<Algebra(const Rational&, const Rational&)>;

struct Registered {
  CatalogEntry entry;
  Builder build;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = [] {
    auto plain = [](std::function<Algebra()> f) { return [f](const Rational&, const Rational&) { return f(); }; };
    auto sub_of_w2bar = [](std::string name, std::vector<std::size_t> idx) {
      return [name, idx](const Rational&, const Rational&) {
        return restrict(w2_bar(), Subspace::of_basis_vectors(8, idx), name);
      };
    };
    std::vector<Registered> v = {
        {{"W2(big)", 8, false, "transcribed table of W(2)"}, plain(w2_big)},
        {{"W2bar", 8, false, "transcribed table; IW contraction of W2(big) scaling e2"}, plain(w2_bar)},
        {{"S1bar", 8, false, "transcribed table; IW contraction of W2bar scaling e1"}, plain(s1_bar)},
        {{"S5bar", 8, false, "transcribed table; IW contraction of W2bar scaling e5"}, plain(s5_bar)},
        {{"Sab_bar", 8, true, "transcribed table; IW contraction of adapted W2bar scaling e8"},
         [](const Rational& a, const Rational& b) { return sab_bar(a, b, param_name("Sab_bar", a, b)); }},
        {{"W2hat", 8, false, "transcribed table; IW contraction of W2(big) scaling e7,e8"}, plain(w2_hat)},
        {{"W2hathat", 8, false, "transcribed table; IW contraction of W2(big) scaling e5..e8"}, plain(w2_hathat)},
        {{"W2tilde", 8, false, "transcribed table; IW contraction of W2(big) scaling e3..e8"}, plain(w2_tilde)},
        {{"W2tildetilde", 8, false, "transcribed table; IW contraction of W2(big) scaling e2..e8"},
         plain(w2_tildetilde)},
        {{"B2", 7, false, "subalgebra <e1,e3,e4,e5,e6,e7,e8> of W2(big)"}, plain(sub_b2)},
        {{"W2", 6, false, "subalgebra <e1..e6> of W2(big)"}, plain(sub_w2)},
        {{"C2", 5, false, "subalgebra <e1,e3,e4,e5,e6> of W2(big)"}, plain(sub_c2)},
        {{"S2", 4, false, "subalgebra <e1..e4> of W2(big)"}, plain(sub_s2)},
        {{"D2", 3, false, "subalgebra <e1,e3,e4> of W2(big)"}, plain(sub_d2)},
        {{"E2", 2, false, "subalgebra <e1,e2> of W2(big)"}, plain(sub_e2)},
        {{"Sab_sub", 7, true, "subalgebra <e1+a e8, e2, e3, e4, e5+b e8, e6, e7> of W2bar"},
         [](const Rational& a, const Rational& b) {
           return restrict(sab_adapted(a, b, "adapted"), Subspace::of_basis_vectors(8, iota1(7)),
                           param_name("Sab_sub", a, b));
         }},
        {{"S1_sub", 7, false, "subalgebra <e2..e8> of W2bar"}, sub_of_w2bar("S1_sub", {2, 3, 4, 5, 6, 7, 8})},
        {{"S2_sub", 7, false, "subalgebra <e1,e3..e8> of W2bar"}, sub_of_w2bar("S2_sub", {1, 3, 4, 5, 6, 7, 8})},
        {{"S5_sub", 7, false, "subalgebra <e1..e4,e6,e7,e8> of W2bar"},
         sub_of_w2bar("S5_sub", {1, 2, 3, 4, 6, 7, 8})},
    };
    return v;
  }();
  return r;
}

std::string lower(std::string_view s) {
  std::string r(s);
  for (auto& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return r;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> e = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : registry()) out.push_back(r.entry);
    return out;
  }();
  return e;
}

std::vector<std::string> suggest_names(std::string_view name) {
  std::string want = lower(name);
  if (auto p = want.find('('); p != std::string::npos && want.rfind("w2(big)", 0) != 0) want = want.substr(0, p);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& e : catalog_entries()) {
    std::size_t d = edit_distance(want, lower(e.key));
    bool prefix = !want.empty() && lower(e.key).rfind(want, 0) == 0;
    if (d <= 3 || prefix) scored.emplace_back(prefix ? 0 : d, e.key + (e.parameterized ? "(a,b)" : ""));
  }
  std::stable_sort(scored.begin(), scored.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (auto& s : scored) out.push_back(s.second);
  if (out.size() > 5) out.resize(5);
  return out;
}

Algebra catalog(std::string_view raw) {
  std::string name = trim(raw);
  for (const auto& r : registry())
    if (!r.entry.parameterized && r.entry.key == name) return r.build(Rational(), Rational());

  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    std::string key = name.substr(0, open);
    std::string args = name.substr(open + 1, name.size() - open - 2);
    auto comma = args.find(',');
    for (const auto& r : registry()) {
      if (!r.entry.parameterized || r.entry.key != key) continue;
      if (comma == std::string::npos)
        throw std::invalid_argument("\"" + name + "\": expected two parameters, as in " + key + "(2,1)");
      Rational a = Rational::parse(trim(std::string_view(args).substr(0, comma)));
      Rational b = Rational::parse(trim(std::string_view(args).substr(comma + 1)));
      return r.build(a, b);
    }
  }
  for (const auto& r : registry())
    if (r.entry.parameterized && r.entry.key == name)
      throw std::invalid_argument("\"" + name + "\" is parameterized; give values, as in " + name + "(2,1)");
  throw UnknownAlgebra(name, suggest_names(name));
}

Algebra w2bar_adapted(const Rational& alpha, const Rational& beta) {
  return sab_adapted(alpha, beta, param_name("W2bar_adapted", alpha, beta));
}

const std::vector<NamedSpan>& w2_subalgebra_spans() {
  static const std::vector<NamedSpan> s = {
      {"B2", {1, 3, 4, 5, 6, 7, 8}}, {"W2", {1, 2, 3, 4, 5, 6}}, {"C2", {1, 3, 4, 5, 6}},
      {"S2", {1, 2, 3, 4}},          {"D2", {1, 3, 4}},          {"E2", {1, 2}},
  };
  return s;
}

const std::vector<NamedSpan>& w2bar_subalgebra_spans() {
  static const std::vector<NamedSpan> s = {
      {"S1_sub", {2, 3, 4, 5, 6, 7, 8}},
      {"S2_sub", {1, 3, 4, 5, 6, 7, 8}},
      {"S5_sub", {1, 2, 3, 4, 6, 7, 8}},
  };
  return s;
}

} // namespace nonassoc
