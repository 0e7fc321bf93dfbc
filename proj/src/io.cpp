#include "tcg/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tcg/errors.hpp"

namespace tcg::io {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const json& field(const json& doc, const std::string& pointer, const char* key) {
  if (!doc.is_object()) throw ParseError(pointer, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(child(pointer, key), "missing field");
  return *it;
}

const json& array_of(const json& v, const std::string& pointer, std::size_t expected) {
  if (!v.is_array()) throw ParseError(pointer, "expected an array");
  if (v.size() != expected)
    throw ParseError(pointer, "expected " + std::to_string(expected) + " entries, found " + std::to_string(v.size()));
  return v;
}

std::int64_t integer(const json& v, const std::string& pointer) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError(pointer, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  if (!v.is_number_integer()) throw ParseError(pointer, "expected an integer");
  return v.get<std::int64_t>();
}

std::size_t count(const json& v, const std::string& pointer) {
  const auto x = integer(v, pointer);
  if (x < 0) throw ParseError(pointer, "expected a nonnegative integer");
  return static_cast<std::size_t>(x);
}

Vec vector_of(const json& v, const std::string& pointer, std::size_t n) {
  array_of(v, pointer, n);
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = integer(v[i], child(pointer, i));
  return out;
}

SquareMatrix matrix_of(const json& v, const std::string& pointer, std::size_t n) {
  array_of(v, pointer, n);
  std::vector<std::int64_t> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec row = vector_of(v[i], child(pointer, i), n);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return SquareMatrix(n, std::move(entries));
}

json matrix_json(const SquareMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

GroupElement element_object(const VAGroupData& group, const json& v, const std::string& pointer) {
  GroupElement g;
  g.vector = vector_of(field(v, pointer, "vector"), child(pointer, "vector"), group.n);
  g.coset = count(field(v, pointer, "coset"), child(pointer, "coset"));
  if (g.coset >= group.m()) throw ParseError(child(pointer, "coset"), "coset index out of range");
  return g;
}

json element_json(const GroupElement& g) { return json{{"vector", g.vector}, {"coset", g.coset}}; }

}  // namespace

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
}

VAGroupData parse_group(const json& doc) {
  VAGroupData g;
  g.n = count(field(doc, "", "n"), "/n");

  const json& cosets = field(doc, "", "cosets");
  if (!cosets.is_array() || cosets.empty()) throw ParseError("/cosets", "expected a nonempty array of labels");
  for (std::size_t a = 0; a < cosets.size(); ++a) {
    if (!cosets[a].is_string()) throw ParseError(child("/cosets", a), "expected a string label");
    auto label = cosets[a].get<std::string>();
    if (label.empty() || label.find_first_of(";, ") != std::string::npos)
      throw ParseError(child("/cosets", a), "labels must be nonempty and free of ';', ',' and spaces");
    for (const auto& prior : g.cosets)
      if (prior == label) throw ParseError(child("/cosets", a), "duplicate label '" + label + "'");
    g.cosets.push_back(std::move(label));
  }
  const std::size_t m = g.m();

  const json& mult = array_of(field(doc, "", "mult"), "/mult", m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::string row_ptr = child("/mult", a);
    array_of(mult[a], row_ptr, m);
    std::vector<std::size_t> row(m);
    for (std::size_t b = 0; b < m; ++b) {
      row[b] = count(mult[a][b], child(row_ptr, b));
      if (row[b] >= m) throw ParseError(child(row_ptr, b), "coset index out of range");
    }
    g.mult.push_back(std::move(row));
  }

  const json& cocycle = array_of(field(doc, "", "cocycle"), "/cocycle", m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::string row_ptr = child("/cocycle", a);
    array_of(cocycle[a], row_ptr, m);
    std::vector<Vec> row;
    for (std::size_t b = 0; b < m; ++b) row.push_back(vector_of(cocycle[a][b], child(row_ptr, b), g.n));
    g.cocycle.push_back(std::move(row));
  }

  const json& action = array_of(field(doc, "", "action"), "/action", m);
  for (std::size_t a = 0; a < m; ++a) g.action.push_back(matrix_of(action[a], child("/action", a), g.n));
  return g;
}

json group_to_json(const VAGroupData& group) {
  json cocycle = json::array();
  for (const auto& row : group.cocycle) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v);
    cocycle.push_back(std::move(r));
  }
  json action = json::array();
  for (const auto& m : group.action) action.push_back(matrix_json(m));
  return json{{"n", group.n}, {"cosets", group.cosets}, {"mult", group.mult}, {"cocycle", std::move(cocycle)},
              {"action", std::move(action)}};
}

Endomorphism parse_endo(const VAGroupData& group, const json& doc) {
  Endomorphism e;
  e.matrix = matrix_of(field(doc, "", "matrix"), "/matrix", group.n);
  const json& images = array_of(field(doc, "", "rep_image"), "/rep_image", group.m());
  for (std::size_t a = 0; a < group.m(); ++a) e.rep_image.push_back(element_object(group, images[a], child("/rep_image", a)));
  return e;
}

json endo_to_json(const Endomorphism& endo) {
  json images = json::array();
  for (const auto& g : endo.rep_image) images.push_back(element_json(g));
  return json{{"matrix", matrix_json(endo.matrix)}, {"rep_image", std::move(images)}};
}

std::vector<GroupElement> parse_generators(const VAGroupData& group, const json& doc) {
  const json& gens = field(doc, "", "generators");
  if (!gens.is_array() || gens.empty()) throw ParseError("/generators", "expected a nonempty array");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string ptr = child("/generators", i);
    if (gens[i].is_string()) {
      try {
        out.push_back(parse_element(group, gens[i].get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError(ptr, e.what());
      }
    } else {
      out.push_back(element_object(group, gens[i], ptr));
    }
  }
  return out;
}

json generators_to_json(const VAGroupData& group, const std::vector<GroupElement>& elements) {
  json gens = json::array();
  for (const auto& g : elements) gens.push_back(format_element(group, g));
  return json{{"generators", std::move(gens)}};
}

GroupElement parse_element(const VAGroupData& group, std::string_view literal) {
  const auto semi = literal.find(';');
  if (semi == std::string_view::npos || literal.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("", "element literal must look like \"x1,...,xn;label\": '" + std::string(literal) + "'");
  const std::string_view coords = literal.substr(0, semi);
  std::string_view label = literal.substr(semi + 1);
  while (!label.empty() && label.front() == ' ') label.remove_prefix(1);
  while (!label.empty() && label.back() == ' ') label.remove_suffix(1);

  GroupElement g;
  auto it = std::find(group.cosets.begin(), group.cosets.end(), label);
  if (it == group.cosets.end()) throw ParseError("", "unknown coset label '" + std::string(label) + "'");
  g.coset = static_cast<std::size_t>(it - group.cosets.begin());

  if (!coords.empty()) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = coords.find(',', start);
      std::string_view part = coords.substr(start, comma == std::string_view::npos ? coords.npos : comma - start);
      while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
      while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
      std::int64_t v = 0;
      const char* first = part.data();
      if (!part.empty() && part.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
        throw ParseError("", "bad coordinate '" + std::string(part) + "' in element literal");
      g.vector.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (g.vector.size() != group.n)
    throw ParseError("", "element literal has " + std::to_string(g.vector.size()) + " coordinates, expected " +
                             std::to_string(group.n));
  return g;
}

std::string format_element(const VAGroupData& group, const GroupElement& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.vector.size(); ++i) os << (i ? "," : "") << g.vector[i];
  os << ';' << (g.coset < group.m() ? group.cosets[g.coset] : std::to_string(g.coset));
  return os.str();
}

}  // namespace tcg::io
