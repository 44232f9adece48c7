#include "postlie/document.hpp"

#include <set>

#include "json.hpp"

namespace postlie {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(path + ": " + what);
}

std::size_t parse_index(const Json& value, const std::string& path, std::size_t dim) {
  if (!value.is_number_integer())
    fail(path, "index must be an integer");
  auto raw = value.get<long long>();
  if (raw < 1 || static_cast<std::size_t>(raw) > dim)
    fail(path, "index " + std::to_string(raw) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(raw - 1);
}

std::size_t parse_index_key(const std::string& key, const std::string& path, std::size_t dim) {
  std::size_t pos = 0;
  long long raw = 0;
  try {
    raw = std::stoll(key, &pos);
  } catch (const std::exception&) {
    fail(path, "coefficient key '" + key + "' is not an index");
  }
  if (pos != key.size())
    fail(path, "coefficient key '" + key + "' is not an index");
  if (raw < 1 || static_cast<std::size_t>(raw) > dim)
    fail(path, "index " + std::to_string(raw) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(raw - 1);
}

Scalar parse_coefficient(const Json& value, Field f, const std::string& path) {
  try {
    if (value.is_string())
      return Scalar::parse(f, value.get<std::string>());
    if (value.is_number_integer())
      return Scalar::parse(f, std::to_string(value.get<long long>()));
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "coefficient must be a string such as \"-1/2\"");
}

struct Entry {
  std::size_t i, j;
  Vector value;
};

std::vector<Entry> parse_entries(const Json& list, const std::string& key, Field f,
                                 std::size_t dim, bool bracket) {
  if (!list.is_array())
    fail(key, "expected a list of entries");
  std::vector<Entry> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const auto path = key + "[" + std::to_string(e) + "]";
    const auto& item = list[e];
    if (!item.is_object())
      fail(path, "expected an object with i, j, coeffs");
    for (const auto& [name, _] : item.items())
      if (name != "i" && name != "j" && name != "coeffs")
        fail(path, "unknown key '" + name + "'");
    if (!item.contains("i") || !item.contains("j") || !item.contains("coeffs"))
      fail(path, "entries need i, j and coeffs");
    auto i = parse_index(item["i"], path + ".i", dim);
    auto j = parse_index(item["j"], path + ".j", dim);
    if (bracket && i >= j)
      fail(path, "bracket entries need i < j");
    if (!seen.emplace(i, j).second)
      fail(path, "duplicate entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    const auto& coeffs = item["coeffs"];
    if (!coeffs.is_object())
      fail(path + ".coeffs", "expected an object mapping index to coefficient");
    auto value = zero_vector(f, dim);
    for (const auto& [k, c] : coeffs.items()) {
      const auto cpath = path + ".coeffs." + k;
      value[parse_index_key(k, cpath, dim)] = parse_coefficient(c, f, cpath);
    }
    out.push_back({i, j, std::move(value)});
  }
  return out;
}

LieAlgebra parse_bracket(const Json& doc, const std::string& key, Field f, std::size_t dim,
                         std::string name) {
  LieAlgebra l(f, dim, std::move(name));
  if (doc.contains(key))
    for (auto& e : parse_entries(doc[key], key, f, dim, true))
      l.set_bracket(e.i, e.j, std::move(e.value));
  return l;
}

Json coeffs_json(const Vector& v) {
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero())
      coeffs[std::to_string(k + 1)] = v[k].to_string();
  return coeffs;
}

Json bracket_json(const LieAlgebra& l) {
  Json list = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (const auto& v = l.stored(i, j); !is_zero(v))
        list.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs_json(v)}});
  return list;
}

} // namespace

PostLiePair PairDocument::pair() const {
  if (!is_pair())
    throw Error("document describes a single algebra, not a pair");
  return PostLiePair(*g, *n, *product);
}

PairDocument parse_pair_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("$: invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    fail("$", "expected a JSON object");
  static const std::set<std::string> known{"field", "dim", "names", "g", "n", "product", "bracket"};
  for (const auto& [name, _] : doc.items())
    if (!known.contains(name))
      fail(name, "unknown key");

  PairDocument out;
  if (!doc.contains("field") || !doc["field"].is_string())
    fail("field", "expected \"Q\" or \"Fp:<p>\"");
  try {
    out.field = Field::parse(doc["field"].get<std::string>());
  } catch (const Error& e) {
    fail("field", e.what());
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    fail("dim", "expected a positive integer");
  out.dim = static_cast<std::size_t>(doc["dim"].get<long long>());

  if (doc.contains("names")) {
    const auto& names = doc["names"];
    if (!names.is_array() || names.size() != out.dim)
      fail("names", "expected " + std::to_string(out.dim) + " strings");
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (!names[k].is_string())
        fail("names[" + std::to_string(k) + "]", "expected a string");
      out.names.push_back(names[k].get<std::string>());
    }
  }

  const bool algebra = doc.contains("bracket");
  if (algebra) {
    for (const char* key : {"g", "n", "product"})
      if (doc.contains(key))
        fail(key, "not allowed together with \"bracket\"");
    out.algebra = parse_bracket(doc, "bracket", out.field, out.dim, "");
    return out;
  }
  out.g = parse_bracket(doc, "g", out.field, out.dim, "g");
  out.n = parse_bracket(doc, "n", out.field, out.dim, "n");
  out.product.emplace(out.field, out.dim);
  if (doc.contains("product"))
    for (auto& e : parse_entries(doc["product"], "product", out.field, out.dim, false))
      out.product->set(e.i, e.j, std::move(e.value));
  return out;
}

std::string serialize_pair_document(const PairDocument& doc) {
  Json out;
  out["field"] = doc.field.to_string();
  out["dim"] = doc.dim;
  if (!doc.names.empty())
    out["names"] = doc.names;
  if (doc.algebra) {
    out["bracket"] = bracket_json(*doc.algebra);
  } else {
    out["g"] = doc.g ? bracket_json(*doc.g) : Json::array();
    out["n"] = doc.n ? bracket_json(*doc.n) : Json::array();
    Json product = Json::array();
    if (doc.product)
      for (std::size_t i = 0; i < doc.dim; ++i)
        for (std::size_t j = 0; j < doc.dim; ++j)
          if (const auto& v = (*doc.product)(i, j); !is_zero(v))
            product.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs_json(v)}});
    out["product"] = product;
  }
  return out.dump(2) + "\n";
}

PairDocument make_document(const PostLiePair& pair, std::vector<std::string> names) {
  PairDocument doc;
  doc.field = pair.field();
  doc.dim = pair.dim();
  doc.names = std::move(names);
  doc.g = pair.g();
  doc.n = pair.n();
  doc.product = pair.product();
  return doc;
}

PairDocument make_document(const LieAlgebra& algebra, std::vector<std::string> names) {
  PairDocument doc;
  doc.field = algebra.field();
  doc.dim = algebra.dim();
  doc.names = std::move(names);
  doc.algebra = algebra;
  return doc;
}

} // namespace postlie
