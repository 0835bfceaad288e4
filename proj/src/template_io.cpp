#include <fstream>
#include <sstream>

#include "efx/ordinal.hpp"
#include "json.hpp"

namespace efx {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw TemplateError(where + "/" + key, "required field is missing");
  return *it;
}

int require_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw TemplateError(where, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw TemplateError(where, "expected a string");
  return v.get<std::string>();
}

GoodId require_good(const json& v, const std::string& where) {
  const int g = require_int(v, where);
  if (g < 0 || g >= kGoods) throw TemplateError(where, "good index out of range 0..7");
  return static_cast<GoodId>(g);
}

}  // namespace

InstanceTemplate parse_template(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw TemplateError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  if (!doc.is_object()) throw TemplateError("/", "template must be a JSON object");

  InstanceTemplate t;

  const json& types = require(doc, "types", "");
  if (!types.is_array()) throw TemplateError("/types", "expected an array");
  for (std::size_t k = 0; k < types.size(); ++k) {
    const std::string where = "/types/" + std::to_string(k);
    const json& entry = types[k];
    if (!entry.is_object()) throw TemplateError(where, "expected an object");
    TypeDecl decl;
    decl.name = require_string(require(entry, "name", where), where + "/name");
    const json& goods = require(entry, "goods", where);
    if (!goods.is_array()) throw TemplateError(where + "/goods", "expected an array");
    for (std::size_t q = 0; q < goods.size(); ++q)
      decl.goods.push_back(require_good(goods[q], where + "/goods/" + std::to_string(q)));
    t.types.push_back(std::move(decl));
  }

  if (auto it = doc.find("special_goods"); it != doc.end()) {
    if (!it->is_array()) throw TemplateError("/special_goods", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "/special_goods/" + std::to_string(k);
      const json& entry = (*it)[k];
      if (!entry.is_object()) throw TemplateError(where, "expected an object");
      TypeDecl decl;
      decl.name = require_string(require(entry, "name", where), where + "/name");
      decl.goods = {require_good(require(entry, "good", where), where + "/good")};
      decl.special = true;
      t.types.push_back(std::move(decl));
    }
  }

  t.top_rank = require_int(require(doc, "top_rank", ""), "/top_rank");

  const int n = t.type_count();
  auto type_index = [&](const std::string& name, const std::string& where) {
    const int idx = t.find_type(name);
    if (idx < 0) throw TemplateError(where, "unknown type '" + name + "'");
    return idx;
  };

  const json& pairs = require(doc, "pair_ranks", "");
  if (!pairs.is_object()) throw TemplateError("/pair_ranks", "expected an object of rows");
  t.pair_ranks.assign(static_cast<std::size_t>(n), std::vector<std::optional<int>>(static_cast<std::size_t>(n)));
  for (const auto& [row_name, row] : pairs.items()) {
    const std::string row_where = "/pair_ranks/" + row_name;
    const int a = type_index(row_name, row_where);
    if (!row.is_object()) throw TemplateError(row_where, "expected an object of cells");
    for (const auto& [col_name, cell] : row.items()) {
      const std::string where = row_where + "/" + col_name;
      const int b = type_index(col_name, where);
      if (cell.is_null()) continue;
      t.pair_ranks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = require_int(cell, where);
    }
  }

  if (auto it = doc.find("exceptional"); it != doc.end()) {
    if (!it->is_array()) throw TemplateError("/exceptional", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "/exceptional/" + std::to_string(k);
      const json& triple = (*it)[k];
      if (!triple.is_array() || triple.size() != 3)
        throw TemplateError(where, "expected an array of three type names");
      std::array<int, 3> idx{};
      for (std::size_t q = 0; q < 3; ++q) {
        const std::string cell_where = where + "/" + std::to_string(q);
        idx[q] = type_index(require_string(triple[q], cell_where), cell_where);
      }
      t.exceptional.push_back(idx);
    }
  }

  const json& perm = require(doc, "permutation", "");
  if (!perm.is_array() || perm.size() != kGoods)
    throw TemplateError("/permutation", "expected an array of 8 good indices");
  std::array<GoodId, kGoods> image{};
  for (std::size_t g = 0; g < kGoods; ++g)
    image[g] = require_good(perm[g], "/permutation/" + std::to_string(g));
  try {
    t.permutation = GoodPermutation(image);
  } catch (const std::invalid_argument&) {
    throw TemplateError("/permutation", "permutation is not a bijection");
  }

  t.validate();
  return t;
}

InstanceTemplate load_template_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TemplateError(path, "cannot open template file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_template(buffer.str());
}

std::string serialize_template(const InstanceTemplate& t) {
  json doc;
  doc["types"] = json::array();
  doc["special_goods"] = json::array();
  for (const auto& decl : t.types) {
    if (decl.special) {
      doc["special_goods"].push_back({{"name", decl.name}, {"good", decl.goods.front()}});
    } else {
      json goods = json::array();
      for (GoodId g : decl.goods) goods.push_back(g);
      doc["types"].push_back({{"name", decl.name}, {"goods", goods}});
    }
  }
  json pairs = json::object();
  for (int a = 0; a < t.type_count(); ++a) {
    json row = json::object();
    for (int b = 0; b < t.type_count(); ++b) {
      const auto& cell = t.pair_ranks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (cell) row[t.types[static_cast<std::size_t>(b)].name] = *cell;
    }
    pairs[t.types[static_cast<std::size_t>(a)].name] = row;
  }
  doc["pair_ranks"] = pairs;
  json exceptional = json::array();
  for (const auto& triple : t.exceptional) {
    json names = json::array();
    for (int idx : triple) names.push_back(t.types[static_cast<std::size_t>(idx)].name);
    exceptional.push_back(names);
  }
  doc["exceptional"] = exceptional;
  doc["top_rank"] = t.top_rank;
  json perm = json::array();
  for (GoodId g : t.permutation.image()) perm.push_back(g);
  doc["permutation"] = perm;
  return doc.dump(2) + "\n";
}

LoadedTemplate load_template(std::string_view text) {
  InstanceTemplate t = parse_template(text);
  OrdinalProfile profile(t);
  return {std::move(t), std::move(profile)};
}

}  // namespace efx
