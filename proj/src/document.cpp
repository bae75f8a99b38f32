#include "spohn/document.hpp"

#include <fstream>
#include <optional>
#include <span>
#include <sstream>

#include "json.hpp"
#include "spohn/error.hpp"

namespace spohn {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  fail(ErrorCode::Parse, where + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const auto end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(ErrorCode::Parse, "parse error at line " + std::to_string(line) +
                               ", column " + std::to_string(column) + ": " +
                               e.what());
  }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Rank as_rank(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "inf") return Rank::infinity();
  if (j.is_number_unsigned()) return Rank(j.get<std::int64_t>());
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v >= 0) return Rank(v);
  }
  schema_error(where, "expected a non-negative integer or \"inf\"");
}

std::vector<Rank> as_ranks(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of ranks");
  std::vector<Rank> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_rank(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json rank_json(Rank r) {
  if (r.is_infinite()) return "inf";
  return r.value();
}

Json ranks_json(std::span<const Rank> ranks) {
  Json arr = Json::array();
  for (auto r : ranks) arr.push_back(rank_json(r));
  return arr;
}

// Re-raises library errors raised while building objects as parse errors
// located at `where`.
template <typename F>
auto located(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    schema_error(where, e.what());
  }
}

}  // namespace

SpohnianNetwork parse_network(std::string_view text) {
  const Json doc = parse_json(text);

  std::vector<Variable> variables;
  const Json& vars = member(doc, "variables", "network");
  if (!vars.is_array()) schema_error("variables", "expected an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto where = "variables[" + std::to_string(i) + "]";
    auto name = as_string(member(vars[i], "name", where), where + ".name");
    auto values = as_strings(member(vars[i], "values", where), where + ".values");
    variables.push_back(located(where, [&] {
      return Variable(std::move(name), std::move(values));
    }));
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const Json& es = doc["edges"];
    if (!es.is_array()) schema_error("edges", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto where = "edges[" + std::to_string(i) + "]";
      edges.push_back({as_string(member(es[i], "parent", where), where + ".parent"),
                       as_string(member(es[i], "child", where), where + ".child")});
    }
  }
  InfluenceDiagram diagram = located("network", [&] {
    return InfluenceDiagram(variables, edges);
  });

  std::vector<std::optional<OCF>> tables(diagram.size());
  const Json& ts = member(doc, "tables", "network");
  if (!ts.is_array()) schema_error("tables", "expected an array");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto where = "tables[" + std::to_string(i) + "]";
    const auto node = as_string(member(ts[i], "node", where), where + ".node");
    const auto order = as_strings(member(ts[i], "order", where), where + ".order");
    auto ranks = as_ranks(member(ts[i], "ranks", where), where + ".ranks");
    const auto idx = located(where, [&] { return diagram.index_of(node); });
    if (tables[idx]) schema_error(where, "second table for '" + node + "'");
    tables[idx] = located(where, [&] {
      std::vector<Variable> vs;
      for (const auto& n : order) vs.push_back(diagram.variable(n));
      return OCF::unchecked(make_space(std::move(vs)), std::move(ranks));
    });
  }
  std::vector<OCF> complete;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (!tables[i]) {
      schema_error("tables", "no table for '" + diagram.variables()[i].name() + "'");
    }
    complete.push_back(std::move(*tables[i]));
  }
  return located("tables", [&] {
    return SpohnianNetwork(std::move(diagram), std::move(complete));
  });
}

std::string serialize_network(const SpohnianNetwork& net) {
  const auto& d = net.diagram();
  Json doc = Json::object();
  Json vars = Json::array();
  for (const auto& v : d.variables()) {
    Json entry = Json::object();
    entry["name"] = v.name();
    entry["values"] = v.values();
    vars.push_back(std::move(entry));
  }
  doc["variables"] = std::move(vars);
  Json edges = Json::array();
  for (const auto& e : d.edges()) {
    Json entry = Json::object();
    entry["parent"] = e.parent;
    entry["child"] = e.child;
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  Json tables = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json entry = Json::object();
    entry["node"] = d.variables()[i].name();
    entry["order"] = net.table(i).space().names();
    entry["ranks"] = ranks_json(net.table(i).ranks());
    tables.push_back(std::move(entry));
  }
  doc["tables"] = std::move(tables);
  return doc.dump(2) + "\n";
}

std::vector<EvidenceSpec> parse_evidence(std::string_view text) {
  const Json doc = parse_json(text);
  const Json& list = member(doc, "evidence", "evidence document");
  if (!list.is_array()) schema_error("evidence", "expected an array");
  std::vector<EvidenceSpec> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto where = "evidence[" + std::to_string(i) + "]";
    const Json& entry = list[i];
    auto variable = as_string(member(entry, "variable", where), where + ".variable");
    const bool has_values = entry.contains("values");
    const bool has_target = entry.contains("target");
    if (has_values == has_target) {
      schema_error(where, "needs exactly one of \"values\" or \"target\"");
    }
    if (has_target) {
      if (entry.contains("strength")) {
        schema_error(where, "a target takes no \"strength\"");
      }
      out.push_back(EvidenceSpec::toward(
          std::move(variable), as_ranks(entry["target"], where + ".target")));
      continue;
    }
    auto values = as_strings(entry["values"], where + ".values");
    if (values.empty()) schema_error(where + ".values", "empty proposition");
    const Rank strength = as_rank(member(entry, "strength", where), where + ".strength");
    out.push_back(EvidenceSpec::observe(std::move(variable), std::move(values), strength));
  }
  return out;
}

std::string serialize_evidence(const std::vector<EvidenceSpec>& evidence) {
  Json list = Json::array();
  for (const auto& e : evidence) {
    Json entry = Json::object();
    entry["variable"] = e.variable;
    if (e.is_target()) {
      entry["target"] = ranks_json(*e.target);
    } else {
      entry["values"] = e.values;
      entry["strength"] = rank_json(e.strength);
    }
    list.push_back(std::move(entry));
  }
  Json doc = Json::object();
  doc["evidence"] = std::move(list);
  return doc.dump(2) + "\n";
}

Proposition parse_proposition(const SpacePtr& space, std::string_view text) {
  Proposition result = Proposition::everything(space);
  std::string_view rest = text;
  while (true) {
    const auto amp = rest.find('&');
    const auto clause = rest.substr(0, amp);
    const auto eq = clause.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == clause.size()) {
      fail(ErrorCode::Parse, "expected VAR=value[,value...] in '" +
                                 std::string(clause) + "'");
    }
    const std::string variable(clause.substr(0, eq));
    std::vector<std::string> values;
    std::string_view list = clause.substr(eq + 1);
    while (true) {
      const auto comma = list.find(',');
      values.emplace_back(list.substr(0, comma));
      if (comma == std::string_view::npos) break;
      list = list.substr(comma + 1);
    }
    result = result & Proposition::where(space, variable, values);
    if (amp == std::string_view::npos) break;
    rest = rest.substr(amp + 1);
  }
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace spohn
