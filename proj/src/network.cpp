#include "spohn/network.hpp"

#include <algorithm>
#include <set>

#include "spohn/error.hpp"

namespace spohn {

namespace {

bool same_variable_set(const StateSpace& space,
                       const std::vector<std::string>& names) {
  if (space.arity() != names.size()) return false;
  std::set<std::string> a(names.begin(), names.end());
  for (const auto& v : space.variables()) {
    if (!a.count(v.name())) return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

OCF reorder(const OCF& kappa, const std::vector<std::string>& order) {
  if (!same_variable_set(kappa.space(), order)) {
    fail(ErrorCode::SpaceMismatch, "reorder must keep the same variables");
  }
  if (kappa.space().names() == order) return kappa;
  return marginalize(kappa, order);
}

SpohnianNetwork::SpohnianNetwork(InfluenceDiagram diagram,
                                 std::vector<OCF> tables)
    : diagram_(std::move(diagram)), tables_(std::move(tables)) {
  if (tables_.size() != diagram_.size()) {
    fail(ErrorCode::InvalidNetwork, "expected one table per node");
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto fam = family_of(i);
    const auto members = fam.members();
    if (!same_variable_set(tables_[i].space(), members)) {
      fail(ErrorCode::InvalidNetwork,
           "table of '" + fam.child + "' must be over {" + join(members) + "}");
    }
    for (const auto& name : members) {
      if (!(tables_[i].space().variable(tables_[i].space().position(name)) ==
            diagram_.variable(name))) {
        fail(ErrorCode::InvalidNetwork, "table of '" + fam.child +
                                            "' uses a different domain for '" +
                                            name + "'");
      }
    }
    tables_[i] = reorder(tables_[i], members);
  }
}

Family SpohnianNetwork::family_of(std::size_t node) const {
  return family(diagram_, diagram_.variables().at(node).name());
}

SpohnianNetwork SpohnianNetwork::with_table(const std::string& node,
                                            OCF table) const {
  auto tables = tables_;
  tables[diagram_.index_of(node)] = std::move(table);
  return SpohnianNetwork(diagram_, std::move(tables));
}

bool operator==(const SpohnianNetwork& a, const SpohnianNetwork& b) {
  return a.diagram_.variables() == b.diagram_.variables() &&
         a.diagram_.edges() == b.diagram_.edges() && a.tables_ == b.tables_;
}

ValidationReport validate_network(const SpohnianNetwork& net) {
  const auto& d = net.diagram();
  if (auto report = validate(d); !report) return report;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!net.table(i).is_valid()) {
      return ValidationReport::failure("table of '" + d.variables()[i].name() +
                                       "' is not an OCF (minimum rank is not 0)");
    }
  }
  for (const auto& e : d.edges()) {
    const auto from_child = marginalize(net.table(e.child), {e.parent});
    const auto from_parent = marginalize(net.table(e.parent), {e.parent});
    if (!(from_child == from_parent)) {
      return ValidationReport::failure(
          "inconsistent tables on edge " + e.parent + "->" + e.child +
          ": marginal of '" + e.parent + "' differs between the two tables");
    }
  }
  return ValidationReport::pass();
}

OCF joint(const SpohnianNetwork& net) {
  const auto& d = net.diagram();
  if (auto report = validate(d); !report) {
    fail(ErrorCode::InvalidNetwork, report.message);
  }
  if (auto report = validate_network(net); !report) {
    fail(ErrorCode::InconsistentTables, report.message);
  }
  const auto space = d.space();
  std::vector<Rank> out(space->size(), Rank(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto fam = net.family_of(i);
    const OCF& table = net.table(i);
    const auto to_table = projection(*space, table.space());
    // kappa(node | parents) = table - table's parent marginal; rows whose
    // parent configuration is impossible contribute infinity.
    std::vector<Rank> conditional(table.space().size());
    if (fam.parents.empty()) {
      std::copy(table.ranks().begin(), table.ranks().end(), conditional.begin());
    } else {
      const auto parents = marginalize(table, fam.parents);
      const auto to_parents = projection(table.space(), parents.space());
      for (std::size_t t = 0; t < conditional.size(); ++t) {
        const Rank pm = parents.rank(to_parents[t]);
        conditional[t] =
            pm.is_infinite() ? Rank::infinity() : table.rank(t).minus(pm);
      }
    }
    for (std::size_t s = 0; s < out.size(); ++s) out[s] += conditional[to_table[s]];
  }
  return OCF(space, std::move(out));
}

SpohnianNetwork from_joint(const OCF& kappa, const InfluenceDiagram& d) {
  std::vector<std::string> names;
  for (const auto& v : d.variables()) names.push_back(v.name());
  if (!same_variable_set(kappa.space(), names)) {
    fail(ErrorCode::SpaceMismatch,
         "joint must cover exactly the diagram's variables");
  }
  std::vector<OCF> tables;
  tables.reserve(d.size());
  for (const auto& v : d.variables()) {
    tables.push_back(marginalize(kappa, family(d, v.name()).members()));
  }
  return SpohnianNetwork(d, std::move(tables));
}

OCF marginal(const SpohnianNetwork& net, const std::string& variable) {
  return marginalize(net.table(variable), {variable});
}

}  // namespace spohn
