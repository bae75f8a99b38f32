#pragma once

#include <string>
#include <vector>

#include "spohn/diagram.hpp"
#include "spohn/ocf.hpp"

namespace spohn {

/**
 * A singly-connected influence diagram with one OCF table per node, over the
 * node's family (parents in declaration order, then the node itself).
 *
 * Construction checks only that each table is over the right variables;
 * tables may be invalid OCFs or disagree with each other until
 * validate_network() says otherwise.
 */
class SpohnianNetwork {
 public:
  /// `tables[i]` belongs to diagram node i. Tables over the family
  /// variables in another order are reordered to the canonical one.
  SpohnianNetwork(InfluenceDiagram diagram, std::vector<OCF> tables);

  const InfluenceDiagram& diagram() const { return diagram_; }
  const std::vector<OCF>& tables() const { return tables_; }
  const OCF& table(std::size_t node) const { return tables_.at(node); }
  const OCF& table(const std::string& node) const {
    return tables_[diagram_.index_of(node)];
  }
  Family family_of(std::size_t node) const;

  /// Copy with one table replaced.
  SpohnianNetwork with_table(const std::string& node, OCF table) const;

  friend bool operator==(const SpohnianNetwork& a, const SpohnianNetwork& b);

 private:
  InfluenceDiagram diagram_;
  std::vector<OCF> tables_;
};

/// Reorders an OCF's variables; the set of variables must be unchanged.
OCF reorder(const OCF& kappa, const std::vector<std::string>& order);

/// Joint OCF over all variables as the sum of kappa(node | parents) taken
/// from each node's own table. Throws InvalidNetwork or InconsistentTables
/// if validate_network() would reject the network.
OCF joint(const SpohnianNetwork& net);

/// Projects a joint onto the diagram's families. Throws SpaceMismatch unless
/// the joint covers exactly the diagram's variables.
SpohnianNetwork from_joint(const OCF& kappa, const InfluenceDiagram& d);

/// Diagram validity, per-table OCF validity, and marginal agreement of
/// tables that share a variable. Names the first violation.
ValidationReport validate_network(const SpohnianNetwork& net);

/// Marginal of one variable, read from its own table.
OCF marginal(const SpohnianNetwork& net, const std::string& variable);

}  // namespace spohn
