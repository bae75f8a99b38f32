#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spohn/ocf.hpp"

namespace spohn {

struct ValidationReport {
  bool ok = true;
  std::string message;

  static ValidationReport pass() { return {}; }
  static ValidationReport failure(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

struct Edge {
  std::string parent;
  std::string child;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A node together with its parents. Tables over a family list the parents
/// first, in declaration order, then the child.
struct Family {
  std::string child;
  std::vector<std::string> parents;

  std::vector<std::string> members() const;
  bool contains(const std::string& name) const;
};

/**
 * Directed graph over multi-valued variables.
 *
 * Construction checks only local well-formedness (known endpoints, no
 * self-loops, no repeated edges). Acyclicity and single-connectedness are
 * reported by validate().
 */
class InfluenceDiagram {
 public:
  InfluenceDiagram(std::vector<Variable> variables, std::vector<Edge> edges);

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return variables_.size(); }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws UnknownVariable.
  std::size_t index_of(const std::string& name) const;
  const Variable& variable(const std::string& name) const {
    return variables_[index_of(name)];
  }
  bool contains(const std::string& name) const { return find(name).has_value(); }

  /// Parents of node i in declaration order.
  const std::vector<std::size_t>& parents(std::size_t i) const { return parents_[i]; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  /// Parents then children.
  std::vector<std::size_t> neighbors(std::size_t i) const;
  bool has_edge(std::size_t parent, std::size_t child) const;

  /// The full state space over all variables in declaration order.
  SpacePtr space() const;

  /// Node indices in an order where parents precede children. Throws
  /// InvalidNetwork if the graph has a directed cycle.
  std::vector<std::size_t> topological_order() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> children_;
};

/// Accepts iff the diagram is acyclic and singly-connected; otherwise names
/// the offending cycle or the pair joined by two undirected paths.
ValidationReport validate(const InfluenceDiagram& d);

/**
 * True iff every undirected path between x and y contains two links meeting
 * head-to-tail or tail-to-tail at a member of `gamma`. Head-to-head meetings
 * never separate, so a direct edge is never separated. Nodes with no
 * connecting path are separated by any set.
 */
bool separated(const InfluenceDiagram& d, const std::string& x,
               const std::string& y, const std::vector<std::string>& gamma);

/// The family of `child`; throws UnknownVariable.
Family family(const InfluenceDiagram& d, const std::string& child);

/// Member of `n` through which `u` connects to every member of `n`, or none
/// when `u` reaches no member. Requires a singly-connected diagram.
std::optional<std::string> unique_connector(const InfluenceDiagram& d,
                                            const Family& n,
                                            const std::string& u);

/// Undirected path from `from` to `to` as node indices (inclusive), or empty
/// if unreachable. On singly-connected diagrams the path is unique.
std::vector<std::size_t> undirected_path(const InfluenceDiagram& d,
                                         std::size_t from, std::size_t to);

}  // namespace spohn
