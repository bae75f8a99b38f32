#include "spohn/diagram.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "spohn/error.hpp"

namespace spohn {

std::vector<std::string> Family::members() const {
  std::vector<std::string> out = parents;
  out.push_back(child);
  return out;
}

bool Family::contains(const std::string& name) const {
  return name == child ||
         std::find(parents.begin(), parents.end(), name) != parents.end();
}

InfluenceDiagram::InfluenceDiagram(std::vector<Variable> variables,
                                   std::vector<Edge> edges)
    : variables_(std::move(variables)),
      edges_(std::move(edges)),
      parents_(variables_.size()),
      children_(variables_.size()) {
  std::set<std::string> names;
  for (const auto& v : variables_) {
    if (!names.insert(v.name()).second) {
      fail(ErrorCode::InvalidNetwork, "duplicate variable '" + v.name() + "'");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges_) {
    const auto pi = find(e.parent);
    const auto ci = find(e.child);
    if (!pi || !ci) {
      fail(ErrorCode::InvalidNetwork, "edge " + e.parent + "->" + e.child +
                                          " names an unknown variable");
    }
    const auto p = *pi;
    const auto c = *ci;
    if (p == c) fail(ErrorCode::InvalidNetwork, "self-loop on '" + e.parent + "'");
    if (!seen.insert({p, c}).second) {
      fail(ErrorCode::InvalidNetwork,
           "repeated edge " + e.parent + "->" + e.child);
    }
    parents_[c].push_back(p);
    children_[p].push_back(c);
  }
  for (auto& ps : parents_) std::sort(ps.begin(), ps.end());
  for (auto& cs : children_) std::sort(cs.begin(), cs.end());
}

std::optional<std::size_t> InfluenceDiagram::find(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name() == name) return i;
  }
  return std::nullopt;
}

std::size_t InfluenceDiagram::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
  return *i;
}

std::vector<std::size_t> InfluenceDiagram::neighbors(std::size_t i) const {
  std::vector<std::size_t> out = parents_[i];
  out.insert(out.end(), children_[i].begin(), children_[i].end());
  return out;
}

bool InfluenceDiagram::has_edge(std::size_t parent, std::size_t child) const {
  return std::binary_search(children_[parent].begin(), children_[parent].end(),
                            child);
}

SpacePtr InfluenceDiagram::space() const { return make_space(variables_); }

std::vector<std::size_t> InfluenceDiagram::topological_order() const {
  std::vector<std::size_t> indegree(size());
  for (std::size_t i = 0; i < size(); ++i) indegree[i] = parents_[i].size();
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < size(); ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const auto i = ready.front();
    ready.pop_front();
    order.push_back(i);
    for (auto c : children_[i]) {
      if (--indegree[c] == 0) ready.push_back(c);
    }
  }
  if (order.size() != size()) fail(ErrorCode::InvalidNetwork, "diagram has a cycle");
  return order;
}

namespace {

std::string join_path(const InfluenceDiagram& d,
                      const std::vector<std::size_t>& path, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += sep;
    out += d.variables()[path[i]].name();
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_directed_cycle(
    const InfluenceDiagram& d) {
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(d.size(), Mark::White);
  std::vector<std::size_t> stack;
  std::optional<std::vector<std::size_t>> cycle;

  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    mark[u] = Mark::Grey;
    stack.push_back(u);
    for (auto c : d.children(u)) {
      if (mark[c] == Mark::Grey) {
        auto it = std::find(stack.begin(), stack.end(), c);
        std::vector<std::size_t> cyc(it, stack.end());
        cyc.push_back(c);
        cycle = std::move(cyc);
        return true;
      }
      if (mark[c] == Mark::White && visit(c)) return true;
    }
    stack.pop_back();
    mark[u] = Mark::Black;
    return false;
  };
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (mark[i] == Mark::White && visit(i)) break;
  }
  return cycle;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

// All simple undirected paths between two nodes.
void enumerate_paths(const InfluenceDiagram& d, std::size_t at,
                     std::size_t target, std::vector<bool>& on_path,
                     std::vector<std::size_t>& path,
                     const std::function<bool(const std::vector<std::size_t>&)>& sink,
                     bool& stop) {
  if (stop) return;
  if (at == target) {
    if (!sink(path)) stop = true;
    return;
  }
  for (auto n : d.neighbors(at)) {
    if (on_path[n]) continue;
    on_path[n] = true;
    path.push_back(n);
    enumerate_paths(d, n, target, on_path, path, sink, stop);
    path.pop_back();
    on_path[n] = false;
    if (stop) return;
  }
}

}  // namespace

ValidationReport validate(const InfluenceDiagram& d) {
  if (auto cycle = find_directed_cycle(d)) {
    return ValidationReport::failure("cycle: " + join_path(d, *cycle, " -> "));
  }
  DisjointSets sets(d.size());
  // The graph minus the offending edge is a forest, so the path between its
  // endpoints is unique.
  std::vector<Edge> accepted;
  for (const auto& e : d.edges()) {
    const auto p = d.index_of(e.parent);
    const auto c = d.index_of(e.child);
    const auto rp = sets.root(p);
    const auto rc = sets.root(c);
    if (rp == rc) {
      InfluenceDiagram forest(d.variables(), accepted);
      auto path = undirected_path(forest, p, c);
      return ValidationReport::failure(
          "multiply-connected: " + e.parent + " and " + e.child +
          " are joined by two undirected paths (" + join_path(forest, path, "-") +
          " and the edge " + e.parent + "->" + e.child + ")");
    }
    sets.parent[rp] = rc;
    accepted.push_back(e);
  }
  return ValidationReport::pass();
}

bool separated(const InfluenceDiagram& d, const std::string& x,
               const std::string& y, const std::vector<std::string>& gamma) {
  const auto xi = d.index_of(x);
  const auto yi = d.index_of(y);
  if (xi == yi) fail(ErrorCode::InvalidArgument, "separation of a node from itself");
  std::vector<bool> in_gamma(d.size(), false);
  for (const auto& g : gamma) in_gamma[d.index_of(g)] = true;
  if (in_gamma[xi] || in_gamma[yi]) {
    fail(ErrorCode::InvalidArgument, "separating set contains an endpoint");
  }

  bool all_separated = true;
  auto check = [&](const std::vector<std::size_t>& path) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const auto m = path[i];
      if (!in_gamma[m]) continue;
      const bool head_to_head =
          d.has_edge(path[i - 1], m) && d.has_edge(path[i + 1], m);
      if (!head_to_head) return true;
    }
    all_separated = false;
    return false;
  };
  std::vector<bool> on_path(d.size(), false);
  std::vector<std::size_t> path{xi};
  on_path[xi] = true;
  bool stop = false;
  enumerate_paths(d, xi, yi, on_path, path, check, stop);
  return all_separated;
}

Family family(const InfluenceDiagram& d, const std::string& child) {
  const auto c = d.index_of(child);
  Family f{child, {}};
  for (auto p : d.parents(c)) f.parents.push_back(d.variables()[p].name());
  return f;
}

std::vector<std::size_t> undirected_path(const InfluenceDiagram& d,
                                         std::size_t from, std::size_t to) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> prev(d.size(), kNone);
  std::vector<bool> seen(d.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (auto n : d.neighbors(u)) {
      if (!seen[n]) {
        seen[n] = true;
        prev[n] = u;
        queue.push_back(n);
      }
    }
  }
  if (!seen[to]) return {};
  std::vector<std::size_t> path;
  for (auto at = to; at != kNone; at = prev[at]) path.push_back(at);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::string> unique_connector(const InfluenceDiagram& d,
                                            const Family& n,
                                            const std::string& u) {
  const auto ui = d.index_of(u);
  for (const auto& m : n.members()) d.index_of(m);
  if (auto report = validate(d); !report) {
    fail(ErrorCode::NotSinglyConnected, report.message);
  }
  if (n.contains(u)) return u;

  // Breadth-first from u; the first family member reached is the entry point.
  std::vector<bool> seen(d.size(), false);
  std::deque<std::size_t> queue{ui};
  seen[ui] = true;
  while (!queue.empty()) {
    const auto at = queue.front();
    queue.pop_front();
    const auto& name = d.variables()[at].name();
    if (n.contains(name)) return name;
    for (auto nb : d.neighbors(at)) {
      if (!seen[nb]) {
        seen[nb] = true;
        queue.push_back(nb);
      }
    }
  }
  return std::nullopt;
}

}  // namespace spohn
