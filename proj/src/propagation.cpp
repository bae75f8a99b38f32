#include "spohn/propagation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "spohn/error.hpp"

namespace spohn {

namespace {

constexpr auto kNoNode = static_cast<std::size_t>(-1);

std::vector<Rank> member_marginal(const OCF& table, std::size_t member) {
  const auto& space = table.space();
  std::vector<Rank> out(space.variable(member).size(), Rank::infinity());
  for (std::size_t s = 0; s < space.size(); ++s) {
    auto& slot = out[space.value_at(s, member)];
    slot = std::min(slot, table.rank(s));
  }
  return out;
}

// Change from `before` to `after`, entrywise. Entries that are already
// impossible stay impossible.
SignedDelta change(Rank after, Rank before) {
  if (before.is_infinite()) return SignedDelta::infinity();
  return after - before;
}

void require_valid(const SpohnianNetwork& net) {
  if (auto report = validate_network(net); !report) {
    fail(ErrorCode::InvalidNetwork, report.message);
  }
}

std::string deltas_to_string(const std::vector<SignedDelta>& deltas) {
  std::string out = "[";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) out += ',';
    out += to_string(deltas[i]);
  }
  return out + "]";
}

}  // namespace

std::string format_delivery(const Delivery& d) {
  std::ostringstream os;
  os << "seq=" << d.seq << " edge=" << d.message.from << "->" << d.message.to
     << " var=" << d.message.variable
     << " deltas=" << deltas_to_string(d.message.deltas);
  return os.str();
}

// ---- asynchronous certain-evidence engine ---------------------------------

MessageEngine::MessageEngine(const SpohnianNetwork& net,
                             const std::vector<EvidenceSpec>& evidence,
                             Schedule schedule)
    : net_(net), schedule_(schedule), rng_(schedule.seed()) {
  require_valid(net_);
  const auto& d = net_.diagram();
  nodes_.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Node& node = nodes_[i];
    node.parents = d.parents(i);
    node.children = d.children(i);
    const OCF& table = net_.table(i);
    node.table.assign(table.ranks().begin(), table.ranks().end());
    const auto& space = table.space();
    node.value_of.resize(space.arity());
    node.prior.resize(space.arity());
    for (std::size_t m = 0; m < space.arity(); ++m) {
      node.value_of[m].resize(space.size());
      for (std::size_t s = 0; s < space.size(); ++s) {
        node.value_of[m][s] = space.value_at(s, m);
      }
      node.prior[m] = member_marginal(table, m);
    }
    const auto own = d.variables()[i].size();
    node.evidence.assign(own, SignedDelta(0));
    node.from_child.assign(node.children.size(),
                           std::vector<SignedDelta>(own, SignedDelta(0)));
    node.sent_to_child = node.from_child;
    for (auto p : node.parents) {
      node.from_parent.emplace_back(d.variables()[p].size(), SignedDelta(0));
    }
    node.sent_to_parent = node.from_parent;
  }

  for (const auto& e : evidence) {
    if (!e.is_certain()) {
      fail(ErrorCode::InvalidArgument,
           "evidence on '" + e.variable + "' is not certain");
    }
    const auto u = d.index_of(e.variable);
    const auto& var = d.variables()[u];
    if (e.values.empty()) {
      fail(ErrorCode::EmptyProposition, "evidence on '" + e.variable + "' is empty");
    }
    std::vector<SignedDelta> mask(var.size(), SignedDelta::infinity());
    Rank prior = Rank::infinity();
    const auto& own_prior = nodes_[u].prior.back();
    for (const auto& v : e.values) {
      const auto k = var.index_of(v);
      mask[k] = SignedDelta(0);
      prior = std::min(prior, own_prior[k]);
    }
    if (prior.is_infinite()) {
      fail(ErrorCode::ImpossibleEvidence,
           "evidence on '" + e.variable + "' has infinite prior rank");
    }
    queue_.push_back({var.name(), var.name(), var.name(), std::move(mask)});
  }
}

std::size_t MessageEngine::index_of(const std::string& name) const {
  return net_.diagram().index_of(name);
}

std::vector<SignedDelta> MessageEngine::combined(const Node& node,
                                                 std::size_t skip) const {
  std::vector<SignedDelta> own = node.evidence;
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    if (node.children[k] == skip) continue;
    for (std::size_t v = 0; v < own.size(); ++v) own[v] += node.from_child[k][v];
  }
  const auto self = node.value_of.size() - 1;
  std::vector<SignedDelta> out(node.table.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    SignedDelta total = SignedDelta(node.table[s]) + own[node.value_of[self][s]];
    for (std::size_t p = 0; p < node.parents.size(); ++p) {
      if (node.parents[p] == skip) continue;
      total += node.from_parent[p][node.value_of[p][s]];
    }
    out[s] = total;
  }
  return out;
}

std::vector<SignedDelta> MessageEngine::outgoing(std::size_t from,
                                                 std::size_t to) const {
  const Node& node = nodes_[from];
  std::size_t member = node.value_of.size() - 1;
  auto it = std::find(node.parents.begin(), node.parents.end(), to);
  if (it != node.parents.end()) {
    member = static_cast<std::size_t>(it - node.parents.begin());
  }
  const auto values = combined(node, to);
  const auto& prior = node.prior[member];
  std::vector<SignedDelta> best(prior.size(), SignedDelta::infinity());
  for (std::size_t s = 0; s < values.size(); ++s) {
    auto& slot = best[node.value_of[member][s]];
    slot = std::min(slot, values[s]);
  }
  std::vector<SignedDelta> out(prior.size());
  for (std::size_t v = 0; v < prior.size(); ++v) {
    out[v] = prior[v].is_infinite() ? SignedDelta::infinity()
                                    : best[v] - SignedDelta(prior[v]);
  }
  return out;
}

void MessageEngine::apply(const UpdateMessage& message) {
  const auto to = index_of(message.to);
  const auto from = index_of(message.from);
  Node& node = nodes_[to];
  const auto& d = net_.diagram();

  std::vector<SignedDelta>* slot = nullptr;
  std::size_t carrier = to;
  if (from == to) {
    slot = &node.evidence;
  } else if (auto it = std::find(node.parents.begin(), node.parents.end(), from);
             it != node.parents.end()) {
    slot = &node.from_parent[static_cast<std::size_t>(it - node.parents.begin())];
    carrier = from;
  } else if (auto jt = std::find(node.children.begin(), node.children.end(), from);
             jt != node.children.end()) {
    slot = &node.from_child[static_cast<std::size_t>(jt - node.children.begin())];
  } else {
    fail(ErrorCode::InvalidArgument,
         "no link " + message.from + "->" + message.to);
  }
  if (message.variable != d.variables()[carrier].name() ||
      message.deltas.size() != slot->size()) {
    fail(ErrorCode::InvalidArgument, "message " + message.from + "->" +
                                         message.to + " has the wrong shape");
  }
  for (std::size_t v = 0; v < slot->size(); ++v) (*slot)[v] += message.deltas[v];
}

void MessageEngine::fan_out(std::size_t from, std::size_t except) {
  Node& node = nodes_[from];
  const auto& d = net_.diagram();
  auto send = [&](std::size_t to, std::vector<SignedDelta>& last,
                  const std::string& variable) {
    const auto now = outgoing(from, to);
    std::vector<SignedDelta> deltas(now.size());
    bool changed = false;
    for (std::size_t v = 0; v < now.size(); ++v) {
      if (now[v].is_infinite()) {
        changed = changed || last[v].is_finite();
        deltas[v] = SignedDelta::infinity();
      } else if (last[v].is_infinite()) {
        fail(ErrorCode::Internal, "an impossible value became possible again");
      } else {
        deltas[v] = now[v] - last[v];
        changed = changed || deltas[v] != SignedDelta(0);
      }
    }
    if (!changed) return;
    last = now;
    queue_.push_back({d.variables()[from].name(), d.variables()[to].name(),
                      variable, std::move(deltas)});
  };
  for (std::size_t p = 0; p < node.parents.size(); ++p) {
    if (node.parents[p] == except) continue;
    send(node.parents[p], node.sent_to_parent[p],
         d.variables()[node.parents[p]].name());
  }
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    if (node.children[k] == except) continue;
    send(node.children[k], node.sent_to_child[k], d.variables()[from].name());
  }
}

bool MessageEngine::deliver_next() {
  if (queue_.empty()) return false;
  std::size_t pick = 0;
  if (schedule_.policy() == Schedule::Policy::SeededRandom) {
    std::uniform_int_distribution<std::size_t> dist(0, queue_.size() - 1);
    pick = dist(rng_);
  }
  UpdateMessage message = std::move(queue_[pick]);
  queue_.erase(queue_.begin() + static_cast<std::ptrdiff_t>(pick));
  apply(message);
  const auto to = index_of(message.to);
  const auto from = index_of(message.from);
  trace_.push_back({trace_.size() + 1, std::move(message)});
  fan_out(to, from == to ? kNoNode : from);
  return true;
}

void MessageEngine::inject(UpdateMessage message) {
  index_of(message.from);
  index_of(message.to);
  queue_.push_back(std::move(message));
}

SpohnianNetwork MessageEngine::result() const {
  if (!queue_.empty()) {
    fail(ErrorCode::Internal, "result requested before quiescence");
  }
  const auto& d = net_.diagram();
  std::vector<OCF> tables;
  tables.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto values = combined(nodes_[i], kNoNode);
    std::vector<Rank> ranks;
    try {
      ranks = s_normalize(values);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AllInfinite) throw;
      fail(ErrorCode::ContradictoryEvidence,
           "contradictory evidence: no possible state left at '" +
               d.variables()[i].name() + "'");
    }
    tables.emplace_back(net_.table(i).space_ptr(), std::move(ranks));
  }
  return SpohnianNetwork(d, std::move(tables));
}

SpohnianNetwork propagate_certain_multi(const SpohnianNetwork& net,
                                        const std::vector<EvidenceSpec>& evidence,
                                        Schedule schedule, Trace* trace) {
  MessageEngine engine(net, evidence, schedule);
  engine.run();
  if (trace) *trace = engine.trace();
  return engine.result();
}

// ---- single uncertain evidence ----------------------------------------------

SpohnianNetwork propagate_single(const SpohnianNetwork& net,
                                 const EvidenceSpec& evidence, Trace* trace) {
  if (evidence.is_target()) {
    fail(ErrorCode::InvalidArgument,
         "single propagation takes a proposition, not a target marginal");
  }
  if (evidence.is_certain()) {
    return propagate_certain_multi(net, {evidence}, Schedule::fifo(), trace);
  }
  require_valid(net);
  const auto& d = net.diagram();
  const auto u = d.index_of(evidence.variable);
  if (evidence.values.empty()) {
    fail(ErrorCode::EmptyProposition,
         "evidence on '" + evidence.variable + "' is empty");
  }

  const OCF prior_u = marginal(net, evidence.variable);
  const OCF revised_u = revise(
      prior_u,
      Proposition::where(prior_u.space_ptr(), evidence.variable, evidence.values),
      evidence.strength);

  struct Job {
    std::size_t distance;
    std::size_t node;
    std::size_t connector;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto connector = unique_connector(d, net.family_of(i), evidence.variable);
    if (!connector) continue;
    const auto y = d.index_of(*connector);
    jobs.push_back({undirected_path(d, u, y).size() - 1, i, y});
  }
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return a.distance < b.distance;
  });

  // Revised marginals become known as tables are rebuilt; a family only
  // needs its connector's revised marginal, which an earlier family closer
  // to the evidence has already produced.
  std::vector<std::optional<std::vector<Rank>>> revised(d.size());
  std::vector<std::size_t> producer(d.size(), kNoNode);
  revised[u] = std::vector<Rank>(revised_u.ranks().begin(), revised_u.ranks().end());
  producer[u] = u;

  std::vector<OCF> tables = net.tables();
  for (const auto& job : jobs) {
    const OCF& table = net.table(job.node);
    const auto& space = table.space();
    const auto y_name = d.variables()[job.connector].name();
    const auto y_pos = space.position(y_name);
    if (!revised[job.connector]) {
      fail(ErrorCode::Internal, "connector '" + y_name + "' not yet updated");
    }
    const auto& after = *revised[job.connector];
    const auto before = member_marginal(table, y_pos);

    std::vector<Rank> ranks(space.size());
    for (std::size_t s = 0; s < space.size(); ++s) {
      const auto y = space.value_at(s, y_pos);
      ranks[s] = before[y].is_infinite()
                     ? Rank::infinity()
                     : table.rank(s).minus(before[y]) + after[y];
    }
    OCF updated(table.space_ptr(), std::move(ranks));

    if (trace) {
      std::vector<SignedDelta> deltas(before.size());
      for (std::size_t v = 0; v < deltas.size(); ++v) {
        deltas[v] = change(after[v], before[v]);
      }
      trace->push_back({trace->size() + 1,
                        {d.variables()[producer[job.connector]].name(),
                         d.variables()[job.node].name(), y_name,
                         std::move(deltas)}});
    }
    for (std::size_t m = 0; m < space.arity(); ++m) {
      const auto idx = d.index_of(space.variable(m).name());
      if (!revised[idx]) {
        revised[idx] = member_marginal(updated, m);
        producer[idx] = job.node;
      }
    }
    tables[job.node] = std::move(updated);
  }
  return SpohnianNetwork(d, std::move(tables));
}

// ---- multiple uncertain evidence -----------------------------------------------

std::string dummy_name(const InfluenceDiagram& d, const std::string& variable) {
  std::string name = "D_" + variable;
  while (d.contains(name)) name += "_";
  return name;
}

SpohnianNetwork augment_with_dummy(const SpohnianNetwork& net,
                                   const std::string& variable,
                                   const std::vector<Rank>& target) {
  const auto& d = net.diagram();
  const Variable& var = d.variable(variable);
  if (target.size() != var.size()) {
    fail(ErrorCode::InvalidTarget, "target for '" + variable + "' has " +
                                       std::to_string(target.size()) +
                                       " entries, expected " +
                                       std::to_string(var.size()));
  }
  if (*std::min_element(target.begin(), target.end()) != Rank(0)) {
    fail(ErrorCode::InvalidTarget,
         "target for '" + variable + "' must have minimum rank 0");
  }
  const OCF current = marginal(net, variable);
  std::int64_t offset = 0;
  for (std::size_t v = 0; v < var.size(); ++v) {
    const Rank now = current.rank(v);
    if (now.is_infinite() && target[v].is_finite()) {
      fail(ErrorCode::InvalidTarget, "target makes impossible value '" +
                                         var.values()[v] + "' of '" +
                                         variable + "' possible");
    }
    if (now.is_finite() && target[v].is_finite()) {
      offset = std::max(offset, now.value() - target[v].value());
    }
  }

  const Variable dummy(dummy_name(d, variable), dummy_values());
  // Family order: the targeted variable, then the dummy (d fastest).
  std::vector<Rank> ranks;
  ranks.reserve(2 * var.size());
  for (std::size_t v = 0; v < var.size(); ++v) {
    ranks.push_back(target[v] + Rank(offset));
    ranks.push_back(current.rank(v));
  }

  auto variables = d.variables();
  variables.push_back(dummy);
  auto edges = d.edges();
  edges.push_back({variable, dummy.name()});
  auto tables = net.tables();
  tables.emplace_back(make_space({var, dummy}), std::move(ranks));
  return SpohnianNetwork(InfluenceDiagram(std::move(variables), std::move(edges)),
                         std::move(tables));
}

SpohnianNetwork propagate_uncertain_multi(const SpohnianNetwork& net,
                                          const std::vector<Target>& targets,
                                          Schedule schedule, Trace* trace) {
  require_valid(net);
  std::set<std::string> seen;
  for (const auto& t : targets) {
    if (!seen.insert(t.variable).second) {
      fail(ErrorCode::DuplicateTargetVariable,
           "two targets on '" + t.variable + "'");
    }
  }
  SpohnianNetwork augmented = net;
  std::vector<EvidenceSpec> evidence;
  for (const auto& t : targets) {
    const auto name = dummy_name(augmented.diagram(), t.variable);
    augmented = augment_with_dummy(augmented, t.variable, t.ranks);
    evidence.push_back(EvidenceSpec::certain(name, {dummy_values().front()}));
  }
  const auto updated = propagate_certain_multi(augmented, evidence, schedule, trace);
  std::vector<OCF> tables(updated.tables().begin(),
                          updated.tables().begin() +
                              static_cast<std::ptrdiff_t>(net.diagram().size()));
  return SpohnianNetwork(net.diagram(), std::move(tables));
}

}  // namespace spohn
