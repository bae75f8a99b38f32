#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "spohn/evidence.hpp"
#include "spohn/network.hpp"

namespace spohn {

/// Per-value change in the implausibility of `variable`, sent from node
/// `from` to node `to`. Evidence enters as a message from a node to itself.
struct UpdateMessage {
  std::string from;
  std::string to;
  std::string variable;
  std::vector<SignedDelta> deltas;
};

struct Delivery {
  std::size_t seq = 0;
  UpdateMessage message;
};

using Trace = std::vector<Delivery>;

/// `seq=<n> edge=<from>-><to> var=<Y> deltas=[...]`
std::string format_delivery(const Delivery& d);

/// Order in which pending messages are delivered.
class Schedule {
 public:
  enum class Policy { Fifo, SeededRandom };

  static Schedule fifo() { return Schedule(Policy::Fifo, 0); }
  static Schedule seeded(std::uint64_t seed) {
    return Schedule(Policy::SeededRandom, seed);
  }

  Policy policy() const { return policy_; }
  std::uint64_t seed() const { return seed_; }

 private:
  Schedule(Policy policy, std::uint64_t seed) : policy_(policy), seed_(seed) {}
  Policy policy_;
  std::uint64_t seed_;
};

/**
 * Asynchronous propagation of certain evidence.
 *
 * Every node keeps its family table plus the accumulated deltas received
 * from each neighbor and from its own evidence. Whenever a node receives a
 * message it recomputes what it would tell each other neighbor and sends the
 * change since its last message on that link. At quiescence each node adds
 * everything it received to its table and s-normalizes.
 *
 * Node state is written only by deliveries addressed to that node, and each
 * message is delivered exactly once.
 */
class MessageEngine {
 public:
  /// All evidence must be certain. Throws InvalidNetwork,
  /// ImpossibleEvidence, EmptyProposition, UnknownVariable.
  MessageEngine(const SpohnianNetwork& net,
                const std::vector<EvidenceSpec>& evidence, Schedule schedule);

  /// Delivers one pending message. Returns false when nothing is pending.
  bool deliver_next();
  void run() {
    while (deliver_next()) {
    }
  }

  std::size_t pending() const { return queue_.size(); }

  /// Queues an extra message. Used to exercise the protocol's tolerance of
  /// uniform offsets; a message must travel along a diagram edge or be a
  /// self-message on the sender's own variable.
  void inject(UpdateMessage message);

  const Trace& trace() const { return trace_; }

  /// Final network; requires quiescence. Throws ContradictoryEvidence if a
  /// node has no possible state left.
  SpohnianNetwork result() const;

 private:
  struct Node {
    std::vector<std::size_t> parents;
    std::vector<std::size_t> children;
    std::vector<Rank> table;
    // value_of[m][s]: value index of family member m in family state s;
    // the child is the last member.
    std::vector<std::vector<std::size_t>> value_of;
    std::vector<std::vector<Rank>> prior;  // per family member
    std::vector<SignedDelta> evidence;
    std::vector<std::vector<SignedDelta>> from_parent;
    std::vector<std::vector<SignedDelta>> from_child;
    std::vector<std::vector<SignedDelta>> sent_to_parent;
    std::vector<std::vector<SignedDelta>> sent_to_child;
  };

  std::vector<SignedDelta> combined(const Node& node,
                                    std::size_t skip_neighbor) const;
  std::vector<SignedDelta> outgoing(std::size_t node, std::size_t to) const;
  void apply(const UpdateMessage& message);
  void fan_out(std::size_t node, std::size_t except);
  std::size_t index_of(const std::string& name) const;

  SpohnianNetwork net_;
  std::vector<Node> nodes_;
  std::deque<UpdateMessage> queue_;
  Schedule schedule_;
  std::mt19937_64 rng_;
  Trace trace_;
};

/// Updates the network on one piece of evidence by pushing each node's
/// revised marginal outward from the evidence variable; every family table
/// is rebuilt as kappa(rest | connector) + kappa'(connector). Certain
/// evidence is routed through propagate_certain_multi.
SpohnianNetwork propagate_single(const SpohnianNetwork& net,
                                 const EvidenceSpec& evidence,
                                 Trace* trace = nullptr);

SpohnianNetwork propagate_certain_multi(const SpohnianNetwork& net,
                                        const std::vector<EvidenceSpec>& evidence,
                                        Schedule schedule = Schedule::fifo(),
                                        Trace* trace = nullptr);

/// Name given to the dummy child of `variable` by augment_with_dummy.
std::string dummy_name(const InfluenceDiagram& d, const std::string& variable);

/// Value labels of a dummy node; the first is the observed one.
inline const std::vector<std::string>& dummy_values() {
  static const std::vector<std::string> values{"d", "not-d"};
  return values;
}

/**
 * Adds a binary child D of `variable` whose table is
 * kappa(v, d) = target(v) + k, kappa(v, not-d) = kappa(v), with
 * k = max(0, max_v(kappa(v) - target(v))). Then kappa(v | d) = target(v) and
 * the marginal of `variable` is unchanged.
 */
SpohnianNetwork augment_with_dummy(const SpohnianNetwork& net,
                                   const std::string& variable,
                                   const std::vector<Rank>& target);

struct Target {
  std::string variable;
  std::vector<Rank> ranks;
};

/**
 * Combines independent uncertain reports on several variables: one dummy
 * child per target, certain evidence on every dummy, then the dummies are
 * dropped. When the targeted variables depend on each other the final
 * marginals generally differ from the targets.
 */
SpohnianNetwork propagate_uncertain_multi(const SpohnianNetwork& net,
                                          const std::vector<Target>& targets,
                                          Schedule schedule = Schedule::fifo(),
                                          Trace* trace = nullptr);

}  // namespace spohn
