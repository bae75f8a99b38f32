#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spohn/rank.hpp"

namespace spohn {

/// A multi-valued variable with an ordered domain of at least two values.
class Variable {
 public:
  Variable(std::string name, std::vector<std::string> values);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Index of `value` in the domain; throws UnknownValue.
  std::size_t index_of(const std::string& value) const;

  friend bool operator==(const Variable&, const Variable&) = default;

 private:
  std::string name_;
  std::vector<std::string> values_;
};

/// One value index per variable of a StateSpace.
struct State {
  std::vector<std::size_t> values;
  friend bool operator==(const State&, const State&) = default;
};

/**
 * Cartesian product of variable domains.
 *
 * States are numbered by a mixed-radix encoding in declared variable order,
 * row-major: the last variable varies fastest.
 */
class StateSpace {
 public:
  explicit StateSpace(std::vector<Variable> variables);

  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(std::size_t pos) const { return variables_.at(pos); }
  std::size_t arity() const { return variables_.size(); }
  std::size_t size() const { return size_; }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Position of `name`; throws UnknownVariable.
  std::size_t position(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }
  std::vector<std::string> names() const;

  std::size_t encode(const State& state) const;
  State decode(std::size_t index) const;
  std::size_t value_at(std::size_t index, std::size_t pos) const {
    return (index / strides_[pos]) % variables_[pos].size();
  }
  std::size_t stride(std::size_t pos) const { return strides_[pos]; }

  /// The space over `names` in the given order; throws UnknownVariable.
  StateSpace subspace(const std::vector<std::string>& names) const;

  /// "a=x b=y" rendering of a state.
  std::string describe(std::size_t index) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.variables_ == b.variables_;
  }

 private:
  std::vector<Variable> variables_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

SpacePtr make_space(std::vector<Variable> variables);

/// For every state of `from`, the index of its restriction in `to`.
/// Every variable of `to` must occur in `from`.
std::vector<std::size_t> projection(const StateSpace& from,
                                    const StateSpace& to);

/// A set of states of a space.
class Proposition {
 public:
  Proposition(SpacePtr space, std::vector<bool> members);

  static Proposition everything(SpacePtr space);
  static Proposition nothing(SpacePtr space);
  /// States where `variable` takes one of `values`.
  static Proposition where(SpacePtr space, const std::string& variable,
                           const std::vector<std::string>& values);
  static Proposition from_indices(SpacePtr space,
                                  const std::vector<std::size_t>& states);

  const StateSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  bool contains(std::size_t state) const { return members_.at(state); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool full() const { return count() == members_.size(); }

  Proposition complement() const;
  friend Proposition operator&(const Proposition& a, const Proposition& b);
  friend Proposition operator|(const Proposition& a, const Proposition& b);
  friend bool operator==(const Proposition& a, const Proposition& b);

 private:
  SpacePtr space_;
  std::vector<bool> members_;
};

/**
 * Ordinal conditional function: a rank for every state of a space, with at
 * least one state at rank 0.
 */
class OCF {
 public:
  /// Throws InvalidOcf unless sizes match and the minimum rank is 0.
  OCF(SpacePtr space, std::vector<Rank> ranks);

  /// Skips the minimum-zero check. Only for holding externally supplied
  /// tables until they have been validated; see is_valid().
  static OCF unchecked(SpacePtr space, std::vector<Rank> ranks);

  /// Single-variable OCF.
  static OCF over(const Variable& variable, std::vector<Rank> ranks);

  const StateSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::span<const Rank> ranks() const { return ranks_; }
  Rank rank(std::size_t state) const { return ranks_.at(state); }
  Rank rank(const State& state) const { return ranks_.at(space_->encode(state)); }

  bool is_valid() const;

  friend bool operator==(const OCF& a, const OCF& b) {
    return *a.space_ == *b.space_ && a.ranks_ == b.ranks_;
  }

 private:
  struct NoCheck {};
  OCF(SpacePtr space, std::vector<Rank> ranks, NoCheck);

  SpacePtr space_;
  std::vector<Rank> ranks_;
};

/// kappa(A) = min over members; throws EmptyProposition.
Rank rank_of(const OCF& kappa, const Proposition& a);

/// -kappa(A) if kappa(A) > 0, else kappa(not A). A must be a nonempty proper
/// subset (EmptyProposition / FullProposition).
BeliefStrength belief_strength(const OCF& kappa, const Proposition& a);

/// True iff every rank-0 state lies in A.
bool is_believed(const OCF& kappa, const Proposition& a);

/// Learns P with strength alpha. States in P drop by kappa(P); states outside
/// P move so that not-P ends at alpha. P = everything leaves kappa unchanged,
/// and alpha = infinity delegates to revise_certain. States already at
/// infinity outside P stay there.
OCF revise(const OCF& kappa, const Proposition& p, Rank alpha);

/// Learns P so that afterwards its belief strength is `strength`. A negative
/// strength means learning not-P with the opposite strength; this is the form
/// needed to undo a revision.
OCF revise(const OCF& kappa, const Proposition& p, BeliefStrength strength);

/// kappa conditioned on P: P-states shifted by kappa(P), others at infinity.
OCF revise_certain(const OCF& kappa, const Proposition& p);

/// kappa(x and y) - kappa(y); throws EmptyCondition if y is empty or
/// impossible.
Rank cond_rank(const OCF& kappa, const Proposition& x, const Proposition& y);

/// Marginal over `variables`, in that order.
OCF marginalize(const OCF& kappa, const std::vector<std::string>& variables);

/**
 * X independent of Y given Z: kappa(x | y, z) = kappa(x | z) for every value
 * combination whose conditioning rank kappa(y, z) is finite. Cells with
 * kappa(y, z) = infinity carry no conditional and are skipped.
 */
bool is_independent(const OCF& kappa, const std::string& x,
                    const std::string& y, const std::vector<std::string>& z);

/// Set-valued form of is_independent.
bool is_independent(const OCF& kappa, const std::vector<std::string>& xs,
                    const std::vector<std::string>& ys,
                    const std::vector<std::string>& zs);

/// Subtracts the (finite) minimum from every entry. Throws AllInfinite when
/// no entry is finite.
std::vector<Rank> s_normalize(std::span<const SignedDelta> values);

}  // namespace spohn
