#include "spohn/ocf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spohn/error.hpp"

namespace spohn {

namespace {

// Keeps state spaces desk-sized; dense tables beyond this are a mistake.
constexpr std::size_t kMaxStates = std::size_t{1} << 26;

void require_same_space(const StateSpace& a, const StateSpace& b,
                        const char* op) {
  if (!(a == b)) {
    fail(ErrorCode::SpaceMismatch,
         std::string(op) + ": propositions and OCF use different spaces");
  }
}

std::vector<std::string> concat(std::initializer_list<
                                const std::vector<std::string>*> parts) {
  std::vector<std::string> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

Variable::Variable(std::string name, std::vector<std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {
  if (name_.empty()) fail(ErrorCode::InvalidArgument, "empty variable name");
  if (values_.size() < 2) {
    fail(ErrorCode::InvalidArgument,
         "variable '" + name_ + "' needs at least two values");
  }
  std::set<std::string> seen;
  for (const auto& v : values_) {
    if (!seen.insert(v).second) {
      fail(ErrorCode::InvalidArgument,
           "variable '" + name_ + "' repeats value '" + v + "'");
    }
  }
}

std::size_t Variable::index_of(const std::string& value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) {
    fail(ErrorCode::UnknownValue,
         "variable '" + name_ + "' has no value '" + value + "'");
  }
  return static_cast<std::size_t>(it - values_.begin());
}

StateSpace::StateSpace(std::vector<Variable> variables)
    : variables_(std::move(variables)), strides_(variables_.size()) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v.name()).second) {
      fail(ErrorCode::InvalidArgument, "duplicate variable '" + v.name() + "'");
    }
  }
  for (std::size_t i = variables_.size(); i-- > 0;) {
    strides_[i] = size_;
    size_ *= variables_[i].size();
    if (size_ > kMaxStates) {
      fail(ErrorCode::InvalidArgument, "state space too large");
    }
  }
}

std::optional<std::size_t> StateSpace::find(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name() == name) return i;
  }
  return std::nullopt;
}

std::size_t StateSpace::position(const std::string& name) const {
  auto pos = find(name);
  if (!pos) fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
  return *pos;
}

std::vector<std::string> StateSpace::names() const {
  std::vector<std::string> out;
  out.reserve(variables_.size());
  for (const auto& v : variables_) out.push_back(v.name());
  return out;
}

std::size_t StateSpace::encode(const State& state) const {
  if (state.values.size() != variables_.size()) {
    fail(ErrorCode::InvalidArgument, "state has wrong number of values");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (state.values[i] >= variables_[i].size()) {
      fail(ErrorCode::UnknownValue, "value index out of range for '" +
                                        variables_[i].name() + "'");
    }
    index += state.values[i] * strides_[i];
  }
  return index;
}

State StateSpace::decode(std::size_t index) const {
  State s;
  s.values.resize(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    s.values[i] = value_at(index, i);
  }
  return s;
}

StateSpace StateSpace::subspace(const std::vector<std::string>& names) const {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (const auto& n : names) vars.push_back(variables_[position(n)]);
  return StateSpace(std::move(vars));
}

std::string StateSpace::describe(std::size_t index) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) os << ' ';
    os << variables_[i].name() << '=' << variables_[i].values()[value_at(index, i)];
  }
  return os.str();
}

SpacePtr make_space(std::vector<Variable> variables) {
  return std::make_shared<const StateSpace>(std::move(variables));
}

std::vector<std::size_t> projection(const StateSpace& from,
                                    const StateSpace& to) {
  std::vector<std::size_t> from_pos(to.arity());
  for (std::size_t j = 0; j < to.arity(); ++j) {
    const auto& v = to.variable(j);
    from_pos[j] = from.position(v.name());
    if (!(from.variable(from_pos[j]) == v)) {
      fail(ErrorCode::SpaceMismatch,
           "variable '" + v.name() + "' has different domains");
    }
  }
  std::vector<std::size_t> out(from.size());
  for (std::size_t s = 0; s < from.size(); ++s) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < to.arity(); ++j) {
      idx += from.value_at(s, from_pos[j]) * to.stride(j);
    }
    out[s] = idx;
  }
  return out;
}

// ---- Proposition ---------------------------------------------------------

Proposition::Proposition(SpacePtr space, std::vector<bool> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_) fail(ErrorCode::InvalidArgument, "proposition without space");
  if (members_.size() != space_->size()) {
    fail(ErrorCode::InvalidArgument, "proposition size does not match space");
  }
}

Proposition Proposition::everything(SpacePtr space) {
  auto n = space->size();
  return Proposition(std::move(space), std::vector<bool>(n, true));
}

Proposition Proposition::nothing(SpacePtr space) {
  auto n = space->size();
  return Proposition(std::move(space), std::vector<bool>(n, false));
}

Proposition Proposition::where(SpacePtr space, const std::string& variable,
                               const std::vector<std::string>& values) {
  const auto pos = space->position(variable);
  const auto& var = space->variable(pos);
  std::vector<bool> allowed(var.size(), false);
  for (const auto& v : values) allowed[var.index_of(v)] = true;
  std::vector<bool> members(space->size());
  for (std::size_t s = 0; s < space->size(); ++s) {
    members[s] = allowed[space->value_at(s, pos)];
  }
  return Proposition(std::move(space), std::move(members));
}

Proposition Proposition::from_indices(SpacePtr space,
                                      const std::vector<std::size_t>& states) {
  std::vector<bool> members(space->size(), false);
  for (auto s : states) members.at(s) = true;
  return Proposition(std::move(space), std::move(members));
}

std::size_t Proposition::count() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), true));
}

Proposition Proposition::complement() const {
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = !members_[i];
  return Proposition(space_, std::move(m));
}

Proposition operator&(const Proposition& a, const Proposition& b) {
  require_same_space(*a.space_, *b.space_, "conjunction");
  std::vector<bool> m(a.members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.members_[i] && b.members_[i];
  return Proposition(a.space_, std::move(m));
}

Proposition operator|(const Proposition& a, const Proposition& b) {
  require_same_space(*a.space_, *b.space_, "disjunction");
  std::vector<bool> m(a.members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.members_[i] || b.members_[i];
  return Proposition(a.space_, std::move(m));
}

bool operator==(const Proposition& a, const Proposition& b) {
  return *a.space_ == *b.space_ && a.members_ == b.members_;
}

// ---- OCF -----------------------------------------------------------------

OCF::OCF(SpacePtr space, std::vector<Rank> ranks, NoCheck)
    : space_(std::move(space)), ranks_(std::move(ranks)) {
  if (!space_) fail(ErrorCode::InvalidOcf, "OCF without space");
  if (ranks_.size() != space_->size()) {
    fail(ErrorCode::InvalidOcf,
         "OCF has " + std::to_string(ranks_.size()) + " ranks for " +
             std::to_string(space_->size()) + " states");
  }
}

OCF::OCF(SpacePtr space, std::vector<Rank> ranks)
    : OCF(std::move(space), std::move(ranks), NoCheck{}) {
  if (!is_valid()) {
    fail(ErrorCode::InvalidOcf, "OCF minimum rank is not 0");
  }
}

OCF OCF::unchecked(SpacePtr space, std::vector<Rank> ranks) {
  return OCF(std::move(space), std::move(ranks), NoCheck{});
}

OCF OCF::over(const Variable& variable, std::vector<Rank> ranks) {
  return OCF(make_space({variable}), std::move(ranks));
}

bool OCF::is_valid() const {
  return *std::min_element(ranks_.begin(), ranks_.end()) == Rank(0);
}

// ---- operations ----------------------------------------------------------

Rank rank_of(const OCF& kappa, const Proposition& a) {
  require_same_space(kappa.space(), a.space(), "rank_of");
  Rank best = Rank::infinity();
  bool any = false;
  for (std::size_t s = 0; s < kappa.space().size(); ++s) {
    if (a.contains(s)) {
      any = true;
      best = std::min(best, kappa.rank(s));
    }
  }
  if (!any) fail(ErrorCode::EmptyProposition, "rank of the empty proposition");
  return best;
}

BeliefStrength belief_strength(const OCF& kappa, const Proposition& a) {
  if (a.empty()) {
    fail(ErrorCode::EmptyProposition, "belief strength of empty proposition");
  }
  if (a.full()) {
    fail(ErrorCode::FullProposition,
         "belief strength is defined for proper subsets only");
  }
  const Rank ka = rank_of(kappa, a);
  if (ka > Rank(0)) return BeliefStrength::negated(ka);
  return BeliefStrength::from_rank(rank_of(kappa, a.complement()));
}

bool is_believed(const OCF& kappa, const Proposition& a) {
  require_same_space(kappa.space(), a.space(), "is_believed");
  for (std::size_t s = 0; s < kappa.space().size(); ++s) {
    if (kappa.rank(s) == Rank(0) && !a.contains(s)) return false;
  }
  return true;
}

OCF revise(const OCF& kappa, const Proposition& p, Rank alpha) {
  if (alpha.is_infinite()) return revise_certain(kappa, p);
  const Rank kp = rank_of(kappa, p);
  if (kp.is_infinite()) {
    fail(ErrorCode::ImpossibleEvidence,
         "cannot learn a proposition of infinite rank with finite strength");
  }
  if (p.full()) return kappa;
  const Rank knp = rank_of(kappa, p.complement());
  std::vector<Rank> out(kappa.space().size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const Rank r = kappa.rank(s);
    if (p.contains(s)) {
      out[s] = r.minus(kp);
    } else if (knp.is_infinite() || r.is_infinite()) {
      out[s] = Rank::infinity();
    } else {
      out[s] = r.minus(knp) + alpha;
    }
  }
  return OCF(kappa.space_ptr(), std::move(out));
}

OCF revise(const OCF& kappa, const Proposition& p, BeliefStrength strength) {
  switch (strength.kind()) {
    case BeliefStrength::Kind::PlusInfinity:
      return revise_certain(kappa, p);
    case BeliefStrength::Kind::MinusInfinity:
      return revise_certain(kappa, p.complement());
    case BeliefStrength::Kind::Finite:
      break;
  }
  if (strength.value() < 0) {
    if (p.full()) {
      fail(ErrorCode::EmptyProposition, "cannot disbelieve the full space");
    }
    return revise(kappa, p.complement(), Rank(-strength.value()));
  }
  return revise(kappa, p, Rank(strength.value()));
}

OCF revise_certain(const OCF& kappa, const Proposition& p) {
  const Rank kp = rank_of(kappa, p);
  if (kp.is_infinite()) {
    fail(ErrorCode::ImpossibleEvidence,
         "cannot learn a proposition of infinite rank");
  }
  std::vector<Rank> out(kappa.space().size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = p.contains(s) ? kappa.rank(s).minus(kp) : Rank::infinity();
  }
  return OCF(kappa.space_ptr(), std::move(out));
}

Rank cond_rank(const OCF& kappa, const Proposition& x, const Proposition& y) {
  if (y.empty()) fail(ErrorCode::EmptyCondition, "condition is empty");
  const Rank ky = rank_of(kappa, y);
  if (ky.is_infinite()) fail(ErrorCode::EmptyCondition, "condition is impossible");
  const Proposition xy = x & y;
  if (xy.empty()) return Rank::infinity();
  return rank_of(kappa, xy).minus(ky);
}

OCF marginalize(const OCF& kappa, const std::vector<std::string>& variables) {
  if (variables.empty()) {
    fail(ErrorCode::InvalidArgument, "marginal over no variables");
  }
  auto sub = make_space(kappa.space().subspace(variables).variables());
  const auto proj = projection(kappa.space(), *sub);
  std::vector<Rank> out(sub->size(), Rank::infinity());
  for (std::size_t s = 0; s < proj.size(); ++s) {
    out[proj[s]] = std::min(out[proj[s]], kappa.rank(s));
  }
  // The marginal of an OCF has minimum 0 whenever the input does; unchecked
  // inputs stay unchecked.
  if (!kappa.is_valid()) return OCF::unchecked(std::move(sub), std::move(out));
  return OCF(std::move(sub), std::move(out));
}

bool is_independent(const OCF& kappa, const std::string& x,
                    const std::string& y, const std::vector<std::string>& z) {
  return is_independent(kappa, std::vector<std::string>{x},
                        std::vector<std::string>{y}, z);
}

bool is_independent(const OCF& kappa, const std::vector<std::string>& xs,
                    const std::vector<std::string>& ys,
                    const std::vector<std::string>& zs) {
  if (xs.empty() || ys.empty()) {
    fail(ErrorCode::InvalidArgument, "independence needs nonempty X and Y");
  }
  const auto all = concat({&xs, &ys, &zs});
  {
    std::set<std::string> uniq(all.begin(), all.end());
    if (uniq.size() != all.size()) {
      fail(ErrorCode::InvalidArgument, "X, Y and Z must be disjoint");
    }
  }
  const OCF xyz = marginalize(kappa, all);
  const OCF yz = marginalize(xyz, concat({&ys, &zs}));
  const OCF xz = marginalize(xyz, concat({&xs, &zs}));
  const auto to_yz = projection(xyz.space(), yz.space());
  const auto to_xz = projection(xyz.space(), xz.space());
  std::optional<OCF> z_only;
  std::vector<std::size_t> xz_to_z;
  if (!zs.empty()) {
    z_only = marginalize(xyz, zs);
    xz_to_z = projection(xz.space(), z_only->space());
  }

  for (std::size_t s = 0; s < xyz.space().size(); ++s) {
    const Rank k_yz = yz.rank(to_yz[s]);
    if (k_yz.is_infinite()) continue;
    const SignedDelta given_yz = xyz.rank(s) - k_yz;
    const std::size_t xz_idx = to_xz[s];
    const Rank k_z = z_only ? z_only->rank(xz_to_z[xz_idx]) : Rank(0);
    const SignedDelta given_z = xz.rank(xz_idx) - k_z;
    if (given_yz != given_z) return false;
  }
  return true;
}

std::vector<Rank> s_normalize(std::span<const SignedDelta> values) {
  std::optional<SignedDelta> lowest;
  for (const auto& v : values) {
    if (v.is_finite() && (!lowest || v < *lowest)) lowest = v;
  }
  if (!lowest) {
    fail(ErrorCode::AllInfinite, "s-normalization of an all-infinite vector");
  }
  std::vector<Rank> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back((v - *lowest).to_rank());
  return out;
}

}  // namespace spohn
