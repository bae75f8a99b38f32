#include "spohn/oracle.hpp"

#include <sstream>

#include "spohn/error.hpp"

namespace spohn {

namespace {

Proposition evidence_proposition(const OCF& kappa, const EvidenceSpec& e) {
  if (e.values.empty()) {
    fail(ErrorCode::EmptyProposition, "evidence on '" + e.variable + "' is empty");
  }
  return Proposition::where(kappa.space_ptr(), e.variable, e.values);
}

OCF shift_to_target(const OCF& kappa, const EvidenceSpec& e) {
  const auto& target = *e.target;
  const auto current = marginalize(kappa, {e.variable});
  if (target.size() != current.space().size()) {
    fail(ErrorCode::InvalidTarget, "target for '" + e.variable + "' has the wrong size");
  }
  const auto to_var = projection(kappa.space(), current.space());
  std::vector<Rank> out(kappa.space().size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto v = to_var[s];
    const Rank before = current.rank(v);
    if (before.is_infinite()) {
      if (target[v].is_finite()) {
        fail(ErrorCode::ImpossibleEvidence,
             "target raises an impossible value of '" + e.variable + "'");
      }
      out[s] = Rank::infinity();
    } else {
      out[s] = kappa.rank(s).minus(before) + target[v];
    }
  }
  return OCF(kappa.space_ptr(), std::move(out));
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

}  // namespace

OCF oracle_revise(const OCF& kappa, const std::vector<EvidenceSpec>& evidence) {
  OCF current = kappa;
  for (const auto& e : evidence) {
    if (e.is_target()) {
      current = shift_to_target(current, e);
    } else {
      current = revise(current, evidence_proposition(current, e), e.strength);
    }
  }
  return current;
}

OCF oracle_condition(const OCF& kappa, const std::vector<EvidenceSpec>& evidence) {
  Proposition all = Proposition::everything(kappa.space_ptr());
  for (const auto& e : evidence) {
    const auto p = evidence_proposition(kappa, e);
    if (rank_of(kappa, p).is_infinite()) {
      fail(ErrorCode::ImpossibleEvidence,
           "evidence on '" + e.variable + "' has infinite prior rank");
    }
    all = all & p;
  }
  if (all.empty() || rank_of(kappa, all).is_infinite()) {
    fail(ErrorCode::ContradictoryEvidence, "the evidence is jointly impossible");
  }
  return revise_certain(kappa, all);
}

OracleReport compare(const SpohnianNetwork& net_result, const OCF& oracle_joint) {
  return compare(net_result, from_joint(oracle_joint, net_result.diagram()));
}

OracleReport compare(const SpohnianNetwork& net_result, const SpohnianNetwork& expected) {
  const auto& d = net_result.diagram();
  if (!(*d.space() == *expected.diagram().space())) {
    fail(ErrorCode::SpaceMismatch, "networks are over different variables");
  }
  OracleReport report;
  for (std::size_t i = 0; i < d.size() && report.passed; ++i) {
    const OCF& got = net_result.table(i);
    const OCF& want = expected.table(i);
    if (!(got.space() == want.space())) {
      fail(ErrorCode::SpaceMismatch, "networks have different families");
    }
    for (std::size_t s = 0; s < want.space().size(); ++s) {
      if (got.rank(s) != want.rank(s)) {
        report.passed = false;
        report.first_divergence = Divergence{d.variables()[i].name(),
                                             want.space().describe(s),
                                             got.rank(s), want.rank(s)};
        break;
      }
    }
  }
  return report;
}

OracleReport independence_audit(const OCF& kappa, const InfluenceDiagram& d) {
  from_joint(kappa, d);  // space check
  OracleReport report;
  const auto n = d.size();
  std::vector<std::string> names;
  for (const auto& v : d.variables()) names.push_back(v.name());

  auto record = [&](std::size_t x, std::size_t y,
                    const std::vector<std::string>& gamma) {
    report.independence_audit.push_back(
        {names[x], names[y], gamma, separated(d, names[x], names[y], gamma),
         is_independent(kappa, names[x], names[y], gamma)});
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      std::vector<std::size_t> others;
      for (std::size_t g = 0; g < n; ++g) {
        if (g != x && g != y) others.push_back(g);
      }
      record(x, y, {});
      for (std::size_t a = 0; a < others.size(); ++a) {
        record(x, y, {names[others[a]]});
        for (std::size_t b = a + 1; b < others.size(); ++b) {
          record(x, y, {names[others[a]], names[others[b]]});
        }
      }
    }
  }
  return report;
}

SpohnianNetwork oracle_propagate(const SpohnianNetwork& net,
                                 const std::vector<EvidenceSpec>& evidence,
                                 PropagationMode mode) {
  const auto& d = net.diagram();
  switch (mode) {
    case PropagationMode::Single:
      return from_joint(oracle_revise(joint(net), evidence), d);
    case PropagationMode::Certain:
      return from_joint(oracle_condition(joint(net), evidence), d);
    case PropagationMode::Uncertain:
      break;
  }
  SpohnianNetwork augmented = net;
  std::vector<EvidenceSpec> observations;
  for (const auto& e : evidence) {
    if (!e.is_target()) {
      fail(ErrorCode::InvalidArgument, "uncertain mode needs target marginals");
    }
    const auto name = dummy_name(augmented.diagram(), e.variable);
    augmented = augment_with_dummy(augmented, e.variable, *e.target);
    observations.push_back(EvidenceSpec::certain(name, {dummy_values().front()}));
  }
  const OCF conditioned = oracle_condition(joint(augmented), observations);
  std::vector<std::string> names;
  for (const auto& v : d.variables()) names.push_back(v.name());
  return from_joint(marginalize(conditioned, names), d);
}

std::string render(const OracleReport& report) {
  std::ostringstream os;
  os << "result: " << (report.passed ? "pass" : "fail") << '\n';
  if (const auto& div = report.first_divergence) {
    os << "divergence: node=" << div->node << " state=[" << div->state
       << "] engine=" << div->engine << " oracle=" << div->oracle << '\n';
  }
  for (const auto& r : report.independence_audit) {
    os << "independence: " << r.x << " " << r.y << " given={" << join(r.gamma)
       << "} separated=" << (r.separated ? "yes" : "no")
       << " independent=" << (r.independent ? "yes" : "no") << '\n';
  }
  return os.str();
}

}  // namespace spohn
