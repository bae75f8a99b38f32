// Command-line front end: validate, query, propagate, compare.
//
// Exit codes: 0 ok, 1 validation/parse failure (or oracle mismatch),
// 2 contradictory evidence, 3 internal invariant breach.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spohn/document.hpp"
#include "spohn/error.hpp"
#include "spohn/network.hpp"
#include "spohn/oracle.hpp"
#include "spohn/propagation.hpp"

namespace {

using namespace spohn;

constexpr double kMaxOracleBits = 12.0;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ContradictoryEvidence: return 2;
    case ErrorCode::Internal:
    case ErrorCode::Overflow: return 3;
    default: return 1;
  }
}

SpohnianNetwork load_valid_network(const std::string& path) {
  auto net = parse_network(read_file(path));
  if (auto report = validate_network(net); !report) {
    fail(ErrorCode::InvalidNetwork, "invalid network: " + report.message);
  }
  return net;
}

PropagationMode parse_mode(const std::string& mode) {
  if (mode == "single") return PropagationMode::Single;
  if (mode == "certain") return PropagationMode::Certain;
  if (mode == "uncertain") return PropagationMode::Uncertain;
  fail(ErrorCode::InvalidArgument, "unknown mode '" + mode + "'");
}

void check_evidence_for_mode(const std::vector<EvidenceSpec>& evidence,
                             PropagationMode mode) {
  if (evidence.empty()) fail(ErrorCode::InvalidArgument, "no evidence given");
  for (const auto& e : evidence) {
    switch (mode) {
      case PropagationMode::Single:
        if (e.is_target()) {
          fail(ErrorCode::InvalidArgument, "single mode takes values, not targets");
        }
        break;
      case PropagationMode::Certain:
        if (!e.is_certain()) {
          fail(ErrorCode::InvalidArgument,
               "certain mode needs strength \"inf\" on every entry");
        }
        break;
      case PropagationMode::Uncertain:
        if (!e.is_target()) {
          fail(ErrorCode::InvalidArgument, "uncertain mode needs target marginals");
        }
        break;
    }
  }
}

SpohnianNetwork run_engine(const SpohnianNetwork& net,
                           const std::vector<EvidenceSpec>& evidence,
                           PropagationMode mode, Schedule schedule, Trace* trace) {
  switch (mode) {
    case PropagationMode::Single: {
      // Entries are applied one after another.
      SpohnianNetwork current = net;
      for (const auto& e : evidence) {
        Trace step;
        current = propagate_single(current, e, trace ? &step : nullptr);
        if (trace) {
          for (auto& d : step) {
            d.seq = trace->size() + 1;
            trace->push_back(std::move(d));
          }
        }
      }
      return current;
    }
    case PropagationMode::Certain:
      return propagate_certain_multi(net, evidence, schedule, trace);
    case PropagationMode::Uncertain: {
      std::vector<Target> targets;
      for (const auto& e : evidence) targets.push_back({e.variable, *e.target});
      return propagate_uncertain_multi(net, targets, schedule, trace);
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

std::string format_ranks(const OCF& kappa) {
  std::string out;
  const auto& var = kappa.space().variable(0);
  for (std::size_t v = 0; v < var.size(); ++v) {
    if (v) out += ' ';
    out += var.values()[v] + ":" + to_string(kappa.rank(v));
  }
  return out;
}

int cmd_validate(const std::string& path) {
  const auto net = parse_network(read_file(path));
  const auto report = validate_network(net);
  if (!report) {
    std::cout << "invalid: " << report.message << '\n';
    return 1;
  }
  std::cout << "valid\n";
  return 0;
}

struct QueryArgs {
  std::string network;
  std::string marginal_of;
  bool joint = false;
  std::string believe;
  std::string beta;
};

int cmd_query(const QueryArgs& args) {
  const auto net = load_valid_network(args.network);
  if (!args.marginal_of.empty()) {
    std::cout << format_ranks(marginal(net, args.marginal_of)) << '\n';
  }
  if (args.joint) {
    const OCF kappa = joint(net);
    for (std::size_t s = 0; s < kappa.space().size(); ++s) {
      std::cout << kappa.space().describe(s) << ": " << kappa.rank(s) << '\n';
    }
  }
  if (!args.believe.empty() || !args.beta.empty()) {
    const OCF kappa = joint(net);
    if (!args.believe.empty()) {
      const auto p = parse_proposition(kappa.space_ptr(), args.believe);
      const bool believed = is_believed(kappa, p);
      std::cout << (believed ? "believed" : "not believed");
      if (!p.empty() && !p.full()) {
        std::cout << " (beta=" << belief_strength(kappa, p) << ")";
      }
      std::cout << '\n';
    }
    if (!args.beta.empty()) {
      const auto p = parse_proposition(kappa.space_ptr(), args.beta);
      std::cout << belief_strength(kappa, p) << '\n';
    }
  }
  return 0;
}

struct RunArgs {
  std::string network;
  std::string evidence;
  std::string mode = "single";
  std::optional<std::uint64_t> seed;
  bool trace = false;
  std::string output;
  std::string result;
};

Schedule schedule_for(const RunArgs& args) {
  return args.seed ? Schedule::seeded(*args.seed) : Schedule::fifo();
}

int cmd_propagate(const RunArgs& args) {
  const auto net = load_valid_network(args.network);
  const auto evidence = parse_evidence(read_file(args.evidence));
  const auto mode = parse_mode(args.mode);
  check_evidence_for_mode(evidence, mode);
  Trace trace;
  const auto updated =
      run_engine(net, evidence, mode, schedule_for(args), args.trace ? &trace : nullptr);
  const auto doc = serialize_network(updated);
  if (args.output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + args.output + "'");
    out << doc;
  }
  for (const auto& d : trace) std::cerr << format_delivery(d) << '\n';
  return 0;
}

int cmd_compare(const RunArgs& args) {
  const auto net = load_valid_network(args.network);
  double bits = 0;
  for (const auto& v : net.diagram().variables()) {
    bits += std::log2(static_cast<double>(v.size()));
  }
  if (bits > kMaxOracleBits + 1e-9) {
    fail(ErrorCode::TooLargeForOracle,
         "network has " + std::to_string(bits) + " state-space bits; the oracle "
         "accepts at most 12");
  }
  const auto evidence = parse_evidence(read_file(args.evidence));
  const auto mode = parse_mode(args.mode);
  check_evidence_for_mode(evidence, mode);

  const auto engine = args.result.empty()
                          ? run_engine(net, evidence, mode, schedule_for(args), nullptr)
                          : parse_network(read_file(args.result));
  const auto expected = oracle_propagate(net, evidence, mode);
  const auto report = compare(engine, expected);
  std::cout << render(report);
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranking-function belief networks: validation, queries, propagation"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a network document");
  validate_cmd->add_option("network", validate_path, "Network file")->required();

  QueryArgs query;
  auto* query_cmd = app.add_subcommand("query", "Print ranks or belief strengths");
  query_cmd->add_option("network", query.network, "Network file")->required();
  query_cmd->add_option("--marginal", query.marginal_of, "Marginal of a variable");
  query_cmd->add_flag("--joint", query.joint, "Full joint ranking");
  query_cmd->add_option("--believe", query.believe,
                        "Is VAR=v1,v2&VAR2=... believed");
  query_cmd->add_option("--beta", query.beta, "Belief strength of a proposition");

  RunArgs run;
  auto add_run_options = [&run](CLI::App* cmd) {
    cmd->add_option("network", run.network, "Network file")->required();
    cmd->add_option("evidence", run.evidence, "Evidence file")->required();
    cmd->add_option("--mode", run.mode, "single | certain | uncertain")
        ->check(CLI::IsMember({"single", "certain", "uncertain"}));
    cmd->add_option("--seed", run.seed, "Seeded-random delivery order");
  };
  auto* propagate_cmd = app.add_subcommand("propagate", "Update a network on evidence");
  add_run_options(propagate_cmd);
  propagate_cmd->add_flag("--trace", run.trace, "Log message deliveries to stderr");
  propagate_cmd->add_option("-o,--output", run.output, "Write the network here");

  auto* compare_cmd =
      app.add_subcommand("compare", "Check propagation against the brute-force oracle");
  add_run_options(compare_cmd);
  compare_cmd->add_option("--result", run.result,
                          "Compare this network document instead of running the engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate_path);
    if (*query_cmd) return cmd_query(query);
    if (*propagate_cmd) return cmd_propagate(run);
    if (*compare_cmd) return cmd_compare(run);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
