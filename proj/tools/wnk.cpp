// Copyright 2026 The wnk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wnk/parser.hpp"
#include "wnk/query.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wnk::ValidationError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonOpts {
  std::string semiring = "boolean";
  std::string schema_file;
  std::string policy_file;
  std::string topology_file;
  std::string flavor = "plain";
  uint64_t packet_cap = wnk::FieldSchema::kDefaultPacketCap;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--semiring", o.semiring,
                  "boolean|tropical|arctic|viterbi|prob-union|bottleneck|"
                  "security|nat-inf|real");
  cmd->add_option("--schema", o.schema_file, "fields{...} schema file");
  cmd->add_option("--policy", o.policy_file, ".wnk policy file");
  cmd->add_option("--topology", o.topology_file, "topology JSON file");
  cmd->add_option("--flavor", o.flavor, "plain|rel|band|latency");
  cmd->add_option("--packet-cap", o.packet_cap, "packet space cap");
}

struct Loaded {
  wnk::FieldSchema schema;
  wnk::PolPtr policy;
  const wnk::Semiring* sr = nullptr;
  std::optional<wnk::TopologySpec> topo;
};

Loaded load(const CommonOpts& o) {
  Loaded l;
  l.sr = wnk::Semiring::find(o.semiring);
  if (!l.sr)
    throw wnk::ValidationError("unknown semiring '" + o.semiring + "'");
  if (!o.topology_file.empty() && !o.policy_file.empty())
    throw wnk::ValidationError("--policy and --topology are mutually exclusive");
  if (!o.topology_file.empty()) {
    l.topo = wnk::load_topology(o.topology_file);
    l.schema = l.topo->make_schema(o.packet_cap);
    l.policy = wnk::topology_to_policy(*l.topo, wnk::parse_flavor(o.flavor),
                                       l.schema, *l.sr);
  } else if (!o.policy_file.empty()) {
    std::optional<wnk::FieldSchema> override_schema;
    if (!o.schema_file.empty())
      override_schema =
          wnk::parse_fields_block(read_file(o.schema_file), o.packet_cap);
    wnk::ParsedPolicy parsed = wnk::parse_policy_file(
        read_file(o.policy_file), *l.sr,
        override_schema ? &*override_schema : nullptr, o.packet_cap);
    l.schema = std::move(parsed.schema);
    l.policy = std::move(parsed.policy);
  } else {
    throw wnk::ValidationError("need --policy or --topology");
  }
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted NetKAT policy compiler and verifier"};
  app.require_subcommand(1);

  CommonOpts check_opts, eval_opts, compile_opts;
  std::string safe_bound, reach_bound, ingress, egress;
  bool json_out = false;
  wnk::VerifyLimits limits;

  CLI::App* check = app.add_subcommand("check", "decide r-safety or r-reachability");
  add_common(check, check_opts);
  auto* safe_opt = check->add_option("--safe", safe_bound, "safety bound r");
  auto* reach_opt =
      check->add_option("--reach", reach_bound, "reachability bound r");
  check->add_option("--ingress", ingress, "ingress guard predicate");
  check->add_option("--egress", egress, "egress guard predicate");
  check->add_flag("--json", json_out, "print the JSON verdict");
  check->add_option("--max-dup-length", limits.max_witness_dups,
                    "safety witness search cap");
  check->add_option("--max-runs", limits.max_runs,
                    "cycle-free run enumeration cap");

  std::string packet, history;
  int approx = -1;
  CLI::App* eval = app.add_subcommand("eval", "weight of a concrete trace");
  add_common(eval, eval_opts);
  eval->add_option("--packet", packet, "input packet f=v,...");
  eval->add_option("--history", history, "output history f=v,..; f=v,..");
  eval->add_option("--approx", approx,
                   "print the depth-N approximant weighting instead");
  eval->add_flag("--json", json_out, "print JSON");

  bool dump = false;
  CLI::App* compile = app.add_subcommand("compile", "compile to an automaton");
  add_common(compile, compile_opts);
  compile->add_flag("--dump", dump, "emit the automaton as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      if (safe_opt->count() == reach_opt->count())
        throw wnk::ValidationError("check needs exactly one of --safe/--reach");
      Loaded l = load(check_opts);
      wnk::QueryRequest req;
      req.mode = safe_opt->count() ? wnk::QueryMode::Safe : wnk::QueryMode::Reach;
      req.bound = safe_opt->count() ? safe_bound : reach_bound;
      req.ingress = !ingress.empty() ? ingress
                    : l.topo          ? l.topo->ingress
                                      : "";
      req.egress = !egress.empty() ? egress : l.topo ? l.topo->egress : "";
      req.limits = limits;
      wnk::QueryReport rep = wnk::run_query(req, l.policy, l.schema, *l.sr,
                                             l.topo ? &*l.topo : nullptr);
      std::cout << (json_out ? rep.json_text + "\n" : rep.human);
      return rep.exit_code;
    }
    if (eval->parsed()) {
      Loaded l = load(eval_opts);
      wnk::QueryRequest req;
      req.mode = wnk::QueryMode::Eval;
      req.packet = packet;
      req.history = history;
      req.approx = approx;
      wnk::QueryReport rep = wnk::run_query(req, l.policy, l.schema, *l.sr,
                                             l.topo ? &*l.topo : nullptr);
      std::cout << (json_out ? rep.json_text + "\n" : rep.human);
      return rep.exit_code;
    }
    if (compile->parsed()) {
      if (!dump) throw wnk::ValidationError("compile currently requires --dump");
      Loaded l = load(compile_opts);
      wnk::Wnka a(l.policy, l.schema, l.sr);
      std::cout << wnk::dump_automaton_json(a) << "\n";
      return 0;
    }
  } catch (const wnk::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const wnk::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
