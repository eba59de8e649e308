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

#include "wnk/query.hpp"

#include <json.hpp>

#include "wnk/denotational.hpp"
#include "wnk/parser.hpp"

namespace wnk {

namespace {

using nlohmann::json;

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Safe:
      return "safe";
    case VerdictKind::Unsafe:
      return "unsafe";
    case VerdictKind::Reachable:
      return "reachable";
    case VerdictKind::Unreachable:
      return "unreachable";
  }
  return "?";
}

std::vector<std::string> decode_field_seq(const FieldSchema& schema,
                                          const GuardedString& gs,
                                          FieldId f, bool skip_value0) {
  std::vector<std::string> out;
  for (PacketId pk : gs.pkts) {
    const std::string& v = schema.value_name(f, schema.get(pk, f));
    if (skip_value0 && schema.get(pk, f) == 0) continue;
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

QueryReport run_query(const QueryRequest& req, const PolPtr& policy,
                      const FieldSchema& schema, const Semiring& sr,
                      const TopologySpec* topo) {
  PolPtr full = policy;
  if (!req.ingress.empty())
    full = seq(filter(parse_predicate(req.ingress, schema)), full);
  if (!req.egress.empty())
    full = seq(full, filter(parse_predicate(req.egress, schema)));

  QueryReport rep;
  json j;
  j["semiring"] = sr.name();

  if (req.mode == QueryMode::Eval) {
    if (req.packet.empty()) throw ValidationError("eval needs --packet");
    PacketId input = schema.parse_packet(req.packet);
    j["query"] = "eval";
    j["input_packet"] = schema.print_packet(input);
    if (req.approx >= 0) {
      History h{input};
      if (!req.history.empty()) {
        History tail = schema.parse_history(req.history);
        h.insert(h.end(), tail.begin(), tail.end());
      }
      Weighting<History> m = eval_approx(full, req.approx, h, schema, &sr);
      json entries = json::array();
      std::string human;
      for (const auto& [hist, w] : m.entries()) {
        entries.push_back({{"history", schema.print_history(hist)},
                           {"weight", sr.print(w)}});
        human += schema.print_history(hist) + " -> " + sr.print(w) + "\n";
      }
      j["approx_depth"] = req.approx;
      j["weighting"] = entries;
      rep.human = human.empty() ? "(empty weighting)\n" : human;
    } else {
      if (req.history.empty()) throw ValidationError("eval needs --history");
      History h = schema.parse_history(req.history);
      Wnka a(full, schema, &sr);
      Value w = eval_weight(a, input, h);
      rep.weight = w;
      j["history"] = schema.print_history(h);
      j["weight"] = sr.print(w);
      rep.human = "weight(" + schema.print_packet(input) + " -> " +
                  schema.print_history(h) + ") = " + sr.print(w) + "\n";
    }
    rep.exit_code = 0;
    rep.json_text = j.dump(2);
    return rep;
  }

  if (req.bound.empty()) throw ValidationError("check needs a bound");
  Value bound = sr.parse(req.bound);
  j["bound"] = sr.print(bound);
  Wnka a(full, schema, &sr);

  Verdict v = req.mode == QueryMode::Safe
                  ? check_safety(a, bound, req.limits)
                  : check_reachability(a, bound, req.limits);
  j["query"] = req.mode == QueryMode::Safe ? "safe" : "reach";
  j["verdict"] = verdict_name(v.kind);
  if (v.total) j["total_weight"] = sr.print(*v.total);

  std::string human = std::string("verdict: ") + verdict_name(v.kind) +
                      " (bound " + sr.print(bound) + ")\n";
  if (v.total) human += "total weight: " + sr.print(*v.total) + "\n";
  if (v.witness) {
    const Witness& w = *v.witness;
    j["witness"] = {{"input_packet", schema.print_packet(w.input)},
                    {"history", schema.print_history(w.history)},
                    {"guarded_string", print_gs(schema, w.gs)},
                    {"weight", sr.print(w.weight)}};
    human += "witness weight: " + sr.print(w.weight) + "\n";
    human += "witness trace: " + print_gs(schema, w.gs) + "\n";
    if (topo) {
      FieldId loc = schema.field(topo->location_field);
      human += "witness path: " +
               join(decode_field_seq(schema, w.gs, loc, false), " -> ") + "\n";
      if (!topo->tunnel_field.empty()) {
        FieldId tid = schema.field(topo->tunnel_field);
        auto tids = decode_field_seq(schema, w.gs, tid, true);
        if (!tids.empty())
          human += "witness tunnels: " + join(tids, ",") + "\n";
      }
    }
  }
  rep.verdict = v;
  rep.human = human;
  rep.json_text = j.dump(2);
  bool holds = v.kind == VerdictKind::Safe || v.kind == VerdictKind::Reachable;
  rep.exit_code = holds ? 0 : 1;
  return rep;
}

std::string dump_automaton_json(const Wnka& a, uint64_t pair_cap) {
  const FieldSchema& schema = a.schema();
  const SemiringHandle sr = a.semiring();
  const uint64_t pk_count = schema.packet_count();
  if (pk_count * pk_count > pair_cap)
    throw ResourceError("packet space too large to dump (" +
                        std::to_string(pk_count * pk_count) + " pairs)");
  json j;
  j["semiring"] = sr->name();
  j["packets"] = pk_count;
  json states = json::array();
  for (size_t i = 0; i < a.num_states(); ++i)
    states.push_back({{"id", i}, {"label", a.state_labels()[i]}});
  j["states"] = states;
  json init = json::array();
  for (const auto& [q, w] : a.init())
    init.push_back({{"state", q}, {"weight", sr->print(w)}});
  j["init"] = init;

  json delta = json::array();
  json lambda = json::array();
  std::vector<StateId> all = a.all_states();
  for (PacketId alpha = 0; alpha < pk_count; ++alpha) {
    for (const auto& [beta, mat] : a.step_rows(alpha, all)) {
      json entries = json::array();
      for (const auto& [qq, w] : mat)
        entries.push_back({{"from", qq.first},
                           {"to", qq.second},
                           {"weight", sr->print(w)}});
      delta.push_back({{"a", schema.print_packet(alpha)},
                       {"b", schema.print_packet(beta)},
                       {"entries", entries}});
    }
    for (const auto& [beta, vec] : a.out_rows(alpha, all)) {
      json entries = json::array();
      for (const auto& [q, w] : vec)
        entries.push_back({{"state", q}, {"weight", sr->print(w)}});
      lambda.push_back({{"a", schema.print_packet(alpha)},
                        {"b", schema.print_packet(beta)},
                        {"entries", entries}});
    }
  }
  j["delta"] = delta;
  j["lambda"] = lambda;
  return j.dump(2);
}

}  // namespace wnk
