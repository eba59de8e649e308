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

#include "wnk/topology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wnk {

namespace {

using nlohmann::json;

/// Exact rational from a JSON value. Strings parse as decimals or fractions;
/// floats go through their shortest decimal rendering, so literals written in
/// the file are recovered exactly.
Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    std::string text = j.is_string() ? j.get<std::string>() : j.dump();
    // avoid cpp_int's octal reading of leading zeros
    auto digits = [](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("malformed digits");
      size_t i = 0;
      while (i + 1 < s.size() && s[i] == '0') ++i;
      return boost::multiprecision::cpp_int(s.substr(i));
    };
    auto slash = text.find('/');
    if (slash != std::string::npos)
      return Rational(digits(text.substr(0, slash)),
                      digits(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(digits(text));
    boost::multiprecision::cpp_int den = 1;
    for (size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
    return Rational(digits(text.substr(0, dot) + text.substr(dot + 1)), den);
  } catch (const std::exception&) {
    throw ValidationError(where + ": malformed number " + j.dump());
  }
}

}  // namespace

const TopologyNode* TopologySpec::find_node(std::string_view n) const {
  for (const auto& node : nodes)
    if (node.name == n) return &node;
  return nullptr;
}

const TopologyLink* TopologySpec::find_link(std::string_view from,
                                            std::string_view to) const {
  for (const auto& link : links)
    if (link.from == from && link.to == to) return &link;
  return nullptr;
}

FieldSchema TopologySpec::make_schema(uint64_t packet_cap) const {
  FieldSchema schema;
  std::vector<std::string> node_names;
  for (const auto& n : nodes) node_names.push_back(n.name);
  schema.add_field(location_field, node_names, packet_cap);
  schema.add_field(destination_field, node_names, packet_cap);
  int max_tid = 0;
  for (const auto& t : tunnels) max_tid = std::max(max_tid, t.tid);
  std::vector<std::string> tids;
  for (int i = 0; i <= max_tid; ++i) tids.push_back(std::to_string(i));
  schema.add_field(tunnel_field, tids, packet_cap);
  if (!video_field.empty())
    schema.add_field(video_field, {"false", "true"}, packet_cap);
  return schema;
}

TopologySpec parse_topology(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("topology: invalid JSON: ") + e.what());
  }
  TopologySpec t;
  t.name = j.value("name", "");
  t.location_field = j.value("location_field", "node");
  t.destination_field = j.value("destination_field", "dst");
  t.tunnel_field = j.value("tunnel_field", "tid");
  t.video_field = j.value("video_field", "");
  t.destination = j.value("destination", "");
  t.ingress = j.value("ingress", "");
  t.egress = j.value("egress", "");

  if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty())
    throw ValidationError("topology: 'nodes' must be a non-empty array");
  for (const auto& n : j["nodes"]) {
    TopologyNode node;
    node.name = n.at("name").get<std::string>();
    if (n.contains("failure_pct"))
      node.failure_pct = rational_from_json(
          n["failure_pct"], "nodes[" + node.name + "].failure_pct");
    if (n.contains("latency_ms")) node.latency_ms = n["latency_ms"].get<long>();
    t.nodes.push_back(std::move(node));
  }
  std::set<std::string> names;
  for (const auto& n : t.nodes)
    if (!names.insert(n.name).second)
      throw ValidationError("topology: duplicate node '" + n.name + "'");

  auto require_node = [&](const std::string& n, const std::string& where) {
    if (!names.count(n))
      throw ValidationError("topology: " + where + " references undeclared node '" +
                            n + "'");
  };

  for (const auto& l : j.value("links", json::array())) {
    TopologyLink link;
    link.from = l.at("from").get<std::string>();
    link.to = l.at("to").get<std::string>();
    require_node(link.from, "links[].from");
    require_node(link.to, "links[].to");
    if (l.contains("latency_ms")) link.latency_ms = l["latency_ms"].get<long>();
    if (l.contains("bandwidth_mbps"))
      link.bandwidth_mbps = l["bandwidth_mbps"].get<long>();
    t.links.push_back(std::move(link));
  }

  std::set<int> tids;
  for (const auto& tn : j.value("tunnels", json::array())) {
    Tunnel tun;
    tun.tid = tn.at("tid").get<int>();
    if (tun.tid <= 0)
      throw ValidationError("topology: tunnel ids are positive (0 means none)");
    if (!tids.insert(tun.tid).second)
      throw ValidationError("topology: duplicate tunnel id " +
                            std::to_string(tun.tid));
    for (const auto& hop : tn.at("path")) {
      tun.path.push_back(hop.get<std::string>());
      require_node(tun.path.back(), "tunnels[].path");
    }
    if (tun.path.size() < 2)
      throw ValidationError("topology: tunnel paths need at least two nodes");
    t.tunnels.push_back(std::move(tun));
  }
  if (!t.tunnels.empty()) {
    if (t.destination.empty())
      throw ValidationError("topology: tunnels declared without 'destination'");
    require_node(t.destination, "destination");
  }

  for (const auto& h : j.value("handoffs", json::array())) {
    Handoff ho;
    ho.at = h.at("at").get<std::string>();
    ho.from_tid = h.at("from_tid").get<int>();
    ho.to_tid = h.at("to_tid").get<int>();
    require_node(ho.at, "handoffs[].at");
    if (!tids.count(ho.from_tid) || !tids.count(ho.to_tid))
      throw ValidationError("topology: handoff references unknown tunnel id");
    t.handoffs.push_back(std::move(ho));
  }
  for (const auto& v : j.value("video_tunnels", json::array())) {
    VideoPin pin;
    pin.at = v.at("at").get<std::string>();
    pin.tid = v.at("tid").get<int>();
    require_node(pin.at, "video_tunnels[].at");
    if (!tids.count(pin.tid))
      throw ValidationError("topology: video pin references unknown tunnel id");
    t.video_tunnels.push_back(std::move(pin));
  }
  if (!t.video_tunnels.empty() && t.video_field.empty())
    throw ValidationError("topology: video_tunnels require 'video_field'");
  return t;
}

TopologySpec load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open topology file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str());
}

Flavor parse_flavor(std::string_view name) {
  if (name == "plain") return Flavor::Plain;
  if (name == "rel") return Flavor::Rel;
  if (name == "band") return Flavor::Band;
  if (name == "latency") return Flavor::Latency;
  throw ValidationError("unknown flavor '" + std::string(name) +
                        "' (expected plain|rel|band|latency)");
}

namespace {

struct Gen {
  const TopologySpec& topo;
  Flavor flavor;
  const FieldSchema& schema;
  const Semiring& sr;
  FieldId loc, dst, tid;
  FieldId vid = 0;
  bool has_vid = false;

  PredPtr tid_is(int t) const {
    return pred_test(tid, schema.value(tid, std::to_string(t)));
  }
  PolPtr tid_set(int t) const {
    return assign(tid, schema.value(tid, std::to_string(t)));
  }

  PolPtr if_then_else(PredPtr t, PolPtr p, PolPtr q) const {
    return choice(seq(filter(t), std::move(p)),
                  seq(filter(pred_not(t)), std::move(q)));
  }

  PolPtr forward_action(const std::string& from, const std::string& to) const {
    PolPtr hop = assign(loc, schema.value(loc, to));
    if (flavor != Flavor::Band) return hop;
    const TopologyLink* link = topo.find_link(from, to);
    if (!link || !link->bandwidth_mbps)
      throw ValidationError("flavor 'band' needs bandwidth_mbps on link " +
                            from + " -> " + to);
    return weigh(sr.make(Rational(*link->bandwidth_mbps)), hop);
  }

  /// Tunnel-entry policy for traffic with no tunnel assigned yet.
  PolPtr entry(const TopologyNode& node) const {
    std::vector<int> starts;
    for (const auto& tun : topo.tunnels)
      if (tun.path.front() == node.name) starts.push_back(tun.tid);
    if (starts.empty()) return drop();  // default forwarding policy
    std::sort(starts.begin(), starts.end());
    PolPtr pick = tid_set(starts.back());
    for (size_t i = starts.size() - 1; i-- > 0;)
      pick = choice(tid_set(starts[i]), pick);
    if (flavor == Flavor::Latency && has_vid) {
      for (const auto& pin : topo.video_tunnels)
        if (pin.at == node.name) {
          PredPtr is_video = pred_test(vid, schema.value(vid, "true"));
          pick = if_then_else(is_video, tid_set(pin.tid), pick);
          break;
        }
    }
    PredPtr to_dst = pred_test(dst, schema.value(dst, topo.destination));
    return if_then_else(to_dst, pick, drop());
  }

  /// Per-node tunneling logic: entry, handoffs, tunnel-exit resets, and the
  /// forwarding hops, as one if-chain over the tunnel field.
  PolPtr node_policy(const TopologyNode& node) const {
    struct Branch {
      PredPtr cond;
      PolPtr body;
    };
    std::vector<Branch> branches;
    branches.push_back({tid_is(0), entry(node)});

    for (const auto& ho : topo.handoffs)
      if (ho.at == node.name)
        branches.push_back(
            {pred_and(tid_is(ho.from_tid),
                      pred_test(dst, schema.value(dst, topo.destination))),
             tid_set(ho.to_tid)});

    bool starts_any = false;
    std::vector<int> ends;
    for (const auto& tun : topo.tunnels) {
      if (tun.path.front() == node.name) starts_any = true;
      if (tun.path.back() == node.name) ends.push_back(tun.tid);
    }
    if (starts_any && !ends.empty()) {
      std::sort(ends.begin(), ends.end());
      PredPtr cond = tid_is(ends[0]);
      for (size_t i = 1; i < ends.size(); ++i)
        cond = pred_or(cond, tid_is(ends[i]));
      branches.push_back({cond, tid_set(0)});
    }

    std::vector<std::pair<int, PolPtr>> hops;
    for (const auto& tun : topo.tunnels)
      for (size_t i = 0; i + 1 < tun.path.size(); ++i)
        if (tun.path[i] == node.name)
          hops.emplace_back(tun.tid,
                            forward_action(node.name, tun.path[i + 1]));
    std::sort(hops.begin(), hops.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [t, action] : hops)
      branches.push_back({tid_is(t), std::move(action)});

    PolPtr chain = drop();
    for (size_t i = branches.size(); i-- > 0;)
      chain = if_then_else(branches[i].cond, branches[i].body, chain);
    return chain;
  }

  Value node_weight(const TopologyNode& node) const {
    switch (flavor) {
      case Flavor::Rel: {
        if (!node.failure_pct)
          throw ValidationError("flavor 'rel' needs failure_pct on node " +
                                node.name);
        if (sr.id() == SemiringId::ProbUnion)
          return sr.make(*node.failure_pct / 100);
        if (sr.id() == SemiringId::Viterbi)
          return sr.make(1 - *node.failure_pct / 100);
        throw ValidationError(
            "flavor 'rel' expects the prob-union or viterbi semiring");
      }
      case Flavor::Latency: {
        if (!node.latency_ms)
          throw ValidationError("flavor 'latency' needs latency_ms on node " +
                                node.name);
        if (sr.id() != SemiringId::Arctic && sr.id() != SemiringId::Tropical)
          throw ValidationError(
              "flavor 'latency' expects the arctic or tropical semiring");
        return sr.make(Rational(*node.latency_ms));
      }
      default:
        return sr.one();
    }
  }

  PolPtr build() const {
    if (flavor == Flavor::Band && sr.id() != SemiringId::Bottleneck)
      throw ValidationError("flavor 'band' expects the bottleneck semiring");
    PolPtr dispatch = drop();
    for (size_t i = topo.nodes.size(); i-- > 0;) {
      const TopologyNode& node = topo.nodes[i];
      PredPtr here = pred_test(loc, schema.value(loc, node.name));
      // (p_N)* ; node != N, weighted per flavor
      PolPtr sojourn =
          seq(star(node_policy(node)), filter(pred_not(here)));
      if (flavor == Flavor::Rel || flavor == Flavor::Latency)
        sojourn = weigh(node_weight(node), sojourn);
      dispatch = if_then_else(here, sojourn, dispatch);
    }
    return star(seq(dispatch, dup()));
  }
};

}  // namespace

PolPtr topology_to_policy(const TopologySpec& topo, Flavor flavor,
                          const FieldSchema& schema, const Semiring& sr) {
  Gen gen{topo, flavor, schema, sr,
          schema.field(topo.location_field),
          schema.field(topo.destination_field),
          schema.field(topo.tunnel_field)};
  if (!topo.video_field.empty()) {
    gen.vid = schema.field(topo.video_field);
    gen.has_vid = true;
  }
  return gen.build();
}

}  // namespace wnk
