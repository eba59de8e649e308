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

#ifndef WNK_TOPOLOGY_HPP
#define WNK_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "wnk/policy.hpp"

namespace wnk {

struct TopologyNode {
  std::string name;
  std::optional<Rational> failure_pct;
  std::optional<long> latency_ms;
};

struct TopologyLink {
  std::string from, to;
  std::optional<long> latency_ms;
  std::optional<long> bandwidth_mbps;
};

struct Tunnel {
  int tid = 0;
  std::vector<std::string> path;
};

/// Reconfiguration rule: at `at`, traffic exiting tunnel `from_tid` bound for
/// the tunnel destination is handed directly to tunnel `to_tid`.
struct Handoff {
  std::string at;
  int from_tid = 0, to_tid = 0;
};

/// Pin: at `at`, video traffic entering the tunnel system always takes `tid`.
struct VideoPin {
  std::string at;
  int tid = 0;
};

struct TopologySpec {
  std::string name;
  std::string location_field = "node";
  std::string destination_field = "dst";
  std::string tunnel_field = "tid";
  std::string video_field;  // empty: no video field in the schema
  std::string destination;  // destination the tunnel table serves
  std::vector<TopologyNode> nodes;
  std::vector<TopologyLink> links;
  std::vector<Tunnel> tunnels;
  std::vector<Handoff> handoffs;
  std::vector<VideoPin> video_tunnels;
  std::string ingress, egress;  // default query guards (predicate syntax)

  /// Fields: location, destination (both over the node names), tunnel id
  /// 0..max tid, and a boolean video field when declared.
  FieldSchema make_schema(
      uint64_t packet_cap = FieldSchema::kDefaultPacketCap) const;

  const TopologyNode* find_node(std::string_view name) const;
  const TopologyLink* find_link(std::string_view from,
                                std::string_view to) const;
};

TopologySpec load_topology(const std::string& path);
TopologySpec parse_topology(const std::string& json_text);

enum class Flavor : uint8_t { Plain, Rel, Band, Latency };

Flavor parse_flavor(std::string_view name);  // plain|rel|band|latency

/// Generates the network policy (per-node tunneling logic as if-chains on the
/// tunnel field, each node's policy iterated and guarded by leaving the node,
/// the whole dispatch iterated with a dup per hop):
///   - plain: no weights,
///   - rel: node-level weighting by failure rate (prob-union) or forwarding
///     success rate (viterbi),
///   - band: per-forwarding-action weighting by link bandwidth (bottleneck),
///   - latency: node-level weighting by latency (arctic or tropical), with
///     video traffic pinned to its configured tunnels.
/// Traffic outside the tunnel system falls through to the default policy,
/// which is drop.
PolPtr topology_to_policy(const TopologySpec& topo, Flavor flavor,
                          const FieldSchema& schema, const Semiring& sr);

}  // namespace wnk

#endif  // WNK_TOPOLOGY_HPP
