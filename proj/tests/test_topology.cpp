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

#include <doctest.h>

#include "wnk/parser.hpp"
#include "wnk/query.hpp"
#include "wnk/topology.hpp"

using namespace wnk;

namespace {
const std::string kAssets = WNK_ASSET_DIR;
}

TEST_CASE("bundled abilene topology") {
  TopologySpec t = load_topology(kAssets + "/abilene.json");
  CHECK(t.nodes.size() == 11);
  CHECK(t.tunnels.size() == 5);
  CHECK(t.destination == "NYC");
  FieldSchema s = t.make_schema();
  CHECK(s.packet_count() == 11 * 11 * 6 * 2);
  CHECK(t.find_node("KAN") != nullptr);
  CHECK(t.find_link("KAN", "HOU")->bandwidth_mbps == 1250);
}

TEST_CASE("bundled fig2 topology") {
  TopologySpec t = load_topology(kAssets + "/fig2.json");
  int switches = 0, hosts = 0;
  for (const auto& n : t.nodes)
    (n.name[0] == 'S' ? switches : hosts) += 1;
  CHECK(switches == 4);
  CHECK(hosts == 2);
  CHECK(t.make_schema().packet_count() == 6 * 6 * 3);
}

TEST_CASE("topology validation errors") {
  CHECK_THROWS_AS(parse_topology("{\"nodes\": []}"), ValidationError);
  CHECK_THROWS_AS(parse_topology("not json"), ValidationError);
  CHECK_THROWS_AS(
      parse_topology("{\"nodes\":[{\"name\":\"A\"}],"
                     "\"links\":[{\"from\":\"A\",\"to\":\"B\"}]}"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_topology("{\"nodes\":[{\"name\":\"A\"},{\"name\":\"B\"}],"
                     "\"tunnels\":[{\"tid\":1,\"path\":[\"A\",\"B\"]}]}"),
      ValidationError);  // tunnels without a destination
}

TEST_CASE("flavors place weights as configured") {
  TopologySpec t = load_topology(kAssets + "/abilene.json");
  FieldSchema s = t.make_schema();

  // rel: ATL's sojourn is weighted by its failure rate 1.5%
  const Semiring& pu = Semiring::get(SemiringId::ProbUnion);
  PolPtr rel = topology_to_policy(t, Flavor::Rel, s, pu);
  std::string rel_text = print_policy(s, pu, rel);
  CHECK(rel_text.find("weight(3/200)@") != std::string::npos);

  // band: KAN's tid=3 hop carries the 1250 Mbps link weight
  const Semiring& bn = Semiring::get(SemiringId::Bottleneck);
  PolPtr band = topology_to_policy(t, Flavor::Band, s, bn);
  std::string band_text = print_policy(s, bn, band);
  CHECK(band_text.find("weight(1250)@node := HOU") != std::string::npos);
  CHECK(band_text.find("weight(950)@node := ATL") != std::string::npos);

  // plain: no weights anywhere
  const Semiring& b = Semiring::get(SemiringId::Boolean);
  PolPtr plain = topology_to_policy(t, Flavor::Plain, s, b);
  CHECK(print_policy(s, b, plain).find("weight(") == std::string::npos);
  CHECK(count_stars(plain) == 1 + t.nodes.size());  // outer + one per node

  // flavor/semiring mismatches are rejected
  CHECK_THROWS_AS(topology_to_policy(t, Flavor::Rel, s, bn), ValidationError);
  CHECK_THROWS_AS(topology_to_policy(t, Flavor::Band, s, pu), ValidationError);
}

TEST_CASE("generated policies re-parse to the same tree") {
  for (const char* asset : {"/abilene.json", "/abilene_safe.json", "/fig2.json"}) {
    TopologySpec t = load_topology(kAssets + asset);
    FieldSchema s = t.make_schema();
    for (Flavor flavor : {Flavor::Plain, Flavor::Rel, Flavor::Band, Flavor::Latency}) {
      if (flavor == Flavor::Band && t.links[1].bandwidth_mbps == std::nullopt)
        continue;  // fig2 carries no bandwidth annotations
      const Semiring& sr =
          flavor == Flavor::Rel    ? Semiring::get(SemiringId::ProbUnion)
          : flavor == Flavor::Band ? Semiring::get(SemiringId::Bottleneck)
          : flavor == Flavor::Latency ? Semiring::get(SemiringId::Arctic)
                                      : Semiring::get(SemiringId::Boolean);
      PolPtr p = topology_to_policy(t, flavor, s, sr);
      PolPtr q = parse_policy(print_policy(s, sr, p), s, sr);
      CHECK(pol_equal(p, q));
    }
  }
}

TEST_CASE("boolean connectivity of the tunnel system") {
  TopologySpec t = load_topology(kAssets + "/abilene.json");
  FieldSchema s = t.make_schema();
  const Semiring& b = Semiring::get(SemiringId::Boolean);
  PolPtr net = topology_to_policy(t, Flavor::Plain, s, b);
  QueryRequest req;
  req.mode = QueryMode::Reach;
  req.bound = "1";
  req.ingress = t.ingress;
  req.egress = t.egress;
  QueryReport rep = run_query(req, net, s, b, &t);
  CHECK(rep.exit_code == 0);
  CHECK(rep.verdict->kind == VerdictKind::Reachable);
}
