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

#ifndef WNK_QUERY_HPP
#define WNK_QUERY_HPP

#include <optional>
#include <string>

#include "wnk/topology.hpp"
#include "wnk/verify.hpp"

namespace wnk {

enum class QueryMode : uint8_t { Safe, Reach, Eval };

struct QueryRequest {
  QueryMode mode = QueryMode::Safe;
  std::string bound;    // safe/reach: weight literal in the active semiring
  std::string packet;   // eval: input packet "f=v,..."
  std::string history;  // eval: output history "f=v,..; f=v,.."
  int approx = -1;      // eval: >= 0 prints the depth-n approximant weighting
  std::string ingress, egress;  // optional guard predicates
  VerifyLimits limits;
};

struct QueryReport {
  int exit_code = 0;  // 0 property holds, 1 property fails
  std::optional<Verdict> verdict;
  std::optional<Value> weight;  // eval mode
  std::string human;
  std::string json_text;
};

/// Compiles ingress;policy;egress and dispatches on the query mode. The
/// topology, when given, is used to decode witnesses into node and tunnel
/// sequences for the human-readable report.
QueryReport run_query(const QueryRequest& req, const PolPtr& policy,
                      const FieldSchema& schema, const Semiring& sr,
                      const TopologySpec* topo = nullptr);

/// Automaton dump (states, initial weighting, nonzero transition and output
/// entries per packet pair). Refuses packet spaces above `pair_cap` pairs.
std::string dump_automaton_json(const Wnka& a, uint64_t pair_cap = 4096);

}  // namespace wnk

#endif  // WNK_QUERY_HPP
