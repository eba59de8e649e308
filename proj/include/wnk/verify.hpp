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

#ifndef WNK_VERIFY_HPP
#define WNK_VERIFY_HPP

#include <optional>

#include "wnk/wnka.hpp"

namespace wnk {

struct Witness {
  PacketId input = 0;
  History history;
  GuardedString gs;
  Value weight;
};

enum class VerdictKind : uint8_t { Safe, Unsafe, Reachable, Unreachable };

struct Verdict {
  VerdictKind kind;
  Value bound;
  std::optional<Value> total;      // set by the safety procedure
  std::optional<Witness> witness;  // always present for Unsafe/Reachable
};

/// One automaton run: a chain of transitions ending in an output pair.
/// Consecutive steps share the carry-on packet and chain their states.
struct RunStep {
  StateId from;
  PacketId a, b;
  StateId to;
};

struct Run {
  StateId start;  // state of the first step, or the output state if none
  std::vector<RunStep> steps;
  PacketId final_a, final_b;
  StateId final_state;

  GuardedString to_gs() const;
};

struct VerifyLimits {
  /// Witness search explores guarded strings up to this many dups.
  int max_witness_dups = 64;
  size_t max_witness_prefixes = 1u << 20;
  /// Forward-reachable packet-configuration cap for the total-weight sum.
  size_t max_configs = 200000;
  /// Cycle-free run enumeration caps.
  size_t max_runs = 1u << 20;
  size_t max_run_length = 4096;
};

/// Sum of the automaton weights over all guarded strings, computed as
/// I x M* x Lambda on the packet-configuration unfolding (restricted to the
/// configurations that can both be reached and reach the output, which does
/// not change the sum).
Value total_weight(const Wnka& a, const VerifyLimits& limits = {});

/// r-safety: every guarded string weighs at most `bound`. Requires a
/// safety-capable semiring. On violation returns the first counterexample in
/// dup-length-major, then lexicographic, order.
Verdict check_safety(const Wnka& a, const Value& bound,
                     const VerifyLimits& limits = {});

/// r-reachability: some guarded string weighs at least `bound`. Requires a
/// reach-capable semiring. Decided over cycle-free runs; the witness guarded
/// string is read off the first satisfying run.
Verdict check_reachability(const Wnka& a, const Value& bound,
                           const VerifyLimits& limits = {});

/// Product of the transition entries along the run, starting from the
/// multiplicative unit. Throws on invalid chaining.
Value run_weight(const Wnka& a, const Run& run);

/// All productive cycle-free runs (nonzero steps and output), depth first
/// from every state, extensions blocked when a (state, carry-on packet)
/// configuration would repeat as a transition target.
std::vector<Run> enumerate_cycle_free_runs(const Wnka& a,
                                           const VerifyLimits& limits = {});

/// Weight the policy assigns to output history `h` on input packet `input`.
Value eval_weight(const Wnka& a, PacketId input, const History& h);

}  // namespace wnk

#endif  // WNK_VERIFY_HPP
