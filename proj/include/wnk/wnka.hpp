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

#ifndef WNK_WNKA_HPP
#define WNK_WNKA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wnk/guarded.hpp"
#include "wnk/matrix.hpp"
#include "wnk/policy.hpp"

namespace wnk {

using StateId = uint32_t;
/// Sparse state vector; zero entries are never stored.
using SparseVec = std::map<StateId, Value>;
/// Sparse state matrix, keyed (from, to).
using SparseMat = std::map<std::pair<StateId, StateId>, Value>;
/// A row of a packet-pair family, sparse over the consumed packet:
/// beta -> scalar / state vector / state matrix.
using PacketVal = std::map<PacketId, Value>;
using PacketVec = std::map<PacketId, SparseVec>;
using PacketMat = std::map<PacketId, SparseMat>;

namespace detail {
struct Node;
}

/// A weighted NetKAT automaton built by the Thompson construction: a finite
/// state set, an initial weighting, and transition/output families indexed by
/// packet pairs.
///
/// The families are total over Pk x Pk but materialized lazily: for a fixed
/// input packet alpha, the construction computes the sparse set of output
/// packets beta with a nonzero entry. Results are memoized per node and
/// packet behind an internal lock, so concurrent queries are safe.
class Wnka {
 public:
  Wnka(PolPtr policy, const FieldSchema& schema, SemiringHandle sr);
  ~Wnka();

  Wnka(const Wnka&) = delete;
  Wnka& operator=(const Wnka&) = delete;

  const FieldSchema& schema() const { return *schema_; }
  SemiringHandle semiring() const { return sr_; }
  const PolPtr& policy() const { return policy_; }

  size_t num_states() const { return labels_.size(); }
  const std::vector<std::string>& state_labels() const { return labels_; }

  /// Initial weighting iota.
  const SparseVec& init() const { return init_; }

  /// Rows of Delta_{alpha,.} restricted to source states in `needed`
  /// (sorted). Returns beta -> {(q, q') -> w} with only nonzero entries.
  PacketMat step_rows(PacketId alpha, const std::vector<StateId>& needed) const;
  /// Rows of Lambda_{alpha,.} restricted to `needed`.
  PacketVec out_rows(PacketId alpha, const std::vector<StateId>& needed) const;

  /// iota x Delta_{alpha,.} and iota x Lambda_{alpha,.} (entry-weighted).
  PacketVec init_step(PacketId alpha) const;
  PacketVal init_out(PacketId alpha) const;

  /// Full single-pair access (convenience for dumps and small tests).
  SparseMat delta(PacketId alpha, PacketId beta) const;
  SparseVec lambda(PacketId alpha, PacketId beta) const;

  /// iota x Delta_{pi0 pi1} x ... x Lambda_{pi(n-1) pin}.
  Value accept_weight(const GuardedString& x) const;

  std::vector<StateId> all_states() const;

 private:
  PolPtr policy_;
  const FieldSchema* schema_;
  SemiringHandle sr_;
  std::unique_ptr<detail::Node> root_;
  SparseVec init_;
  std::vector<std::string> labels_;
  mutable std::mutex mu_;
};

Wnka thompson(PolPtr policy, const FieldSchema& schema, SemiringHandle sr);

/// The packet-configuration unfolding: states (Q x Pk) + {q_iota, q_lambda},
/// one transition matrix per consumed packet, with the carry-on packet made
/// explicit in the state.
struct PacketConfigAutomaton {
  SemiringHandle sr;
  size_t base_states = 0;
  size_t packets = 0;

  // state numbering: 0 = q_iota, 1 = q_lambda, 2 + q*packets + alpha
  static constexpr StateId kInit = 0;
  static constexpr StateId kFinal = 1;
  StateId config(StateId q, PacketId alpha) const {
    return static_cast<StateId>(2 + q * packets + alpha);
  }

  size_t num_states() const { return base_states * packets + 2; }

  /// Delta'_beta, fully materialized.
  std::map<PacketId, SparseMat> delta;

  /// I x Delta'_{pi0} x ... x Delta'_{pin} x Lambda.
  Value accept(const GuardedString& x) const;
};

/// Materializes the unfolding; throws ResourceError when |Pk|^2 exceeds
/// `pair_cap` (the construction touches every packet pair).
PacketConfigAutomaton unfold(const Wnka& a, uint64_t pair_cap = 4096);

}  // namespace wnk

#endif  // WNK_WNKA_HPP
