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

#ifndef WNK_GUARDED_HPP
#define WNK_GUARDED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wnk/policy.hpp"
#include "wnk/weighting.hpp"

namespace wnk {

/// A guarded string pi0 pi1 dup pi2 dup ... dup pin stored as its packet
/// vector; the dups are implicit (dup count = packet count - 2).
struct GuardedString {
  std::vector<PacketId> pkts;

  GuardedString() = default;
  explicit GuardedString(std::vector<PacketId> p) : pkts(std::move(p)) {
    if (pkts.size() < 2)
      throw Error("guarded strings have at least two packets");
  }

  size_t dups() const { return pkts.size() - 2; }
  PacketId first() const { return pkts.front(); }
  PacketId last() const { return pkts.back(); }

  auto operator<=>(const GuardedString&) const = default;
};

/// Guarded concatenation: defined iff last(x) = first(y); the shared packet
/// is fused away and dup counts add.
std::optional<GuardedString> gs_concat(const GuardedString& x,
                                       const GuardedString& y);

/// (m1 <> m2)(x) = sum over splittings x = x1 <> x2 of m1(x1) * m2(x2).
Weighting<GuardedString> lifted_concat(const Weighting<GuardedString>& m1,
                                       const Weighting<GuardedString>& m2);

/// Pairs an input packet with an output history: the history read
/// tail-to-head supplies pi1..pin.
GuardedString history_to_gs(PacketId input, const History& h);
std::pair<PacketId, History> gs_to_io(const GuardedString& x);

std::string print_gs(const FieldSchema& schema, const GuardedString& x);

/// Weighted language of the policy at a single guarded string, by structural
/// recursion on the language model with iteration cut at `depth` unrollings.
/// Exact for star-free policies; exact under iteration whenever the partial
/// sums stabilize by `depth`.
Value language_weight_oracle(const PolPtr& p, const GuardedString& x,
                             int depth, const FieldSchema& schema,
                             SemiringHandle sr);

/// All guarded strings with exactly `dups` dups, in lexicographic order.
std::vector<GuardedString> enumerate_gs(const FieldSchema& schema,
                                        size_t dups);

}  // namespace wnk

#endif  // WNK_GUARDED_HPP
