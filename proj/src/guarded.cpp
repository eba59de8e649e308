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

#include "wnk/guarded.hpp"

#include <algorithm>

namespace wnk {

std::optional<GuardedString> gs_concat(const GuardedString& x,
                                       const GuardedString& y) {
  if (x.last() != y.first()) return std::nullopt;
  std::vector<PacketId> pkts;
  pkts.reserve(x.pkts.size() + y.pkts.size() - 2);
  pkts.insert(pkts.end(), x.pkts.begin(), x.pkts.end() - 1);
  pkts.insert(pkts.end(), y.pkts.begin() + 1, y.pkts.end());
  return GuardedString(std::move(pkts));
}

Weighting<GuardedString> lifted_concat(const Weighting<GuardedString>& m1,
                                       const Weighting<GuardedString>& m2) {
  Weighting<GuardedString> out(m1.semiring());
  SemiringHandle sr = m1.semiring();
  for (const auto& [x1, w1] : m1.entries())
    for (const auto& [x2, w2] : m2.entries())
      if (auto x = gs_concat(x1, x2)) out.add_in(*x, sr->mul(w1, w2));
  return out;
}

GuardedString history_to_gs(PacketId input, const History& h) {
  std::vector<PacketId> pkts;
  pkts.reserve(h.size() + 1);
  pkts.push_back(input);
  pkts.insert(pkts.end(), h.rbegin(), h.rend());
  return GuardedString(std::move(pkts));
}

std::pair<PacketId, History> gs_to_io(const GuardedString& x) {
  History h(x.pkts.rbegin(), x.pkts.rend());
  h.pop_back();  // drop the input packet
  return {x.first(), h};
}

std::string print_gs(const FieldSchema& schema, const GuardedString& x) {
  std::string out = schema.print_packet(x.pkts[0]);
  out += " | ";
  out += schema.print_packet(x.pkts[1]);
  for (size_t i = 2; i < x.pkts.size(); ++i) {
    out += " dup ";
    out += schema.print_packet(x.pkts[i]);
  }
  return out;
}

namespace {

Value oracle_rec(const PolPtr& p, const GuardedString& x, int depth,
                 const FieldSchema& schema, SemiringHandle sr) {
  const size_t n = x.pkts.size();
  switch (p->kind) {
    case PolKind::Filter:
      return n == 2 && x.pkts[0] == x.pkts[1] &&
                     eval_predicate(schema, *p->pred, x.pkts[0])
                 ? sr->one()
                 : sr->zero();
    case PolKind::CompleteTest:
      return n == 2 && x.pkts[0] == p->packet && x.pkts[1] == p->packet
                 ? sr->one()
                 : sr->zero();
    case PolKind::Assign:
      return n == 2 && x.pkts[1] == schema.set(x.pkts[0], p->field, p->value)
                 ? sr->one()
                 : sr->zero();
    case PolKind::CompleteAssign:
      return n == 2 && x.pkts[1] == p->packet ? sr->one() : sr->zero();
    case PolKind::Dup:
      return n == 3 && x.pkts[0] == x.pkts[1] && x.pkts[1] == x.pkts[2]
                 ? sr->one()
                 : sr->zero();
    case PolKind::Weigh:
      return sr->mul(p->weight, oracle_rec(p->a, x, depth, schema, sr));
    case PolKind::Choice:
      return sr->add(oracle_rec(p->a, x, depth, schema, sr),
                     oracle_rec(p->b, x, depth, schema, sr));
    case PolKind::Seq: {
      // x = x1 <> x2: pick a cut position and the fused glue packet
      Value total = sr->zero();
      for (size_t i = 0; i + 1 < n; ++i) {
        for (PacketId glue = 0; glue < schema.packet_count(); ++glue) {
          std::vector<PacketId> left(x.pkts.begin(), x.pkts.begin() + i + 1);
          left.push_back(glue);
          std::vector<PacketId> right;
          right.push_back(glue);
          right.insert(right.end(), x.pkts.begin() + i + 1, x.pkts.end());
          Value w1 = oracle_rec(p->a, GuardedString(std::move(left)), depth,
                                schema, sr);
          if (sr->is_zero(w1)) continue;
          Value w2 = oracle_rec(p->b, GuardedString(std::move(right)), depth,
                                schema, sr);
          total = sr->add(total, sr->mul(w1, w2));
        }
      }
      return total;
    }
    case PolKind::Star: {
      // sum of the k-fold unrollings up to the cut-off depth
      Value total = oracle_rec(skip(), x, depth, schema, sr);
      PolPtr pow = skip();
      for (int k = 1; k <= depth; ++k) {
        pow = seq(p->a, pow);
        total = sr->add(total, oracle_rec(pow, x, depth, schema, sr));
      }
      return total;
    }
  }
  throw Error("unreachable");
}

}  // namespace

Value language_weight_oracle(const PolPtr& p, const GuardedString& x,
                             int depth, const FieldSchema& schema,
                             SemiringHandle sr) {
  return oracle_rec(p, x, depth, schema, sr);
}

std::vector<GuardedString> enumerate_gs(const FieldSchema& schema,
                                        size_t dups) {
  const size_t len = dups + 2;
  const PacketId count = static_cast<PacketId>(schema.packet_count());
  std::vector<GuardedString> out;
  std::vector<PacketId> cur(len, 0);
  for (;;) {
    out.push_back(GuardedString(cur));
    size_t i = len;
    while (i-- > 0) {
      if (++cur[i] < count) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace wnk
