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

#include "wnk/reduce.hpp"

#include <vector>

namespace wnk {

namespace {

PolPtr sum_terms(const std::vector<PolPtr>& terms, const Semiring& sr) {
  if (terms.empty())
    // the all-zero case keeps a single annihilated summand so the result
    // stays inside the reduced grammar
    return weigh(sr.zero(), complete_test(0));
  PolPtr out = terms.back();
  for (size_t i = terms.size() - 1; i-- > 0;) out = choice(terms[i], out);
  return out;
}

PolPtr reduce_rec(const PolPtr& p, const FieldSchema& schema,
                  const Semiring& sr) {
  switch (p->kind) {
    case PolKind::Filter: {
      // t  ->  sum over packets of [pk |= t] (.) pk?
      std::vector<PolPtr> terms;
      for (PacketId pk = 0; pk < schema.packet_count(); ++pk)
        if (eval_predicate(schema, *p->pred, pk))
          terms.push_back(complete_test(pk));
      return sum_terms(terms, sr);
    }
    case PolKind::Assign: {
      // f:=n  ->  sum over packets of pk? ; (pk[f:=n])!
      std::vector<PolPtr> terms;
      for (PacketId pk = 0; pk < schema.packet_count(); ++pk)
        terms.push_back(seq(complete_test(pk),
                            complete_assign(schema.set(pk, p->field, p->value))));
      return sum_terms(terms, sr);
    }
    case PolKind::Dup:
    case PolKind::CompleteTest:
    case PolKind::CompleteAssign:
      return p;
    case PolKind::Seq:
      return seq(reduce_rec(p->a, schema, sr), reduce_rec(p->b, schema, sr));
    case PolKind::Weigh:
      return weigh(p->weight, reduce_rec(p->a, schema, sr));
    case PolKind::Choice:
      return choice(reduce_rec(p->a, schema, sr),
                    reduce_rec(p->b, schema, sr));
    case PolKind::Star:
      return star(reduce_rec(p->a, schema, sr));
  }
  throw Error("unreachable");
}

}  // namespace

ReducedPolicy reduce(const PolPtr& p, const FieldSchema& schema,
                     const Semiring& sr) {
  return ReducedPolicy{reduce_rec(p, schema, sr)};
}

bool is_reduced(const PolPtr& p) {
  switch (p->kind) {
    case PolKind::Filter:
    case PolKind::Assign:
      return false;
    case PolKind::Dup:
    case PolKind::CompleteTest:
    case PolKind::CompleteAssign:
      return true;
    case PolKind::Seq:
    case PolKind::Choice:
      return is_reduced(p->a) && is_reduced(p->b);
    case PolKind::Weigh:
    case PolKind::Star:
      return is_reduced(p->a);
  }
  return false;
}

}  // namespace wnk
