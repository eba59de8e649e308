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

#include "wnk/denotational.hpp"

#include <vector>

namespace wnk {

namespace {

PolPtr nfold(const PolPtr& p, int i) {
  // p^0 = skip, p^(i+1) = p ; p^i
  PolPtr out = skip();
  for (int k = 0; k < i; ++k) out = seq(p, out);
  return out;
}

}  // namespace

PolPtr approximant(const PolPtr& p, int n) {
  switch (p->kind) {
    case PolKind::Filter:
    case PolKind::Assign:
    case PolKind::Dup:
    case PolKind::CompleteTest:
    case PolKind::CompleteAssign:
      return p;
    case PolKind::Seq:
      return seq(approximant(p->a, n), approximant(p->b, n));
    case PolKind::Weigh:
      return weigh(p->weight, approximant(p->a, n));
    case PolKind::Choice:
      return choice(approximant(p->a, n), approximant(p->b, n));
    case PolKind::Star: {
      PolPtr body = approximant(p->a, n);
      // skip + body + body^2 + ... + body^n, folded onto the sum's drop base
      PolPtr out = drop();
      for (int i = n; i >= 0; --i) out = choice(nfold(body, i), out);
      return out;
    }
  }
  throw Error("unreachable");
}

PolPtr nfold_guarded(const PredPtr& t, const PolPtr& p, int n) {
  // 0-fold: !t ; (n+1)-fold: if t then p;(n-fold) else skip
  PolPtr out = filter(pred_not(t));
  for (int k = 0; k < n; ++k)
    out = choice(seq(filter(t), seq(p, out)),
                 seq(filter(pred_not(t)), skip()));
  return out;
}

Weighting<History> eval_star_free(const PolPtr& p, const History& h,
                                  const FieldSchema& schema,
                                  SemiringHandle sr, size_t max_len) {
  if (h.empty()) throw Error("history must be non-empty");
  if (max_len && h.size() > max_len) return Weighting<History>(sr);
  switch (p->kind) {
    case PolKind::Filter:
      if (eval_predicate(schema, *p->pred, h.front()))
        return Weighting<History>::unit(sr, h);
      return Weighting<History>(sr);
    case PolKind::CompleteTest:
      if (h.front() == p->packet) return Weighting<History>::unit(sr, h);
      return Weighting<History>(sr);
    case PolKind::Assign: {
      History out = h;
      out.front() = schema.set(out.front(), p->field, p->value);
      return Weighting<History>::unit(sr, out);
    }
    case PolKind::CompleteAssign: {
      History out = h;
      out.front() = p->packet;
      return Weighting<History>::unit(sr, out);
    }
    case PolKind::Dup: {
      History out;
      out.reserve(h.size() + 1);
      out.push_back(h.front());
      out.insert(out.end(), h.begin(), h.end());
      if (max_len && out.size() > max_len) return Weighting<History>(sr);
      return Weighting<History>::unit(sr, out);
    }
    case PolKind::Seq: {
      Weighting<History> first = eval_star_free(p->a, h, schema, sr, max_len);
      return first.bind([&](const History& mid) {
        return eval_star_free(p->b, mid, schema, sr, max_len);
      });
    }
    case PolKind::Weigh:
      return eval_star_free(p->a, h, schema, sr, max_len)
          .scale_left(p->weight);
    case PolKind::Choice:
      return eval_star_free(p->a, h, schema, sr, max_len)
          .w_add(eval_star_free(p->b, h, schema, sr, max_len));
    case PolKind::Star:
      throw Error("eval_star_free applied to a policy with iteration");
  }
  throw Error("unreachable");
}

Weighting<History> eval_approx(const PolPtr& p, int n, const History& h,
                               const FieldSchema& schema, SemiringHandle sr,
                               size_t max_len) {
  return eval_star_free(approximant(p, n), h, schema, sr, max_len);
}

}  // namespace wnk
