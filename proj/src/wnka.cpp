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

#include "wnk/wnka.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace wnk {

namespace {

void vec_add_in(SparseVec& v, StateId s, const Value& w, SemiringHandle sr) {
  if (sr->is_zero(w)) return;
  auto it = v.find(s);
  if (it == v.end()) {
    v.emplace(s, w);
  } else {
    it->second = sr->add(it->second, w);
    if (sr->is_zero(it->second)) v.erase(it);
  }
}

void mat_add_in(SparseMat& m, StateId from, StateId to, const Value& w,
                SemiringHandle sr) {
  if (sr->is_zero(w)) return;
  auto key = std::make_pair(from, to);
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, w);
  } else {
    it->second = sr->add(it->second, w);
    if (sr->is_zero(it->second)) m.erase(it);
  }
}

void val_add_in(PacketVal& v, PacketId pk, const Value& w, SemiringHandle sr) {
  if (sr->is_zero(w)) return;
  auto it = v.find(pk);
  if (it == v.end()) {
    v.emplace(pk, w);
  } else {
    it->second = sr->add(it->second, w);
    if (sr->is_zero(it->second)) v.erase(it);
  }
}

/// Sorted-state-set view used to restrict family computations to the rows a
/// caller actually consumes.
struct Needed {
  const std::vector<StateId>& v;
  bool contains(StateId s) const {
    return std::binary_search(v.begin(), v.end(), s);
  }
  bool overlaps(StateId lo, StateId hi) const {
    auto it = std::lower_bound(v.begin(), v.end(), lo);
    return it != v.end() && *it < hi;
  }
};

}  // namespace

namespace detail {

struct Node {
  PolKind kind;
  const Pol* pol = nullptr;
  std::unique_ptr<Node> a, b;
  StateId lo = 0, hi = 0;  // global state range [lo, hi)
  StateId s0 = 0;          // primitive state; dup pre-state; star loop state

  const FieldSchema* schema = nullptr;
  SemiringHandle sr = nullptr;

  SparseVec init;

  std::unordered_map<PacketId, PacketVal> iout_memo;
  std::unordered_map<PacketId, PacketVec> istep_memo;
  std::unordered_map<PacketId, PacketVal> closure_memo;  // Star only

  // ---- construction -------------------------------------------------------

  static std::unique_ptr<Node> build(const Pol* p, const FieldSchema& schema,
                                     SemiringHandle sr, StateId& next,
                                     std::vector<std::string>& labels) {
    auto n = std::make_unique<Node>();
    n->kind = p->kind;
    n->pol = p;
    n->schema = &schema;
    n->sr = sr;
    n->lo = next;
    switch (p->kind) {
      case PolKind::Filter:
        n->s0 = next++;
        labels.push_back("test[" + print_pred(schema, p->pred) + "]");
        break;
      case PolKind::CompleteTest:
        n->s0 = next++;
        labels.push_back("test[" + schema.print_packet(p->packet) + "]");
        break;
      case PolKind::Assign:
        n->s0 = next++;
        labels.push_back("set[" + schema.field_name(p->field) + ":=" +
                         schema.value_name(p->field, p->value) + "]");
        break;
      case PolKind::CompleteAssign:
        n->s0 = next++;
        labels.push_back("set[" + schema.print_packet(p->packet) + "]");
        break;
      case PolKind::Dup:
        n->s0 = next;
        next += 2;
        labels.push_back("dup.pre");
        labels.push_back("dup.post");
        break;
      case PolKind::Weigh:
        n->a = build(p->a.get(), schema, sr, next, labels);
        break;
      case PolKind::Seq:
      case PolKind::Choice:
        n->a = build(p->a.get(), schema, sr, next, labels);
        n->b = build(p->b.get(), schema, sr, next, labels);
        break;
      case PolKind::Star:
        n->a = build(p->a.get(), schema, sr, next, labels);
        n->s0 = next++;
        labels.push_back("star.loop");
        break;
    }
    n->hi = next;
    n->compute_init();
    return n;
  }

  void compute_init() {
    switch (kind) {
      case PolKind::Filter:
      case PolKind::CompleteTest:
      case PolKind::Assign:
      case PolKind::CompleteAssign:
      case PolKind::Dup:
        init.emplace(s0, sr->one());
        break;
      case PolKind::Weigh:
        for (const auto& [s, w] : a->init)
          vec_add_in(init, s, sr->mul(pol->weight, w), sr);
        break;
      case PolKind::Choice:
        init = a->init;
        for (const auto& [s, w] : b->init) vec_add_in(init, s, w, sr);
        break;
      case PolKind::Seq:
        init = a->init;
        break;
      case PolKind::Star:
        init.emplace(s0, sr->one());
        break;
    }
  }

  // ---- entry-weighted families --------------------------------------------

  // iota x Lambda_{alpha,.}: the one-pass packet transfer function.
  const PacketVal& iout(PacketId alpha) {
    auto it = iout_memo.find(alpha);
    if (it != iout_memo.end()) return it->second;
    PacketVal out;
    switch (kind) {
      case PolKind::Filter:
        if (eval_predicate(*schema, *pol->pred, alpha))
          out.emplace(alpha, sr->one());
        break;
      case PolKind::CompleteTest:
        if (alpha == pol->packet) out.emplace(alpha, sr->one());
        break;
      case PolKind::Assign:
        out.emplace(schema->set(alpha, pol->field, pol->value), sr->one());
        break;
      case PolKind::CompleteAssign:
        out.emplace(pol->packet, sr->one());
        break;
      case PolKind::Dup:
        break;  // iota sits on the pre state, output on the post state
      case PolKind::Weigh:
        for (const auto& [beta, w] : a->iout(alpha))
          val_add_in(out, beta, sr->mul(pol->weight, w), sr);
        break;
      case PolKind::Choice:
        out = a->iout(alpha);
        for (const auto& [beta, w] : b->iout(alpha))
          val_add_in(out, beta, w, sr);
        break;
      case PolKind::Seq:
        for (const auto& [gamma, w1] : a->iout(alpha))
          for (const auto& [beta, w2] : b->iout(gamma))
            val_add_in(out, beta, sr->mul(w1, w2), sr);
        break;
      case PolKind::Star:
        out = closure_row(alpha);
        break;
    }
    return iout_memo.emplace(alpha, std::move(out)).first->second;
  }

  // iota x Delta_{alpha,.}.
  const PacketVec& istep(PacketId alpha) {
    auto it = istep_memo.find(alpha);
    if (it != istep_memo.end()) return it->second;
    PacketVec out;
    switch (kind) {
      case PolKind::Filter:
      case PolKind::CompleteTest:
      case PolKind::Assign:
      case PolKind::CompleteAssign:
        break;
      case PolKind::Dup:
        out[alpha].emplace(s0 + 1, sr->one());
        break;
      case PolKind::Weigh:
        for (const auto& [beta, vec] : a->istep(alpha))
          for (const auto& [s, w] : vec)
            vec_add_in(out[beta], s, sr->mul(pol->weight, w), sr);
        break;
      case PolKind::Choice:
        out = a->istep(alpha);
        for (const auto& [beta, vec] : b->istep(alpha))
          for (const auto& [s, w] : vec) vec_add_in(out[beta], s, w, sr);
        break;
      case PolKind::Seq:
        out = a->istep(alpha);
        for (const auto& [gamma, w1] : a->iout(alpha))
          for (const auto& [beta, vec] : b->istep(gamma))
            for (const auto& [s, w2] : vec)
              vec_add_in(out[beta], s, sr->mul(w1, w2), sr);
        break;
      case PolKind::Star:
        for (const auto& [delta, c] : closure_row(alpha))
          for (const auto& [beta, vec] : a->istep(delta))
            for (const auto& [s, w] : vec)
              vec_add_in(out[beta], s, sr->mul(c, w), sr);
        break;
    }
    // drop empty rows so iteration sees only nonzero entries
    for (auto row = out.begin(); row != out.end();)
      row = row->second.empty() ? out.erase(row) : std::next(row);
    return istep_memo.emplace(alpha, std::move(out)).first->second;
  }

  // Row alpha of the matrix star of (iota_a (x) Lambda_a), the square
  // packet-indexed matrix from the iteration case of the construction.
  const PacketVal& closure_row(PacketId alpha) {
    auto it = closure_memo.find(alpha);
    if (it != closure_memo.end()) return it->second;

    // packets reachable from alpha through the one-pass transfer function
    std::vector<PacketId> order{alpha};
    std::unordered_map<PacketId, size_t> index{{alpha, 0}};
    for (size_t i = 0; i < order.size(); ++i)
      for (const auto& [beta, w] : a->iout(order[i]))
        if (index.emplace(beta, order.size()).second) order.push_back(beta);

    WeightingMatrix m(sr, order.size(), order.size());
    for (size_t i = 0; i < order.size(); ++i)
      for (const auto& [beta, w] : a->iout(order[i]))
        m.set(i, index.at(beta), w);
    WeightingMatrix s = mat_star(m);

    PacketVal row;
    for (size_t j = 0; j < order.size(); ++j)
      if (!sr->is_zero(s.at(0, j))) row.emplace(order[j], s.at(0, j));
    return closure_memo.emplace(alpha, std::move(row)).first->second;
  }

  // ---- row-restricted families --------------------------------------------

  PacketVec out_rows(PacketId alpha, const Needed& needed) {
    PacketVec out;
    if (!needed.overlaps(lo, hi)) return out;
    switch (kind) {
      case PolKind::Filter:
        if (needed.contains(s0) && eval_predicate(*schema, *pol->pred, alpha))
          out[alpha].emplace(s0, sr->one());
        break;
      case PolKind::CompleteTest:
        if (needed.contains(s0) && alpha == pol->packet)
          out[alpha].emplace(s0, sr->one());
        break;
      case PolKind::Assign:
        if (needed.contains(s0))
          out[schema->set(alpha, pol->field, pol->value)].emplace(s0,
                                                                  sr->one());
        break;
      case PolKind::CompleteAssign:
        if (needed.contains(s0)) out[pol->packet].emplace(s0, sr->one());
        break;
      case PolKind::Dup:
        if (needed.contains(s0 + 1)) out[alpha].emplace(s0 + 1, sr->one());
        break;
      case PolKind::Weigh:
        return a->out_rows(alpha, needed);  // Lambda is untouched by weighting
      case PolKind::Choice: {
        out = a->out_rows(alpha, needed);
        for (auto& [beta, vec] : b->out_rows(alpha, needed))
          for (const auto& [s, w] : vec) vec_add_in(out[beta], s, w, sr);
        break;
      }
      case PolKind::Seq: {
        for (const auto& [gamma, vec1] : a->out_rows(alpha, needed))
          for (const auto& [beta, w2] : b->iout(gamma))
            for (const auto& [s, w1] : vec1)
              vec_add_in(out[beta], s, sr->mul(w1, w2), sr);
        for (auto& [beta, vec] : b->out_rows(alpha, needed))
          for (const auto& [s, w] : vec) vec_add_in(out[beta], s, w, sr);
        break;
      }
      case PolKind::Star: {
        for (const auto& [gamma, vec1] : a->out_rows(alpha, needed))
          for (const auto& [beta, c] : closure_row(gamma))
            for (const auto& [s, w1] : vec1)
              vec_add_in(out[beta], s, sr->mul(w1, c), sr);
        if (needed.contains(s0))
          for (const auto& [beta, c] : closure_row(alpha))
            vec_add_in(out[beta], s0, c, sr);
        break;
      }
    }
    for (auto row = out.begin(); row != out.end();)
      row = row->second.empty() ? out.erase(row) : std::next(row);
    return out;
  }

  PacketMat step_rows(PacketId alpha, const Needed& needed) {
    PacketMat out;
    if (!needed.overlaps(lo, hi)) return out;
    switch (kind) {
      case PolKind::Filter:
      case PolKind::CompleteTest:
      case PolKind::Assign:
      case PolKind::CompleteAssign:
        break;
      case PolKind::Dup:
        if (needed.contains(s0))
          out[alpha].emplace(std::make_pair(s0, s0 + 1), sr->one());
        break;
      case PolKind::Weigh:
        return a->step_rows(alpha, needed);  // Delta is untouched
      case PolKind::Choice: {
        out = a->step_rows(alpha, needed);
        for (auto& [beta, mat] : b->step_rows(alpha, needed))
          for (const auto& [qq, w] : mat)
            mat_add_in(out[beta], qq.first, qq.second, w, sr);
        break;
      }
      case PolKind::Seq: {
        out = a->step_rows(alpha, needed);
        // bridge: exit a, enter b, take b's first transition
        for (const auto& [gamma, vec1] : a->out_rows(alpha, needed))
          for (const auto& [beta, ivec] : b->istep(gamma))
            for (const auto& [q, w1] : vec1)
              for (const auto& [q2, w2] : ivec)
                mat_add_in(out[beta], q, q2, sr->mul(w1, w2), sr);
        for (auto& [beta, mat] : b->step_rows(alpha, needed))
          for (const auto& [qq, w] : mat)
            mat_add_in(out[beta], qq.first, qq.second, w, sr);
        break;
      }
      case PolKind::Star: {
        out = a->step_rows(alpha, needed);
        // loop: exit the body, pass through the loop state, re-enter
        for (const auto& [gamma, vec1] : a->out_rows(alpha, needed))
          for (const auto& [delta, c] : closure_row(gamma))
            for (const auto& [beta, ivec] : a->istep(delta))
              for (const auto& [q, w1] : vec1)
                for (const auto& [q2, w2] : ivec)
                  mat_add_in(out[beta], q, q2,
                             sr->mul(w1, sr->mul(c, w2)), sr);
        if (needed.contains(s0))
          for (const auto& [delta, c] : closure_row(alpha))
            for (const auto& [beta, ivec] : a->istep(delta))
              for (const auto& [q2, w2] : ivec)
                mat_add_in(out[beta], s0, q2, sr->mul(c, w2), sr);
        break;
      }
    }
    for (auto row = out.begin(); row != out.end();)
      row = row->second.empty() ? out.erase(row) : std::next(row);
    return out;
  }
};

}  // namespace detail

Wnka::Wnka(PolPtr policy, const FieldSchema& schema, SemiringHandle sr)
    : policy_(std::move(policy)), schema_(&schema), sr_(sr) {
  StateId next = 0;
  root_ = detail::Node::build(policy_.get(), schema, sr, next, labels_);
  init_ = root_->init;
}

Wnka::~Wnka() = default;

PacketMat Wnka::step_rows(PacketId alpha,
                          const std::vector<StateId>& needed) const {
  std::lock_guard<std::mutex> lock(mu_);
  return root_->step_rows(alpha, Needed{needed});
}

PacketVec Wnka::out_rows(PacketId alpha,
                         const std::vector<StateId>& needed) const {
  std::lock_guard<std::mutex> lock(mu_);
  return root_->out_rows(alpha, Needed{needed});
}

PacketVec Wnka::init_step(PacketId alpha) const {
  std::lock_guard<std::mutex> lock(mu_);
  return root_->istep(alpha);
}

PacketVal Wnka::init_out(PacketId alpha) const {
  std::lock_guard<std::mutex> lock(mu_);
  return root_->iout(alpha);
}

std::vector<StateId> Wnka::all_states() const {
  std::vector<StateId> v(num_states());
  for (StateId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

SparseMat Wnka::delta(PacketId alpha, PacketId beta) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<StateId> all(num_states());
  for (StateId i = 0; i < all.size(); ++i) all[i] = i;
  PacketMat rows = root_->step_rows(alpha, Needed{all});
  auto it = rows.find(beta);
  return it == rows.end() ? SparseMat{} : it->second;
}

SparseVec Wnka::lambda(PacketId alpha, PacketId beta) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<StateId> all(num_states());
  for (StateId i = 0; i < all.size(); ++i) all[i] = i;
  PacketVec rows = root_->out_rows(alpha, Needed{all});
  auto it = rows.find(beta);
  return it == rows.end() ? SparseVec{} : it->second;
}

Value Wnka::accept_weight(const GuardedString& x) const {
  std::lock_guard<std::mutex> lock(mu_);
  SparseVec v = init_;
  const auto& pkts = x.pkts;
  for (size_t i = 0; i + 2 < pkts.size() && !v.empty(); ++i) {
    std::vector<StateId> supp;
    supp.reserve(v.size());
    for (const auto& [s, w] : v) supp.push_back(s);
    PacketMat rows = root_->step_rows(pkts[i], Needed{supp});
    SparseVec next;
    auto it = rows.find(pkts[i + 1]);
    if (it != rows.end())
      for (const auto& [qq, w] : it->second)
        vec_add_in(next, qq.second, sr_->mul(v.at(qq.first), w), sr_);
    v = std::move(next);
  }
  if (v.empty()) return sr_->zero();
  std::vector<StateId> supp;
  supp.reserve(v.size());
  for (const auto& [s, w] : v) supp.push_back(s);
  PacketVec rows = root_->out_rows(pkts[pkts.size() - 2], Needed{supp});
  Value total = sr_->zero();
  auto it = rows.find(pkts.back());
  if (it != rows.end())
    for (const auto& [s, w] : it->second)
      total = sr_->add(total, sr_->mul(v.at(s), w));
  return total;
}

Wnka thompson(PolPtr policy, const FieldSchema& schema, SemiringHandle sr) {
  return Wnka(std::move(policy), schema, sr);
}

Value PacketConfigAutomaton::accept(const GuardedString& x) const {
  SparseVec v{{kInit, sr->one()}};
  for (PacketId pk : x.pkts) {
    auto it = delta.find(pk);
    SparseVec next;
    if (it != delta.end())
      for (const auto& [qq, w] : it->second) {
        auto vi = v.find(qq.first);
        if (vi != v.end()) vec_add_in(next, qq.second, sr->mul(vi->second, w), sr);
      }
    v = std::move(next);
    if (v.empty()) return sr->zero();
  }
  auto it = v.find(kFinal);
  return it == v.end() ? sr->zero() : it->second;
}

PacketConfigAutomaton unfold(const Wnka& a, uint64_t pair_cap) {
  const uint64_t pk_count = a.schema().packet_count();
  if (pk_count * pk_count > pair_cap)
    throw ResourceError("packet space too large to materialize the unfolding (" +
                        std::to_string(pk_count * pk_count) + " pairs)");
  PacketConfigAutomaton u;
  u.sr = a.semiring();
  u.base_states = a.num_states();
  u.packets = pk_count;

  std::vector<StateId> all = a.all_states();
  for (PacketId beta = 0; beta < pk_count; ++beta) {
    // q_iota -> (q, beta) carries iota(q)
    for (const auto& [q, w] : a.init())
      u.delta[beta].emplace(std::make_pair(u.kInit, u.config(q, beta)), w);
  }
  for (PacketId alpha = 0; alpha < pk_count; ++alpha) {
    for (const auto& [beta, mat] : a.step_rows(alpha, all))
      for (const auto& [qq, w] : mat)
        u.delta[beta].emplace(std::make_pair(u.config(qq.first, alpha),
                                             u.config(qq.second, beta)),
                              w);
    for (const auto& [beta, vec] : a.out_rows(alpha, all))
      for (const auto& [q, w] : vec)
        u.delta[beta].emplace(std::make_pair(u.config(q, alpha), u.kFinal),
                              w);
  }
  return u;
}

}  // namespace wnk
