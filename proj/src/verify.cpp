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

#include "wnk/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wnk {

namespace {

using Config = std::pair<StateId, PacketId>;

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

std::vector<StateId> support(const SparseVec& v) {
  std::vector<StateId> supp;
  supp.reserve(v.size());
  for (const auto& [s, w] : v) supp.push_back(s);
  return supp;
}

}  // namespace

GuardedString Run::to_gs() const {
  std::vector<PacketId> pkts;
  for (const auto& s : steps) pkts.push_back(s.a);
  pkts.push_back(final_a);
  pkts.push_back(final_b);
  return GuardedString(std::move(pkts));
}

Value total_weight(const Wnka& a, const VerifyLimits& limits) {
  SemiringHandle sr = a.semiring();
  const PacketId pk_count = static_cast<PacketId>(a.schema().packet_count());

  // forward-reachable slice of the unfolding, node 0 = q_iota, 1 = q_lambda
  std::map<Config, size_t> index;
  std::vector<Config> order;
  std::vector<std::vector<std::pair<size_t, Value>>> edges(2);
  auto intern = [&](const Config& c) {
    auto [it, fresh] = index.emplace(c, order.size() + 2);
    if (fresh) {
      order.push_back(c);
      edges.emplace_back();
      if (order.size() > limits.max_configs)
        throw ResourceError("total-weight configuration cap exceeded");
    }
    return it->second;
  };

  for (const auto& [q, w] : a.init())
    for (PacketId beta = 0; beta < pk_count; ++beta) {
      size_t to = intern({q, beta});  // may grow `edges`
      edges[0].emplace_back(to, w);
    }

  // expand nodes in discovery order; `order` grows as configs are interned
  for (size_t i = 0; i < order.size(); ++i) {
    size_t node = i + 2;
    auto [q, alpha] = order[i];
    std::vector<StateId> needed{q};
    for (const auto& [beta, mat] : a.step_rows(alpha, needed))
      for (const auto& [qq, w] : mat) {
        size_t to = intern({qq.second, beta});  // may grow `edges`
        edges[node].emplace_back(to, w);
      }
    Value exit_w = sr->zero();
    for (const auto& [beta, vec] : a.out_rows(alpha, needed))
      exit_w = sr->add(exit_w, vec.at(q));
    if (!sr->is_zero(exit_w)) edges[node].emplace_back(1, exit_w);
  }

  // keep only nodes that can reach q_lambda
  const size_t n = edges.size();
  std::vector<std::vector<size_t>> rev(n);
  for (size_t from = 0; from < n; ++from)
    for (const auto& [to, w] : edges[from]) rev[to].push_back(from);
  std::vector<bool> coreach(n, false);
  std::vector<size_t> stack{1};
  coreach[1] = true;
  while (!stack.empty()) {
    size_t x = stack.back();
    stack.pop_back();
    for (size_t p : rev[x])
      if (!coreach[p]) {
        coreach[p] = true;
        stack.push_back(p);
      }
  }
  coreach[0] = true;

  std::vector<size_t> kept;
  std::vector<size_t> pos(n, SIZE_MAX);
  for (size_t i = 0; i < n; ++i)
    if (coreach[i]) {
      pos[i] = kept.size();
      kept.push_back(i);
    }

  WeightingMatrix m(sr, kept.size(), kept.size());
  for (size_t from = 0; from < n; ++from) {
    if (pos[from] == SIZE_MAX) continue;
    for (const auto& [to, w] : edges[from])
      if (pos[to] != SIZE_MAX) m.add_in(pos[from], pos[to], w);
  }
  WeightingMatrix closure = mat_star(m);
  return closure.at(pos[0], pos[1]);
}

Verdict check_safety(const Wnka& a, const Value& bound,
                     const VerifyLimits& limits) {
  SemiringHandle sr = a.semiring();
  if (!sr->safety_capable())
    throw CapabilityError("semiring '" + sr->name() +
                          "' does not satisfy the safety side condition");
  Value total = total_weight(a, limits);
  if (sr->leq(total, bound)) {
    Verdict v{VerdictKind::Safe, bound, total, std::nullopt};
    return v;
  }

  // Counterexample search: guarded strings by dup length, then
  // lexicographically on interned packet codes. The theorem guarantees one
  // exists; the cap turns pathological searches into a diagnostic failure
  // rather than a wrong verdict.
  const PacketId pk_count = static_cast<PacketId>(a.schema().packet_count());
  struct Prefix {
    std::vector<PacketId> pkts;
    SparseVec v;
  };
  std::vector<Prefix> frontier;
  for (PacketId p0 = 0; p0 < pk_count; ++p0)
    frontier.push_back(Prefix{{p0}, a.init()});

  for (int dups = 0; dups <= limits.max_witness_dups; ++dups) {
    for (const auto& pre : frontier) {
      auto supp = support(pre.v);
      for (const auto& [last, vec] : a.out_rows(pre.pkts.back(), supp)) {
        Value w = sr->zero();
        for (const auto& [q, lw] : vec)
          w = sr->add(w, sr->mul(pre.v.at(q), lw));
        if (!sr->leq(w, bound)) {
          std::vector<PacketId> pkts = pre.pkts;
          pkts.push_back(last);
          GuardedString gs(std::move(pkts));
          auto [input, hist] = gs_to_io(gs);
          if (eval_weight(a, input, hist) != w)
            throw Error("safety witness failed independent re-verification");
          return Verdict{VerdictKind::Unsafe, bound, total,
                         Witness{input, hist, gs, w}};
        }
      }
    }
    std::vector<Prefix> next;
    for (const auto& pre : frontier) {
      auto supp = support(pre.v);
      for (const auto& [beta, mat] : a.step_rows(pre.pkts.back(), supp)) {
        SparseVec v2;
        for (const auto& [qq, w] : mat)
          vec_add_in(v2, qq.second, sr->mul(pre.v.at(qq.first), w), sr);
        if (v2.empty()) continue;
        Prefix p2;
        p2.pkts = pre.pkts;
        p2.pkts.push_back(beta);
        p2.v = std::move(v2);
        next.push_back(std::move(p2));
        if (next.size() > limits.max_witness_prefixes)
          throw ResourceError("safety witness frontier cap exceeded");
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  throw ResourceError(
      "no safety counterexample found within the dup-length cap");
}

namespace {

struct ReachSearch {
  const Wnka& a;
  SemiringHandle sr;
  const Value& bound;
  const VerifyLimits& limits;
  size_t visited_runs = 0;
  std::set<Config> on_path;
  std::vector<PacketId> pkts;  // packets consumed so far (input first)
  std::optional<GuardedString> found;

  // at configuration (q, alpha) carrying accumulated weight w
  void dfs(StateId q, PacketId alpha, const Value& w) {
    if (found) return;
    if (++visited_runs > limits.max_runs)
      throw ResourceError("cycle-free run cap exceeded");
    if (pkts.size() > limits.max_run_length)
      throw ResourceError("run length cap exceeded");
    std::vector<StateId> needed{q};
    for (const auto& [beta, vec] : a.out_rows(alpha, needed)) {
      Value val = sr->mul(w, vec.at(q));
      if (sr->leq(bound, val)) {
        std::vector<PacketId> full = pkts;
        full.push_back(beta);
        found = GuardedString(std::move(full));
        return;
      }
    }
    for (const auto& [beta, mat] : a.step_rows(alpha, needed)) {
      for (const auto& [qq, dw] : mat) {
        Config target{qq.second, beta};
        if (on_path.count(target)) continue;  // would close a cycle
        on_path.insert(target);
        pkts.push_back(beta);
        dfs(qq.second, beta, sr->mul(w, dw));
        pkts.pop_back();
        on_path.erase(target);
        if (found) return;
      }
    }
  }
};

}  // namespace

Verdict check_reachability(const Wnka& a, const Value& bound,
                           const VerifyLimits& limits) {
  SemiringHandle sr = a.semiring();
  if (!sr->reach_capable())
    throw CapabilityError("semiring '" + sr->name() +
                          "' does not satisfy the reachability side condition");

  const PacketId pk_count = static_cast<PacketId>(a.schema().packet_count());
  ReachSearch search{a, sr, bound, limits};
  for (PacketId alpha = 0; alpha < pk_count && !search.found; ++alpha) {
    for (const auto& [q, iw] : a.init()) {
      search.on_path.clear();
      search.pkts = {alpha};
      search.dfs(q, alpha, iw);
      if (search.found) break;
    }
  }
  if (!search.found) return Verdict{VerdictKind::Unreachable, bound, {}, {}};

  GuardedString gs = *search.found;
  Value w = a.accept_weight(gs);  // independent re-verification
  if (!sr->leq(bound, w))
    throw Error("reachability witness failed independent re-verification");
  auto [input, hist] = gs_to_io(gs);
  return Verdict{VerdictKind::Reachable, bound, {},
                 Witness{input, hist, gs, w}};
}

Value run_weight(const Wnka& a, const Run& run) {
  SemiringHandle sr = a.semiring();
  Value w = sr->one();
  StateId at = run.start;
  PacketId carry = run.steps.empty() ? run.final_a : run.steps.front().a;
  for (const auto& step : run.steps) {
    if (step.from != at || step.a != carry)
      throw Error("run steps do not chain");
    SparseMat mat = a.delta(step.a, step.b);
    auto it = mat.find({step.from, step.to});
    if (it == mat.end()) throw Error("run uses a zero transition");
    w = sr->mul(w, it->second);
    at = step.to;
    carry = step.b;
  }
  if (run.final_state != at || run.final_a != carry)
    throw Error("run output pair does not chain");
  return w;
}

namespace {

struct RunEnum {
  const Wnka& a;
  SemiringHandle sr;
  const VerifyLimits& limits;
  std::vector<Run> out;
  std::set<Config> on_path;
  std::vector<RunStep> steps;

  void emit(StateId start, StateId q, PacketId alpha) {
    std::vector<StateId> needed{q};
    for (const auto& [beta, vec] : a.out_rows(alpha, needed)) {
      (void)vec;
      Run r;
      r.start = start;
      r.steps = steps;
      r.final_a = alpha;
      r.final_b = beta;
      r.final_state = q;
      out.push_back(std::move(r));
      if (out.size() > limits.max_runs)
        throw ResourceError("cycle-free run cap exceeded");
    }
  }

  void dfs(StateId start, StateId q, PacketId alpha) {
    emit(start, q, alpha);
    std::vector<StateId> needed{q};
    for (const auto& [beta, mat] : a.step_rows(alpha, needed)) {
      for (const auto& [qq, w] : mat) {
        Config target{qq.second, beta};
        if (on_path.count(target)) continue;
        on_path.insert(target);
        steps.push_back(RunStep{q, alpha, beta, qq.second});
        dfs(start, qq.second, beta);
        steps.pop_back();
        on_path.erase(target);
      }
    }
  }
};

}  // namespace

std::vector<Run> enumerate_cycle_free_runs(const Wnka& a,
                                           const VerifyLimits& limits) {
  RunEnum e{a, a.semiring(), limits};
  const PacketId pk_count = static_cast<PacketId>(a.schema().packet_count());
  for (StateId q = 0; q < a.num_states(); ++q)
    for (PacketId alpha = 0; alpha < pk_count; ++alpha) {
      e.on_path.clear();
      e.steps.clear();
      e.dfs(q, q, alpha);
    }
  return e.out;
}

Value eval_weight(const Wnka& a, PacketId input, const History& h) {
  return a.accept_weight(history_to_gs(input, h));
}

}  // namespace wnk
