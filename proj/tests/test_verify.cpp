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

#include <random>
#include <set>

#include "common.hpp"
#include "wnk/denotational.hpp"
#include "wnk/parser.hpp"
#include "wnk/verify.hpp"

using namespace wnk;

TEST_CASE("total weight of drop and of a dup sandwich") {
  FieldSchema s = testing::tiny_schema();
  const Semiring& nat = Semiring::get(SemiringId::NatInf);
  CHECK(total_weight(Wnka(drop(), s, &nat)) == nat.zero());

  const Semiring& b = Semiring::get(SemiringId::Boolean);
  Wnka a(parse_policy("skip ; dup ; skip", s, b), s, &b);
  CHECK(total_weight(a) == b.one());
}

TEST_CASE("total weight of iterated dup: stabilizes at zero, diverges at 3") {
  FieldSchema s = testing::unit_schema();
  const Semiring& arc = Semiring::get(SemiringId::Arctic);

  Wnka zero_loop(parse_policy("(weight(0)@dup)*", s, arc), s, &arc);
  Wnka three_loop(parse_policy("(weight(3)@dup)*", s, arc), s, &arc);

  // partial-sum oracle over guarded strings with up to 6 dups
  auto partial = [&](const Wnka& a) {
    Value sum = arc.zero();
    for (size_t dups = 0; dups <= 6; ++dups)
      for (const auto& x : enumerate_gs(s, dups))
        sum = arc.add(sum, a.accept_weight(x));
    return sum;
  };
  // weight-0 loop: every partial sum is 0, and so is the total
  CHECK(partial(zero_loop) == arc.parse("0"));
  CHECK(total_weight(zero_loop) == arc.parse("0"));
  // weight-3 loop: partial sums grow without bound, total is infinite
  CHECK(partial(three_loop) == arc.parse("18"));
  CHECK(total_weight(three_loop) == arc.pos_inf());
}

TEST_CASE("total weight agrees with exhaustive sums on dup-free policies") {
  FieldSchema s = testing::tiny_schema();
  std::mt19937 rng(109);
  testing::PolicyGenOptions opt;
  opt.allow_dup = false;  // dup-free policies weigh only the 0-dup strings
  for (SemiringId id : {SemiringId::Boolean, SemiringId::Bottleneck,
                        SemiringId::Security, SemiringId::Viterbi,
                        SemiringId::Tropical, SemiringId::Arctic}) {
    const Semiring& sr = Semiring::get(id);
    for (int i = 0; i < 10; ++i) {
      PolPtr p = testing::random_policy(s, sr, rng, opt);
      Wnka a(p, s, &sr);
      Value total = total_weight(a);
      Value sum = sr.zero();
      for (const auto& x : enumerate_gs(s, 0))
        sum = sr.add(sum, a.accept_weight(x));
      for (const auto& x : enumerate_gs(s, 1))
        CHECK(a.accept_weight(x) == sr.zero());
      CHECK(total == sum);
    }
  }
}

TEST_CASE("safety refuses incapable semirings") {
  FieldSchema s = testing::tiny_schema();
  const Semiring& vit = Semiring::get(SemiringId::Viterbi);
  Wnka a(skip(), s, &vit);
  CHECK_THROWS_AS(check_safety(a, vit.one()), CapabilityError);
  const Semiring& arc = Semiring::get(SemiringId::Arctic);
  Wnka b(skip(), s, &arc);
  CHECK_THROWS_AS(check_reachability(b, arc.one()), CapabilityError);
}

TEST_CASE("safety verdicts with witness extraction") {
  FieldSchema s = testing::tiny_schema();
  const Semiring& arc = Semiring::get(SemiringId::Arctic);
  // two hops of cost 3 each; the g=0 guards rule out a third
  PolPtr p = parse_policy(
      "(f=0 & g=0 ; weight(3)@(f := 1) ; dup) + "
      "(f=1 & g=0 ; weight(3)@(g := 1) ; dup)",
      s, arc);
  Wnka a(star(p), s, &arc);
  Verdict safe = check_safety(a, arc.parse("6"));
  CHECK(safe.kind == VerdictKind::Safe);
  CHECK(*safe.total == arc.parse("6"));

  Verdict unsafe = check_safety(a, arc.parse("5"));
  CHECK(unsafe.kind == VerdictKind::Unsafe);
  REQUIRE(unsafe.witness.has_value());
  CHECK(unsafe.witness->weight == arc.parse("6"));
  // witness validity re-checked against the automaton
  CHECK(eval_weight(a, unsafe.witness->input, unsafe.witness->history) ==
        unsafe.witness->weight);
  CHECK_FALSE(arc.leq(unsafe.witness->weight, arc.parse("5")));
  // dup-length-major, lexicographic order: the 2-dup witness starts at the
  // least packet with f=0
  CHECK(unsafe.witness->gs.dups() == 2);
  CHECK(unsafe.witness->gs.first() == 0);
}

TEST_CASE("reachability verdicts and witness validity") {
  FieldSchema s = testing::tiny_schema();
  const Semiring& vit = Semiring::get(SemiringId::Viterbi);
  PolPtr p = parse_policy(
      "f=0 ; (weight(1/2)@(f := 1) + weight(3/4)@(g := 1)) ; dup ; g=1",
      s, vit);
  Wnka a(p, s, &vit);
  Verdict v = check_reachability(a, vit.parse("3/4"));
  CHECK(v.kind == VerdictKind::Reachable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->weight == vit.parse("3/4"));
  CHECK(vit.leq(vit.parse("3/4"), a.accept_weight(v.witness->gs)));

  Verdict no = check_reachability(a, vit.parse("4/5"));
  CHECK(no.kind == VerdictKind::Unreachable);
  CHECK_FALSE(no.witness.has_value());

  // drop is never reachable above the zero weight
  Wnka d(drop(), s, &vit);
  CHECK(check_reachability(d, vit.parse("1/4")).kind ==
        VerdictKind::Unreachable);
}

TEST_CASE("runs of a one-state looping automaton stop after one revisit") {
  FieldSchema s = testing::unit_schema();
  const Semiring& nat = Semiring::get(SemiringId::NatInf);
  Wnka a(parse_policy("(weight(3)@dup)*", s, nat), s, &nat);
  auto runs = enumerate_cycle_free_runs(a);
  // 0-step runs: states with nonzero output (the dup post state and the
  // loop state); 1-step runs: entering the post state from each of the
  // three states; the loop then revisits (post, alpha) and stops
  std::map<size_t, int> by_len;
  for (const auto& r : runs) ++by_len[r.steps.size()];
  CHECK(by_len.size() == 2);
  CHECK(by_len[0] == 2);
  CHECK(by_len[1] == 3);
  for (const auto& r : runs) CHECK(r.steps.size() <= 1);
}

TEST_CASE("runs of a filter are output-only") {
  FieldSchema s = testing::tiny_schema();
  const Semiring& b = Semiring::get(SemiringId::Boolean);
  Wnka a(skip(), s, &b);
  auto runs = enumerate_cycle_free_runs(a);
  CHECK(runs.size() == s.packet_count());  // one per matching (alpha, alpha)
  for (const auto& r : runs) {
    CHECK(r.steps.empty());
    CHECK(r.final_a == r.final_b);
    CHECK(run_weight(a, r) == b.one());  // base case of the run weight
  }
}

TEST_CASE("run weights multiply the transition entries") {
  FieldSchema s = testing::unit_schema();
  const Semiring& nat = Semiring::get(SemiringId::NatInf);
  Wnka a(parse_policy("(weight(3)@dup)*", s, nat), s, &nat);
  auto runs = enumerate_cycle_free_runs(a);
  for (const auto& r : runs)
    if (r.steps.size() == 1 && r.steps[0].from == r.steps[0].to)
      CHECK(run_weight(a, r) == nat.parse("3"));  // the looping transition

  Run bad;
  bad.start = 0;
  bad.steps = {RunStep{0, 0, 0, 2}};
  bad.final_a = 0;
  bad.final_b = 0;
  bad.final_state = 0;  // does not chain with the step target
  CHECK_THROWS_AS(run_weight(a, bad), Error);
}

TEST_CASE("run count respects the configuration bound on random automata") {
  FieldSchema s = testing::tiny_schema();
  std::mt19937 rng(113);
  testing::PolicyGenOptions opt;
  opt.max_depth = 3;
  const Semiring& b = Semiring::get(SemiringId::Boolean);
  for (int i = 0; i < 6; ++i) {
    PolPtr p = testing::random_policy(s, b, rng, opt);
    Wnka a(p, s, &b);
    auto runs = enumerate_cycle_free_runs(a);
    // every run visits a set of distinct (state, packet) configurations, so
    // step counts are bounded by |Q| * |Pk|
    size_t bound = a.num_states() * s.packet_count();
    std::set<std::vector<uint64_t>> unique;
    for (const auto& r : runs) {
      CHECK(r.steps.size() <= bound);
      std::vector<uint64_t> key{r.start, r.final_a, r.final_b, r.final_state};
      for (const auto& st : r.steps) {
        key.push_back(st.from);
        key.push_back(st.a);
        key.push_back(st.b);
        key.push_back(st.to);
      }
      unique.insert(key);
    }
    CHECK(unique.size() == runs.size());  // enumeration never repeats a run
  }
}

TEST_CASE("adding a loop traversal never improves a best-case run") {
  FieldSchema s = testing::unit_schema();
  const Semiring& vit = Semiring::get(SemiringId::Viterbi);
  Wnka a(parse_policy("(weight(1/2)@dup)*", s, vit), s, &vit);
  // the n-dup string corresponds to a run with n loop traversals
  for (size_t dups = 0; dups + 1 <= 4; ++dups) {
    GuardedString shorter(std::vector<PacketId>(dups + 2, 0));
    GuardedString longer(std::vector<PacketId>(dups + 3, 0));
    CHECK(vit.leq(a.accept_weight(longer), a.accept_weight(shorter)));
  }
}

TEST_CASE("a safe total bound implies every small string is bounded") {
  FieldSchema s = testing::tiny_schema();
  std::mt19937 rng(131);
  testing::PolicyGenOptions opt;
  for (SemiringId id :
       {SemiringId::Arctic, SemiringId::ProbUnion, SemiringId::Boolean}) {
    const Semiring& sr = Semiring::get(id);
    for (int i = 0; i < 8; ++i) {
      PolPtr p = testing::random_policy(s, sr, rng, opt);
      Wnka a(p, s, &sr);
      Value bound = testing::sample_weight(sr, rng);
      Verdict v;
      try {
        v = check_safety(a, bound);
      } catch (const ResourceError&) {
        continue;  // genuinely unbounded counterexample search
      }
      if (v.kind != VerdictKind::Safe) continue;
      for (size_t dups = 0; dups <= 3; ++dups)
        for (const auto& x : enumerate_gs(s, dups))
          CHECK(sr.leq(a.accept_weight(x), bound));
    }
  }
}

TEST_CASE("cycle-free runs decide reachability exactly (bottleneck)") {
  FieldSchema s = testing::tiny_schema();
  std::mt19937 rng(137);
  testing::PolicyGenOptions opt;
  const Semiring& bn = Semiring::get(SemiringId::Bottleneck);
  for (int i = 0; i < 8; ++i) {
    PolPtr p = testing::random_policy(s, bn, rng, opt);
    Wnka a(p, s, &bn);
    // best value over all cycle-free runs, weighted by entry and exit
    Value best = bn.zero();
    for (const auto& r : enumerate_cycle_free_runs(a)) {
      auto iw = a.init().find(r.start);
      if (iw == a.init().end()) continue;
      SparseVec out = a.lambda(r.final_a, r.final_b);
      auto ow = out.find(r.final_state);
      if (ow == out.end()) continue;
      best = bn.add(best, bn.mul(iw->second,
                                 bn.mul(run_weight(a, r), ow->second)));
    }
    if (bn.is_zero(best)) continue;
    CHECK(check_reachability(a, best).kind == VerdictKind::Reachable);
    // nothing beats the cycle-free optimum: one notch above is unreachable
    Value above = best == bn.pos_inf()
                      ? best
                      : bn.make(best.rat() + 1);
    if (above != best)
      CHECK(check_reachability(a, above).kind == VerdictKind::Unreachable);
  }
}

TEST_CASE("eval weight matches the denotational value on samples") {
  FieldSchema s = testing::tiny_schema();
  std::mt19937 rng(127);
  testing::PolicyGenOptions opt;
  opt.max_star_depth = 0;
  for (const Semiring* sr : Semiring::all()) {
    for (int i = 0; i < 8; ++i) {
      PolPtr p = testing::random_policy(s, *sr, rng, opt);
      Wnka a(p, s, sr);
      for (PacketId input = 0; input < 4; ++input) {
        auto m = eval_star_free(p, {input}, s, sr, 3);
        for (const auto& [h, w] : m.entries())
          CHECK(eval_weight(a, input, h) == w);
      }
    }
  }
  // identity policy: unit weight on the stutter
  const Semiring& nat = Semiring::get(SemiringId::NatInf);
  Wnka id(skip(), s, &nat);
  CHECK(eval_weight(id, 2, {2}) == nat.one());
  CHECK(eval_weight(id, 2, {3}) == nat.zero());
}
