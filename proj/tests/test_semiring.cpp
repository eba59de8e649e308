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

#include "common.hpp"
#include "wnk/semiring.hpp"

using namespace wnk;

TEST_CASE("arctic addition maximizes") {
  const Semiring& sr = Semiring::get(SemiringId::Arctic);
  CHECK(sr.add(sr.parse("3"), sr.parse("5")) == sr.parse("5"));
  CHECK(sr.leq(sr.parse("3"), sr.parse("5")));
}

TEST_CASE("addition identity and bottleneck max") {
  const Semiring& bn = Semiring::get(SemiringId::Bottleneck);
  CHECK(bn.add(bn.parse("1250"), bn.parse("950")) == bn.parse("1250"));
  for (const Semiring* sr : Semiring::all()) {
    Value a = sr->parse(sr->id() == SemiringId::Security ? "L" : "1");
    CHECK(sr->add(a, sr->zero()) == a);
    CHECK(sr->add(sr->zero(), a) == a);
  }
}

TEST_CASE("viterbi chains multiply") {
  const Semiring& sr = Semiring::get(SemiringId::Viterbi);
  Value w = sr.mul(sr.mul(sr.parse("0.98"), sr.parse("0.97")), sr.parse("0.96"));
  CHECK(w == sr.parse("0.912576"));
  CHECK(w == sr.parse("912576/1000000"));
  CHECK_FALSE(sr.leq(w, sr.parse("0.9")));
}

TEST_CASE("probabilistic union product") {
  const Semiring& sr = Semiring::get(SemiringId::ProbUnion);
  Value expect =
      sr.make(Rational(15, 1000) + Rational(175, 10000) -
              Rational(15, 1000) * Rational(175, 10000));
  CHECK(sr.mul(sr.parse("0.015"), sr.parse("0.0175")) == expect);
}

TEST_CASE("annihilation") {
  for (const Semiring* sr : Semiring::all()) {
    Value a = sr->parse(sr->id() == SemiringId::Security ? "M" : "1");
    CHECK(sr->mul(a, sr->zero()) == sr->zero());
    CHECK(sr->mul(sr->zero(), a) == sr->zero());
  }
}

TEST_CASE("star closed forms") {
  CHECK(Semiring::get(SemiringId::Boolean)
            .star(Semiring::get(SemiringId::Boolean).one()) ==
        Semiring::get(SemiringId::Boolean).one());

  // geometric series: partial sums of (1/2)^n approach 2 from below
  const Semiring& re = Semiring::get(SemiringId::Real);
  Value half = re.parse("1/2");
  Value closed = re.star(half);
  CHECK(closed == re.parse("2"));
  Value partial = re.one();
  Value power = re.one();
  for (int n = 1; n <= 40; ++n) {
    power = re.mul(power, half);
    partial = re.add(partial, power);
    CHECK(re.leq(partial, closed));
  }
  // the 40-term partial sum sits exactly 2^-40 below the closed form
  boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1) << 40;
  CHECK(closed.rat() - partial.rat() == Rational(1, den));

  // extended naturals: strictly growing partial sums diverge
  const Semiring& nat = Semiring::get(SemiringId::NatInf);
  Value three = nat.parse("3");
  Value prev = nat.one();
  Value sum = nat.one();
  Value pw = nat.one();
  bool grew = true;
  for (int n = 1; n <= 5; ++n) {
    pw = nat.mul(pw, three);
    prev = sum;
    sum = nat.add(sum, pw);
    grew = grew && !nat.leq(sum, prev);
  }
  CHECK(grew);
  CHECK(nat.star(three) == nat.pos_inf());
  CHECK(nat.star(nat.zero()) == nat.one());
}

TEST_CASE("capability flags") {
  CHECK(Semiring::get(SemiringId::Arctic).safety_capable());
  CHECK_FALSE(Semiring::get(SemiringId::Arctic).reach_capable());
  CHECK(Semiring::get(SemiringId::Viterbi).reach_capable());
  CHECK_FALSE(Semiring::get(SemiringId::Viterbi).safety_capable());
  CHECK(Semiring::get(SemiringId::ProbUnion).safety_capable());
  CHECK(Semiring::get(SemiringId::Tropical).reach_capable());
  CHECK(Semiring::get(SemiringId::Bottleneck).reach_capable());

  // boolean satisfies both side conditions; check by truth table
  const Semiring& b = Semiring::get(SemiringId::Boolean);
  CHECK(b.safety_capable());
  CHECK(b.reach_capable());
  Value vals[2] = {b.zero(), b.one()};
  for (Value x : vals)
    for (Value y : vals)
      for (Value z : vals) {
        CHECK((b.leq(b.add(x, y), z)) == (b.leq(x, z) && b.leq(y, z)));
        CHECK((b.leq(z, b.add(x, y))) == (b.leq(z, x) || b.leq(z, y)));
        CHECK(b.leq(b.mul(x, y), x));
      }

  // security semiring: verify the reachability side conditions exhaustively
  // over the whole four-element carrier before trusting the flag
  const Semiring& sec = Semiring::get(SemiringId::Security);
  Value lv[4] = {sec.parse("0"), sec.parse("L"), sec.parse("M"),
                 sec.parse("H")};
  bool ok = true;
  for (Value x : lv)
    for (Value y : lv) {
      ok = ok && sec.leq(sec.mul(x, y), x);
      for (Value z : lv)
        ok = ok &&
             ((sec.leq(z, sec.add(x, y))) == (sec.leq(z, x) || sec.leq(z, y)));
    }
  CHECK(ok);
  CHECK(sec.reach_capable());
}

TEST_CASE("carrier mismatch is an algebra error") {
  const Semiring& a = Semiring::get(SemiringId::Arctic);
  const Semiring& t = Semiring::get(SemiringId::Tropical);
  CHECK_THROWS_AS(a.add(a.one(), t.one()), AlgebraError);
  CHECK_THROWS_AS(a.mul(t.one(), a.one()), AlgebraError);
}

TEST_CASE("carrier validation on parse") {
  CHECK_THROWS_AS(Semiring::get(SemiringId::Viterbi).parse("3/2"), ParseError);
  CHECK_THROWS_AS(Semiring::get(SemiringId::Tropical).parse("1/2"), ParseError);
  CHECK_THROWS_AS(Semiring::get(SemiringId::Tropical).parse("-inf"), AlgebraError);
  CHECK_THROWS_AS(Semiring::get(SemiringId::Security).parse("X"), ParseError);
  CHECK(Semiring::get(SemiringId::ProbUnion).parse("1.5%") ==
        Semiring::get(SemiringId::ProbUnion).make(Rational(3, 200)));
  CHECK(Semiring::get(SemiringId::Security).print(
            Semiring::get(SemiringId::Security).parse("M")) == "M");
}

TEST_CASE("semiring axioms and star fixed point on samples") {
  std::mt19937 rng(7);
  for (const Semiring* sr : Semiring::all()) {
    for (int i = 0; i < 300; ++i) {
      Value a = testing::sample_weight(*sr, rng);
      Value b = testing::sample_weight(*sr, rng);
      Value c = testing::sample_weight(*sr, rng);
      CHECK(sr->add(a, b) == sr->add(b, a));
      CHECK(sr->add(sr->add(a, b), c) == sr->add(a, sr->add(b, c)));
      CHECK(sr->mul(sr->mul(a, b), c) == sr->mul(a, sr->mul(b, c)));
      CHECK(sr->mul(a, sr->one()) == a);
      CHECK(sr->mul(sr->one(), a) == a);
      CHECK(sr->mul(a, sr->add(b, c)) ==
            sr->add(sr->mul(a, b), sr->mul(a, c)));
      CHECK(sr->mul(sr->add(b, c), a) ==
            sr->add(sr->mul(b, a), sr->mul(c, a)));
      CHECK(sr->leq(sr->zero(), a));  // positivity
      // star fixed point s* = 1 + s s*
      Value st = sr->star(a);
      CHECK(st == sr->add(sr->one(), sr->mul(a, st)));
    }
  }
}

TEST_CASE("safety side condition on flagged instances") {
  std::mt19937 rng(11);
  for (const Semiring* sr : Semiring::all()) {
    if (!sr->safety_capable()) continue;
    for (int i = 0; i < 300; ++i) {
      Value a = testing::sample_weight(*sr, rng);
      Value b = testing::sample_weight(*sr, rng);
      Value c = testing::sample_weight(*sr, rng);
      CHECK((sr->leq(sr->add(a, b), c)) == (sr->leq(a, c) && sr->leq(b, c)));
    }
  }
}

TEST_CASE("reachability side conditions on flagged instances") {
  std::mt19937 rng(13);
  for (const Semiring* sr : Semiring::all()) {
    if (!sr->reach_capable()) continue;
    for (int i = 0; i < 300; ++i) {
      Value a = testing::sample_weight(*sr, rng);
      Value b = testing::sample_weight(*sr, rng);
      Value c = testing::sample_weight(*sr, rng);
      CHECK((sr->leq(c, sr->add(a, b))) == (sr->leq(c, a) || sr->leq(c, b)));
      CHECK(sr->leq(sr->mul(a, b), a));
    }
  }
}
