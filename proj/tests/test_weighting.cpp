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
#include "wnk/weighting.hpp"

using namespace wnk;

namespace {

using W = Weighting<int>;

W random_weighting(const Semiring& sr, std::mt19937& rng, int universe = 4) {
  W m(&sr);
  std::uniform_int_distribution<int> d(0, universe - 1);
  for (int i = 0; i < 3; ++i)
    m.add_in(d(rng), testing::sample_weight(sr, rng));
  return m;
}

}  // namespace

TEST_CASE("unit weighting") {
  const Semiring& sr = Semiring::get(SemiringId::NatInf);
  W u = W::unit(&sr, 7);
  CHECK(u.at(7) == sr.one());
  CHECK(u.at(8) == sr.zero());
  CHECK(u.mass() == sr.one());
  CHECK(u.support_size() == 1);
}

TEST_CASE("bind single chain in the arctic semiring") {
  const Semiring& sr = Semiring::get(SemiringId::Arctic);
  W m(&sr);
  m.add_in(0, sr.parse("3"));
  W out = m.bind([&](int) {
    W f(&sr);
    f.add_in(1, sr.parse("5"));
    return f;
  });
  CHECK(out.at(1) == sr.parse("8"));  // 3 (x) 5 = 3 + 5
  CHECK(out.support_size() == 1);
}

TEST_CASE("monad laws on samples") {
  std::mt19937 rng(23);
  for (const Semiring* sr : Semiring::all()) {
    for (int i = 0; i < 40; ++i) {
      W m = random_weighting(*sr, rng);
      // a table of weightings standing in for an arbitrary f
      std::vector<W> table;
      for (int x = 0; x < 4; ++x) table.push_back(random_weighting(*sr, rng));
      auto f = [&](int x) { return table[x]; };
      // left: unit(x) >>= f == f(x)
      for (int x = 0; x < 4; ++x) CHECK(W::unit(sr, x).bind(f) == f(x));
      // right: m >>= unit == m
      CHECK(m.bind([&](int x) { return W::unit(sr, x); }) == m);
      // associativity
      std::vector<W> table2;
      for (int x = 0; x < 4; ++x) table2.push_back(random_weighting(*sr, rng));
      auto g = [&](int x) { return table2[x]; };
      CHECK(m.bind(f).bind(g) ==
            m.bind([&](int x) { return f(x).bind(g); }));
    }
  }
}

TEST_CASE("bind distributes over addition on both sides") {
  std::mt19937 rng(29);
  for (const Semiring* sr : Semiring::all()) {
    for (int i = 0; i < 40; ++i) {
      W m1 = random_weighting(*sr, rng);
      W m2 = random_weighting(*sr, rng);
      std::vector<W> ftab, gtab;
      for (int x = 0; x < 4; ++x) {
        ftab.push_back(random_weighting(*sr, rng));
        gtab.push_back(random_weighting(*sr, rng));
      }
      auto f = [&](int x) { return ftab[x]; };
      auto g = [&](int x) { return gtab[x]; };
      CHECK(m1.w_add(m2).bind(f) == m1.bind(f).w_add(m2.bind(f)));
      CHECK(m1.bind([&](int x) { return f(x).w_add(g(x)); }) ==
            m1.bind(f).w_add(m1.bind(g)));
    }
  }
}

TEST_CASE("annihilators for bind") {
  std::mt19937 rng(31);
  for (const Semiring* sr : Semiring::all()) {
    W empty(sr);
    W m = random_weighting(*sr, rng);
    CHECK(empty.bind([&](int) { return m; }) == empty);
    CHECK(m.bind([&](int) { return W(sr); }) == W(sr));
  }
}

TEST_CASE("pointwise operations and canonical support") {
  const Semiring& sr = Semiring::get(SemiringId::Viterbi);
  W m(&sr);
  m.add_in(0, sr.parse("1/2"));
  CHECK(m.w_add(W(&sr)) == m);
  CHECK(m.scale_left(sr.zero()).empty());  // annihilation keeps support canonical
  W scaled = m.scale_left(sr.parse("1/2"));
  CHECK(scaled.at(0) == sr.parse("1/4"));
  W scaled_r = m.scale_right(sr.parse("1/2"));
  CHECK(scaled_r == scaled);
  CHECK(m.debug_str([](int x) { return std::to_string(x); }) == "0 -> 1/2\n");
}
