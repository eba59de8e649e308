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

#ifndef WNK_TESTS_COMMON_HPP
#define WNK_TESTS_COMMON_HPP

#include <random>
#include <vector>

#include "wnk/policy.hpp"
#include "wnk/semiring.hpp"

namespace wnk::testing {

/// 2 fields x 2 values, |Pk| = 4.
inline FieldSchema tiny_schema() {
  FieldSchema s;
  s.add_field("f", {"0", "1"});
  s.add_field("g", {"0", "1"});
  return s;
}

/// Single field, single value: one packet.
inline FieldSchema unit_schema() {
  FieldSchema s;
  s.add_field("f", {"0"});
  return s;
}

/// Small weights inside each instance's carrier.
inline Value sample_weight(const Semiring& sr, std::mt19937& rng) {
  auto pick = [&](std::initializer_list<const char*> lits) {
    std::uniform_int_distribution<size_t> d(0, lits.size() - 1);
    return sr.parse(*(lits.begin() + d(rng)));
  };
  switch (sr.id()) {
    case SemiringId::Boolean:
      return pick({"0", "1"});
    case SemiringId::Tropical:
      return pick({"0", "1", "2", "3", "5", "inf"});
    case SemiringId::Arctic:
      return pick({"0", "1", "2", "3", "5", "inf", "-inf"});
    case SemiringId::Viterbi:
      return pick({"0", "1/4", "1/2", "3/4", "1"});
    case SemiringId::ProbUnion:
      return pick({"-inf", "0", "1/4", "1/2", "3/4", "1"});
    case SemiringId::Bottleneck:
      return pick({"0", "1", "2", "5", "inf", "-inf"});
    case SemiringId::Security:
      return pick({"0", "L", "M", "H"});
    case SemiringId::NatInf:
      return pick({"0", "1", "2", "3", "inf"});
    case SemiringId::Real:
      return pick({"0", "1/2", "1", "3/2", "2"});
  }
  return sr.one();
}

struct PolicyGenOptions {
  int max_depth = 4;
  int max_star_depth = 1;
  bool allow_dup = true;
};

/// Random policy over the schema; star nesting bounded by max_star_depth.
inline PolPtr random_policy(const FieldSchema& schema, const Semiring& sr,
                            std::mt19937& rng, const PolicyGenOptions& opt,
                            int depth = 0, int stars_left = -1) {
  if (stars_left < 0) stars_left = opt.max_star_depth;
  std::uniform_int_distribution<int> field_d(
      0, static_cast<int>(schema.num_fields()) - 1);
  auto rand_field = [&] { return static_cast<FieldId>(field_d(rng)); };
  auto rand_value = [&](FieldId f) {
    std::uniform_int_distribution<int> d(
        0, static_cast<int>(schema.num_values(f)) - 1);
    return static_cast<ValueId>(d(rng));
  };
  auto rand_pred = [&](auto&& self, int pd) -> PredPtr {
    std::uniform_int_distribution<int> d(0, pd <= 0 ? 3 : 6);
    switch (d(rng)) {
      case 0:
        return pred_true();
      case 1:
        return pred_false();
      case 2:
      case 3:
        return pred_test(rand_field(), rand_value(rand_field()));
      case 4:
        return pred_or(self(self, pd - 1), self(self, pd - 1));
      case 5:
        return pred_and(self(self, pd - 1), self(self, pd - 1));
      default:
        return pred_not(self(self, pd - 1));
    }
  };

  int limit = depth >= opt.max_depth ? 2 : (stars_left > 0 ? 6 : 5);
  std::uniform_int_distribution<int> d(0, limit);
  switch (d(rng)) {
    case 0:
      return filter(rand_pred(rand_pred, 2));
    case 1: {
      FieldId f = rand_field();
      return assign(f, rand_value(f));
    }
    case 2:
      if (opt.allow_dup) return dup();
      return skip();
    case 3:
      return seq(random_policy(schema, sr, rng, opt, depth + 1, stars_left),
                 random_policy(schema, sr, rng, opt, depth + 1, stars_left));
    case 4:
      return choice(random_policy(schema, sr, rng, opt, depth + 1, stars_left),
                    random_policy(schema, sr, rng, opt, depth + 1, stars_left));
    case 5:
      return weigh(sample_weight(sr, rng),
                   random_policy(schema, sr, rng, opt, depth + 1, stars_left));
    default:
      return star(
          random_policy(schema, sr, rng, opt, depth + 1, stars_left - 1));
  }
}

}  // namespace wnk::testing

#endif  // WNK_TESTS_COMMON_HPP
