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

#ifndef WNK_POLICY_HPP
#define WNK_POLICY_HPP

#include <memory>
#include <string>

#include "wnk/schema.hpp"
#include "wnk/semiring.hpp"

namespace wnk {

enum class PredKind : uint8_t { False, True, Test, Or, And, Not };

struct Pred;
using PredPtr = std::shared_ptr<const Pred>;

struct Pred {
  PredKind kind;
  FieldId field = 0;
  ValueId value = 0;
  PredPtr a, b;
};

PredPtr pred_false();
PredPtr pred_true();
PredPtr pred_test(FieldId f, ValueId v);
PredPtr pred_or(PredPtr a, PredPtr b);
PredPtr pred_and(PredPtr a, PredPtr b);
PredPtr pred_not(PredPtr a);

bool eval_predicate(const FieldSchema& schema, const Pred& t, PacketId pk);
bool pred_equal(const PredPtr& a, const PredPtr& b);
std::string print_pred(const FieldSchema& schema, const PredPtr& t);

/// Policy syntax tree. CompleteTest/CompleteAssign never come out of the
/// parser; the reduction map introduces them.
enum class PolKind : uint8_t {
  Filter,
  Assign,
  Dup,
  Seq,
  Weigh,
  Choice,
  Star,
  CompleteTest,
  CompleteAssign,
};

struct Pol;
using PolPtr = std::shared_ptr<const Pol>;

struct Pol {
  PolKind kind;
  PredPtr pred;        // Filter
  FieldId field = 0;   // Assign
  ValueId value = 0;   // Assign
  Value weight;        // Weigh
  PacketId packet = 0; // CompleteTest / CompleteAssign
  PolPtr a, b;
};

PolPtr filter(PredPtr t);
PolPtr assign(FieldId f, ValueId v);
PolPtr dup();
PolPtr seq(PolPtr a, PolPtr b);
PolPtr weigh(Value r, PolPtr p);
PolPtr choice(PolPtr a, PolPtr b);
PolPtr star(PolPtr p);
PolPtr complete_test(PacketId pk);
PolPtr complete_assign(PacketId pk);
PolPtr skip();
PolPtr drop();

bool pol_equal(const PolPtr& a, const PolPtr& b);
bool star_free(const PolPtr& p);
size_t count_primitives(const PolPtr& p);
size_t count_dups(const PolPtr& p);
size_t count_stars(const PolPtr& p);

/// Canonical concrete syntax; reparses to the same tree for parser-reachable
/// policies (complete tests/assignments print as their expansions).
std::string print_policy(const FieldSchema& schema, const Semiring& sr,
                         const PolPtr& p);

}  // namespace wnk

#endif  // WNK_POLICY_HPP
