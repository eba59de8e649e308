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

#ifndef WNK_REDUCE_HPP
#define WNK_REDUCE_HPP

#include "wnk/policy.hpp"

namespace wnk {

/// A policy in reduced syntax: complete tests, complete assignments, dup and
/// the regular combinators; no bare predicates or partial assignments.
struct ReducedPolicy {
  PolPtr pol;
};

/// Rewrites predicates into sums of complete tests and assignments into sums
/// of (complete test ; complete assignment), leaving everything else
/// homomorphic. The result is semantically equivalent to the input. Retained
/// as a differential-testing oracle; the compiler works on full syntax.
ReducedPolicy reduce(const PolPtr& p, const FieldSchema& schema,
                     const Semiring& sr);

/// True iff the tree uses only reduced-syntax constructors.
bool is_reduced(const PolPtr& p);

}  // namespace wnk

#endif  // WNK_REDUCE_HPP
