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

#ifndef WNK_DENOTATIONAL_HPP
#define WNK_DENOTATIONAL_HPP

#include "wnk/policy.hpp"
#include "wnk/weighting.hpp"

namespace wnk {

/// n-th approximant: replaces every iteration by the bounded sum
/// skip + p + p^2 + ... + p^n (with a trailing drop from the sum base case),
/// where the body itself is unrolled at the same depth. The result is
/// star-free.
PolPtr approximant(const PolPtr& p, int n);

/// n-fold guarded unrolling of `while t do p`; semantically equivalent to
/// the approximant of the desugared loop.
PolPtr nfold_guarded(const PredPtr& t, const PolPtr& p, int n);

/// Reference evaluator for star-free policies, structural on the semantics
/// table: filters gate the head packet, assignment rewrites it, dup prepends
/// a copy, sequencing is monadic bind, weighting scales from the left and
/// choice adds pointwise.
///
/// `max_len`, when positive, discards output histories longer than max_len
/// packets. History length never decreases under any construct, so this is a
/// sound restriction when only bounded histories are queried afterwards.
Weighting<History> eval_star_free(const PolPtr& p, const History& h,
                                  const FieldSchema& schema,
                                  SemiringHandle sr, size_t max_len = 0);

/// eval_star_free of the n-th approximant; monotone non-decreasing in n.
Weighting<History> eval_approx(const PolPtr& p, int n, const History& h,
                               const FieldSchema& schema, SemiringHandle sr,
                               size_t max_len = 0);

}  // namespace wnk

#endif  // WNK_DENOTATIONAL_HPP
