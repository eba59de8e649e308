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

#ifndef WNK_PARSER_HPP
#define WNK_PARSER_HPP

#include <optional>
#include <string_view>

#include "wnk/policy.hpp"

namespace wnk {

/// Result of parsing a .wnk file: the declared (or supplied) field schema and
/// the policy body with all sugar (`if`, `while`, `skip`, `drop`, `!=`)
/// already expanded.
struct ParsedPolicy {
  FieldSchema schema;
  PolPtr policy;
  int syntax_version = 1;
};

/// Parses a full .wnk file: optional `syntax N;` header, optional
/// `fields { f: [v, ...]; ... }` block, then one policy expression.
/// If `schema_override` is given it is used when the file declares no block
/// and checked for equality when it does.
ParsedPolicy parse_policy_file(std::string_view text, const Semiring& sr,
                               const FieldSchema* schema_override = nullptr,
                               uint64_t packet_cap = FieldSchema::kDefaultPacketCap);

/// Parses a bare policy expression against a known schema.
PolPtr parse_policy(std::string_view text, const FieldSchema& schema,
                    const Semiring& sr);

/// Parses a bare predicate expression (used for --ingress/--egress).
PredPtr parse_predicate(std::string_view text, const FieldSchema& schema);

/// Parses a standalone `fields { ... }` block (schema files).
FieldSchema parse_fields_block(std::string_view text,
                               uint64_t packet_cap = FieldSchema::kDefaultPacketCap);

}  // namespace wnk

#endif  // WNK_PARSER_HPP
