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

#ifndef WNK_SCHEMA_HPP
#define WNK_SCHEMA_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wnk/semiring.hpp"

namespace wnk {

using FieldId = uint16_t;
using ValueId = uint16_t;

/// Packets are interned as mixed-radix codes over the schema's fields, with
/// the first declared field most significant. Code order is therefore the
/// lexicographic order on field values used by the witness search.
using PacketId = uint32_t;

/// Non-empty packet list, head first.
using History = std::vector<PacketId>;

class FieldSchema {
 public:
  static constexpr uint64_t kDefaultPacketCap = 100000;

  FieldSchema() = default;

  /// Declares one field with its ordered value list. Throws ValidationError
  /// on duplicates or when the packet space exceeds the cap.
  void add_field(std::string name, std::vector<std::string> values,
                 uint64_t packet_cap = kDefaultPacketCap);

  size_t num_fields() const { return fields_.size(); }
  uint64_t packet_count() const { return packet_count_; }

  const std::string& field_name(FieldId f) const { return fields_[f].name; }
  const std::string& value_name(FieldId f, ValueId v) const {
    return fields_[f].values[v];
  }
  size_t num_values(FieldId f) const { return fields_[f].values.size(); }

  FieldId field(std::string_view name) const;          // throws if unknown
  ValueId value(FieldId f, std::string_view v) const;  // throws if unknown
  bool has_field(std::string_view name) const;

  ValueId get(PacketId pk, FieldId f) const {
    return static_cast<ValueId>((pk / fields_[f].stride) %
                                fields_[f].values.size());
  }
  PacketId set(PacketId pk, FieldId f, ValueId v) const {
    const auto& fl = fields_[f];
    return pk + (static_cast<PacketId>(v) - get(pk, f)) * fl.stride;
  }

  PacketId encode(const std::vector<ValueId>& vals) const;

  /// Renders {f1=v1,f2=v2,...}.
  std::string print_packet(PacketId pk) const;
  std::string print_history(const History& h) const;

  /// Parses "f=v,f=v,..." (every field must be assigned).
  PacketId parse_packet(std::string_view text) const;
  /// Parses semicolon-separated packets, head first.
  History parse_history(std::string_view text) const;

  bool operator==(const FieldSchema& other) const;

 private:
  struct Field {
    std::string name;
    std::vector<std::string> values;
    PacketId stride = 1;
  };
  void recompute_strides(uint64_t packet_cap);

  std::vector<Field> fields_;
  uint64_t packet_count_ = 1;
};

}  // namespace wnk

#endif  // WNK_SCHEMA_HPP
