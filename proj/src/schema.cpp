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

#include "wnk/schema.hpp"

#include <algorithm>
#include <sstream>

namespace wnk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

void FieldSchema::add_field(std::string name, std::vector<std::string> values,
                            uint64_t packet_cap) {
  if (values.empty())
    throw ValidationError("field '" + name + "' has no values");
  if (has_field(name)) throw ValidationError("duplicate field '" + name + "'");
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        throw ValidationError("duplicate value '" + values[i] +
                              "' in field '" + name + "'");
  fields_.push_back(Field{std::move(name), std::move(values), 1});
  recompute_strides(packet_cap);
}

void FieldSchema::recompute_strides(uint64_t packet_cap) {
  uint64_t count = 1;
  for (auto it = fields_.rbegin(); it != fields_.rend(); ++it) {
    it->stride = static_cast<PacketId>(count);
    count *= it->values.size();
    if (count > packet_cap)
      throw ValidationError("packet space exceeds cap of " +
                            std::to_string(packet_cap));
  }
  packet_count_ = count;
}

FieldId FieldSchema::field(std::string_view name) const {
  for (size_t i = 0; i < fields_.size(); ++i)
    if (fields_[i].name == name) return static_cast<FieldId>(i);
  throw ValidationError("unknown field '" + std::string(name) + "'");
}

bool FieldSchema::has_field(std::string_view name) const {
  for (const auto& f : fields_)
    if (f.name == name) return true;
  return false;
}

ValueId FieldSchema::value(FieldId f, std::string_view v) const {
  const auto& vals = fields_[f].values;
  for (size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == v) return static_cast<ValueId>(i);
  throw ValidationError("unknown value '" + std::string(v) + "' for field '" +
                        fields_[f].name + "'");
}

PacketId FieldSchema::encode(const std::vector<ValueId>& vals) const {
  if (vals.size() != fields_.size())
    throw ValidationError("packet literal must assign every field");
  PacketId pk = 0;
  for (size_t f = 0; f < fields_.size(); ++f)
    pk += vals[f] * fields_[f].stride;
  return pk;
}

std::string FieldSchema::print_packet(PacketId pk) const {
  std::string out = "{";
  for (size_t f = 0; f < fields_.size(); ++f) {
    if (f) out += ",";
    out += fields_[f].name;
    out += "=";
    out += fields_[f].values[get(pk, static_cast<FieldId>(f))];
  }
  out += "}";
  return out;
}

std::string FieldSchema::print_history(const History& h) const {
  std::string out;
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) out += "::";
    out += print_packet(h[i]);
  }
  return out;
}

PacketId FieldSchema::parse_packet(std::string_view text) const {
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    text.remove_prefix(1);
    text.remove_suffix(1);
  }
  std::vector<bool> seen(fields_.size(), false);
  std::vector<ValueId> vals(fields_.size(), 0);
  size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string_view item = trim(text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos
                                             : comma - pos));
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos)
        throw ParseError("packet literal item '" + std::string(item) +
                         "' is not of the form field=value");
      FieldId f = field(trim(item.substr(0, eq)));
      vals[f] = value(f, trim(item.substr(eq + 1)));
      seen[f] = true;
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (size_t f = 0; f < fields_.size(); ++f)
    if (!seen[f])
      throw ParseError("packet literal leaves field '" + fields_[f].name +
                       "' unassigned");
  return encode(vals);
}

History FieldSchema::parse_history(std::string_view text) const {
  History h;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    std::string_view item = trim(text.substr(
        pos, semi == std::string_view::npos ? text.size() - pos : semi - pos));
    if (!item.empty()) h.push_back(parse_packet(item));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (h.empty()) throw ParseError("history must contain at least one packet");
  return h;
}

bool FieldSchema::operator==(const FieldSchema& other) const {
  if (fields_.size() != other.fields_.size()) return false;
  for (size_t i = 0; i < fields_.size(); ++i)
    if (fields_[i].name != other.fields_[i].name ||
        fields_[i].values != other.fields_[i].values)
      return false;
  return true;
}

}  // namespace wnk
