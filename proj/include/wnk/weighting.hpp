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

#ifndef WNK_WEIGHTING_HPP
#define WNK_WEIGHTING_HPP

#include <map>
#include <string>

#include "wnk/semiring.hpp"

namespace wnk {

/// Finitely-supported map from outcomes to semiring values. Entries equal to
/// the semiring zero are never stored, so structural equality coincides with
/// pointwise equality.
template <class X>
class Weighting {
 public:
  explicit Weighting(SemiringHandle sr) : sr_(sr) {}

  static Weighting unit(SemiringHandle sr, const X& x) {
    Weighting m(sr);
    m.entries_.emplace(x, sr->one());
    return m;
  }

  SemiringHandle semiring() const { return sr_; }
  bool empty() const { return entries_.empty(); }
  size_t support_size() const { return entries_.size(); }
  const std::map<X, Value>& entries() const { return entries_; }

  Value at(const X& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? sr_->zero() : it->second;
  }

  /// m(x) := m(x) + v, keeping the support canonical.
  void add_in(const X& x, const Value& v) {
    if (sr_->is_zero(v)) return;
    auto it = entries_.find(x);
    if (it == entries_.end()) {
      entries_.emplace(x, v);
    } else {
      it->second = sr_->add(it->second, v);
      if (sr_->is_zero(it->second)) entries_.erase(it);
    }
  }

  template <class F>
  Weighting bind(F&& f) const {
    Weighting out(sr_);
    for (const auto& [x, w] : entries_) {
      Weighting fx = f(x);
      for (const auto& [y, v] : fx.entries_)
        out.add_in(y, sr_->mul(w, v));
    }
    return out;
  }

  Weighting w_add(const Weighting& other) const {
    Weighting out = *this;
    for (const auto& [x, v] : other.entries_) out.add_in(x, v);
    return out;
  }

  Weighting scale_left(const Value& r) const {
    Weighting out(sr_);
    for (const auto& [x, v] : entries_) out.add_in(x, sr_->mul(r, v));
    return out;
  }

  Weighting scale_right(const Value& r) const {
    Weighting out(sr_);
    for (const auto& [x, v] : entries_) out.add_in(x, sr_->mul(v, r));
    return out;
  }

  Value mass() const {
    Value total = sr_->zero();
    for (const auto& [x, v] : entries_) total = sr_->add(total, v);
    return total;
  }

  /// Pointwise natural order.
  bool leq(const Weighting& other) const {
    for (const auto& [x, v] : entries_)
      if (!sr_->leq(v, other.at(x))) return false;
    // entries absent here are zero, the least element
    return true;
  }

  bool operator==(const Weighting& other) const {
    return sr_ == other.sr_ && entries_ == other.entries_;
  }
  bool operator!=(const Weighting& other) const { return !(*this == other); }

  /// Sorted "outcome -> weight" lines for debugging.
  template <class Printer>
  std::string debug_str(Printer&& print_outcome) const {
    std::string out;
    for (const auto& [x, v] : entries_) {
      out += print_outcome(x);
      out += " -> ";
      out += sr_->print(v);
      out += "\n";
    }
    return out;
  }

 private:
  SemiringHandle sr_;
  std::map<X, Value> entries_;
};

}  // namespace wnk

#endif  // WNK_WEIGHTING_HPP
