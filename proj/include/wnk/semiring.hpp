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

#ifndef WNK_SEMIRING_HPP
#define WNK_SEMIRING_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wnk {

using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AlgebraError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct CapabilityError : Error {
  using Error::Error;
};
struct ResourceError : Error {
  using Error::Error;
};

enum class SemiringId : uint8_t {
  Boolean,
  Tropical,
  Arctic,
  Viterbi,
  ProbUnion,
  Bottleneck,
  Security,
  NatInf,
  Real,
};

inline constexpr int kNumSemirings = 9;

/// A scalar belonging to exactly one registered semiring instance.
///
/// Numeric carriers keep an exact rational payload; the +/- infinity
/// extensions used by several instances live in `tag`. Boolean values are
/// stored as 0/1 and security levels as 0..3 in the rational slot, so
/// comparison and printing go through the owning instance.
class Value {
 public:
  Value() : sr_(SemiringId::Boolean), tag_(0), q_(0) {}
  Value(SemiringId sr, int8_t tag, Rational q)
      : sr_(sr), tag_(tag), q_(std::move(q)) {}

  SemiringId sr() const { return sr_; }
  int8_t tag() const { return tag_; }  // 0 finite, +1 = +inf, -1 = -inf
  const Rational& rat() const { return q_; }

  bool finite() const { return tag_ == 0; }

  friend bool operator==(const Value& a, const Value& b) {
    return a.sr_ == b.sr_ && a.tag_ == b.tag_ && (a.tag_ != 0 || a.q_ == b.q_);
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  SemiringId sr_;
  int8_t tag_;
  Rational q_;
};

/// One omega-continuous semiring instance: carrier checks, the four scalar
/// operations, the natural order, literal syntax, and the capability flags
/// consulted by the decision procedures.
class Semiring {
 public:
  Semiring(SemiringId id, std::string name, bool safety, bool reach);

  SemiringId id() const { return id_; }
  const std::string& name() const { return name_; }

  bool safety_capable() const { return safety_capable_; }
  bool reach_capable() const { return reach_capable_; }
  bool total_order() const { return true; }  // all shipped orders are total

  Value zero() const { return zero_; }
  Value one() const { return one_; }
  bool is_zero(const Value& a) const { return a == zero_; }
  bool is_one(const Value& a) const { return a == one_; }

  Value add(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  /// Closed form of the countable sum 1 + a + a*a + ...
  Value star(const Value& a) const;
  /// Natural order; positive (zero() is the least element).
  bool leq(const Value& a, const Value& b) const;

  /// Accepts integers, exact decimals ("0.25"), fractions ("3/200"),
  /// percentages ("1.5%"), "inf"/"-inf", "true"/"false" and the security
  /// levels "0","L","M","H", subject to carrier membership.
  Value parse(std::string_view text) const;
  std::string print(const Value& a) const;
  double approx(const Value& a) const;

  /// Wraps a finite rational, validating carrier membership.
  Value make(const Rational& q) const;
  Value pos_inf() const;
  Value neg_inf() const;

  static const Semiring& get(SemiringId id);
  /// Lookup by CLI/config name ("boolean", "tropical", "arctic", "viterbi",
  /// "prob-union", "bottleneck", "security", "nat-inf", "real").
  static const Semiring* find(std::string_view name);
  static std::span<const Semiring* const> all();

 private:
  void check(const Value& a) const;
  // three-way compare of the numeric extension, -inf < finite < +inf
  static int num_cmp(const Value& a, const Value& b);

  SemiringId id_;
  std::string name_;
  bool safety_capable_;
  bool reach_capable_;
  Value zero_;
  Value one_;
};

using SemiringHandle = const Semiring*;

}  // namespace wnk

#endif  // WNK_SEMIRING_HPP
