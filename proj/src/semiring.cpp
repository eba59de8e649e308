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

#include "wnk/semiring.hpp"

#include <array>
#include <memory>
#include <sstream>

namespace wnk {

namespace {

bool is_integer(const Rational& q) { return denominator(q) == 1; }

// cpp_int's string constructor treats a leading 0 as an octal prefix
boost::multiprecision::cpp_int parse_digits(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("malformed digits '" + s + "'");
  size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return boost::multiprecision::cpp_int(s.substr(i));
}

bool in_unit_interval(const Rational& q) { return q >= 0 && q <= 1; }

const char* level_names[4] = {"0", "L", "M", "H"};

}  // namespace

Semiring::Semiring(SemiringId id, std::string name, bool safety, bool reach)
    : id_(id),
      name_(std::move(name)),
      safety_capable_(safety),
      reach_capable_(reach) {
  switch (id_) {
    case SemiringId::Boolean:
      zero_ = Value(id_, 0, 0);
      one_ = Value(id_, 0, 1);
      break;
    case SemiringId::Tropical:  // (N u {inf}, min, +, inf, 0)
      zero_ = Value(id_, +1, 0);
      one_ = Value(id_, 0, 0);
      break;
    case SemiringId::Arctic:  // (N u {inf,-inf}, max, +, -inf, 0)
      zero_ = Value(id_, -1, 0);
      one_ = Value(id_, 0, 0);
      break;
    case SemiringId::Viterbi:  // ([0,1], max, *, 0, 1)
      zero_ = Value(id_, 0, 0);
      one_ = Value(id_, 0, 1);
      break;
    case SemiringId::ProbUnion:  // ([0,1] u {-inf}, max, probsum, -inf, 0)
      zero_ = Value(id_, -1, 0);
      one_ = Value(id_, 0, 0);
      break;
    case SemiringId::Bottleneck:  // (N u {inf,-inf}, max, min, -inf, inf)
      zero_ = Value(id_, -1, 0);
      one_ = Value(id_, +1, 0);
      break;
    case SemiringId::Security:  // (0 < L < M < H, max, min, 0, H)
      zero_ = Value(id_, 0, 0);
      one_ = Value(id_, 0, 3);
      break;
    case SemiringId::NatInf:  // (N u {inf}, +, *, 0, 1)
      zero_ = Value(id_, 0, 0);
      one_ = Value(id_, 0, 1);
      break;
    case SemiringId::Real:  // (Q>=0 u {inf}, +, *, 0, 1)
      zero_ = Value(id_, 0, 0);
      one_ = Value(id_, 0, 1);
      break;
  }
}

void Semiring::check(const Value& a) const {
  if (a.sr() != id_)
    throw AlgebraError("value from semiring '" +
                       Semiring::get(a.sr()).name() +
                       "' used with semiring '" + name_ + "'");
}

int Semiring::num_cmp(const Value& a, const Value& b) {
  if (a.tag() != b.tag()) return a.tag() < b.tag() ? -1 : 1;
  if (a.tag() != 0) return 0;
  if (a.rat() == b.rat()) return 0;
  return a.rat() < b.rat() ? -1 : 1;
}

Value Semiring::add(const Value& a, const Value& b) const {
  check(a);
  check(b);
  switch (id_) {
    case SemiringId::Boolean:
      return (a.rat() == 1 || b.rat() == 1) ? one_ : zero_;
    case SemiringId::Tropical:
      return num_cmp(a, b) <= 0 ? a : b;  // min
    case SemiringId::Arctic:
    case SemiringId::Viterbi:
    case SemiringId::ProbUnion:
    case SemiringId::Bottleneck:
      return num_cmp(a, b) >= 0 ? a : b;  // max
    case SemiringId::Security:
      return a.rat() >= b.rat() ? a : b;
    case SemiringId::NatInf:
    case SemiringId::Real:
      if (!a.finite() || !b.finite()) return pos_inf();
      return Value(id_, 0, a.rat() + b.rat());
  }
  throw AlgebraError("unreachable");
}

Value Semiring::mul(const Value& a, const Value& b) const {
  check(a);
  check(b);
  // annihilation takes priority over infinity saturation
  if (is_zero(a) || is_zero(b)) return zero_;
  switch (id_) {
    case SemiringId::Boolean:
      return one_;  // both are 1 here
    case SemiringId::Tropical:
    case SemiringId::Arctic:
      if (!a.finite() || !b.finite()) return pos_inf();  // only +inf survives
      return Value(id_, 0, a.rat() + b.rat());
    case SemiringId::Viterbi:
      return Value(id_, 0, a.rat() * b.rat());
    case SemiringId::ProbUnion:
      // probabilistic union r1 + r2 - r1*r2
      return Value(id_, 0, a.rat() + b.rat() - a.rat() * b.rat());
    case SemiringId::Bottleneck:
      return num_cmp(a, b) <= 0 ? a : b;  // min
    case SemiringId::Security:
      return a.rat() <= b.rat() ? a : b;
    case SemiringId::NatInf:
    case SemiringId::Real:
      if (!a.finite() || !b.finite()) return pos_inf();
      return Value(id_, 0, a.rat() * b.rat());
  }
  throw AlgebraError("unreachable");
}

Value Semiring::star(const Value& a) const {
  check(a);
  switch (id_) {
    case SemiringId::Boolean:
    case SemiringId::Viterbi:
      return one_;  // a^0 = 1 dominates, powers only shrink
    case SemiringId::Tropical:
      return one_;  // min over n*a with a >= 0 is 0
    case SemiringId::Arctic:
      // sup over n*a: diverges for any positive weight
      if (is_zero(a) || (a.finite() && a.rat() == 0)) return one_;
      return pos_inf();
    case SemiringId::ProbUnion:
      // partial sums 1-(1-a)^n: limit 1 for a > 0, else the identity 0
      if (!is_zero(a) && a.rat() > 0) return Value(id_, 0, 1);
      return one_;
    case SemiringId::Bottleneck:
    case SemiringId::Security:
      return one_;  // a^0 is already the top element
    case SemiringId::NatInf:
      if (is_zero(a)) return one_;
      return pos_inf();
    case SemiringId::Real:
      if (!a.finite() || a.rat() >= 1) return pos_inf();
      return Value(id_, 0, 1 / (1 - a.rat()));  // geometric series
  }
  throw AlgebraError("unreachable");
}

bool Semiring::leq(const Value& a, const Value& b) const {
  check(a);
  check(b);
  switch (id_) {
    case SemiringId::Boolean:
    case SemiringId::Security:
      return a.rat() <= b.rat();
    case SemiringId::Tropical:
      return num_cmp(a, b) >= 0;  // zero() = inf is the least element
    default:
      return num_cmp(a, b) <= 0;
  }
}

Value Semiring::make(const Rational& q) const {
  switch (id_) {
    case SemiringId::Boolean:
      if (q != 0 && q != 1) throw ParseError("boolean literal must be 0 or 1");
      break;
    case SemiringId::Tropical:
    case SemiringId::Arctic:
    case SemiringId::Bottleneck:
    case SemiringId::NatInf:
      if (!is_integer(q) || q < 0)
        throw ParseError("'" + name_ + "' weights are naturals (or inf)");
      break;
    case SemiringId::Viterbi:
    case SemiringId::ProbUnion:
      if (!in_unit_interval(q))
        throw ParseError("'" + name_ + "' weights lie in [0,1]");
      break;
    case SemiringId::Security:
      if (!is_integer(q) || q < 0 || q > 3)
        throw ParseError("security levels are 0, L, M, H");
      break;
    case SemiringId::Real:
      if (q < 0) throw ParseError("'real' weights are non-negative");
      break;
  }
  return Value(id_, 0, q);
}

Value Semiring::pos_inf() const {
  switch (id_) {
    case SemiringId::Tropical:
    case SemiringId::Arctic:
    case SemiringId::Bottleneck:
    case SemiringId::NatInf:
    case SemiringId::Real:
      return Value(id_, +1, 0);
    default:
      throw AlgebraError("'" + name_ + "' has no +inf element");
  }
}

Value Semiring::neg_inf() const {
  switch (id_) {
    case SemiringId::Arctic:
    case SemiringId::ProbUnion:
    case SemiringId::Bottleneck:
      return Value(id_, -1, 0);
    default:
      throw AlgebraError("'" + name_ + "' has no -inf element");
  }
}

Value Semiring::parse(std::string_view text) const {
  std::string s(text);
  // trim
  while (!s.empty() && isspace(static_cast<unsigned char>(s.front())))
    s.erase(s.begin());
  while (!s.empty() && isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  if (s.empty()) throw ParseError("empty weight literal");

  if (id_ == SemiringId::Security) {
    for (int i = 0; i < 4; ++i)
      if (s == level_names[i]) return Value(id_, 0, i);
    throw ParseError("security levels are 0, L, M, H");
  }
  if (id_ == SemiringId::Boolean) {
    if (s == "0" || s == "false") return zero_;
    if (s == "1" || s == "true") return one_;
    throw ParseError("boolean literal must be 0/1/true/false");
  }
  if (s == "inf") return pos_inf();
  if (s == "-inf") return neg_inf();

  bool percent = false;
  if (s.back() == '%') {
    percent = true;
    s.pop_back();
  }
  Rational q;
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      auto num = parse_digits(s.substr(0, slash));
      auto den = parse_digits(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in weight literal");
      q = Rational(num, den);
    } else if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      boost::multiprecision::cpp_int den = 1;
      for (size_t i = 0; i < frac_len; ++i) den *= 10;
      q = Rational(parse_digits(digits), den);
    } else {
      q = Rational(parse_digits(s));
    }
  } catch (const std::exception&) {
    throw ParseError("malformed weight literal '" + std::string(text) + "'");
  }
  if (percent) q /= 100;
  return make(q);
}

std::string Semiring::print(const Value& a) const {
  check(a);
  if (id_ == SemiringId::Security)
    return level_names[static_cast<int>(a.rat().convert_to<long>())];
  if (a.tag() > 0) return "inf";
  if (a.tag() < 0) return "-inf";
  std::ostringstream os;
  os << a.rat();
  return os.str();
}

double Semiring::approx(const Value& a) const {
  check(a);
  if (a.tag() > 0) return std::numeric_limits<double>::infinity();
  if (a.tag() < 0) return -std::numeric_limits<double>::infinity();
  return a.rat().convert_to<double>();
}

namespace {

// Flag assignments follow the side conditions of the two decision
// procedures: safety needs a worst-case (max-like) addition, reachability a
// best-case addition together with a multiplication that never improves a
// weight.
const std::array<std::unique_ptr<Semiring>, kNumSemirings>& registry() {
  static const std::array<std::unique_ptr<Semiring>, kNumSemirings> r = {
      std::make_unique<Semiring>(SemiringId::Boolean, "boolean", true, true),
      std::make_unique<Semiring>(SemiringId::Tropical, "tropical", false,
                                 true),
      std::make_unique<Semiring>(SemiringId::Arctic, "arctic", true, false),
      std::make_unique<Semiring>(SemiringId::Viterbi, "viterbi", false, true),
      std::make_unique<Semiring>(SemiringId::ProbUnion, "prob-union", true,
                                 false),
      std::make_unique<Semiring>(SemiringId::Bottleneck, "bottleneck", false,
                                 true),
      std::make_unique<Semiring>(SemiringId::Security, "security", false,
                                 true),
      std::make_unique<Semiring>(SemiringId::NatInf, "nat-inf", false, false),
      std::make_unique<Semiring>(SemiringId::Real, "real", false, false),
  };
  return r;
}

const std::array<const Semiring*, kNumSemirings>& registry_ptrs() {
  static const std::array<const Semiring*, kNumSemirings> p = [] {
    std::array<const Semiring*, kNumSemirings> a{};
    for (int i = 0; i < kNumSemirings; ++i) a[i] = registry()[i].get();
    return a;
  }();
  return p;
}

}  // namespace

const Semiring& Semiring::get(SemiringId id) {
  return *registry()[static_cast<size_t>(id)];
}

const Semiring* Semiring::find(std::string_view name) {
  for (const auto& s : registry())
    if (s->name() == name) return s.get();
  return nullptr;
}

std::span<const Semiring* const> Semiring::all() { return registry_ptrs(); }

}  // namespace wnk
