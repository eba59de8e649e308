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

#include "wnk/policy.hpp"

namespace wnk {

namespace {

PredPtr mk_pred(Pred p) { return std::make_shared<const Pred>(std::move(p)); }
PolPtr mk_pol(Pol p) { return std::make_shared<const Pol>(std::move(p)); }

}  // namespace

PredPtr pred_false() {
  static const PredPtr p = mk_pred({PredKind::False});
  return p;
}
PredPtr pred_true() {
  static const PredPtr p = mk_pred({PredKind::True});
  return p;
}
PredPtr pred_test(FieldId f, ValueId v) {
  Pred p{PredKind::Test};
  p.field = f;
  p.value = v;
  return mk_pred(std::move(p));
}
PredPtr pred_or(PredPtr a, PredPtr b) {
  Pred p{PredKind::Or};
  p.a = std::move(a);
  p.b = std::move(b);
  return mk_pred(std::move(p));
}
PredPtr pred_and(PredPtr a, PredPtr b) {
  Pred p{PredKind::And};
  p.a = std::move(a);
  p.b = std::move(b);
  return mk_pred(std::move(p));
}
PredPtr pred_not(PredPtr a) {
  Pred p{PredKind::Not};
  p.a = std::move(a);
  return mk_pred(std::move(p));
}

bool eval_predicate(const FieldSchema& schema, const Pred& t, PacketId pk) {
  switch (t.kind) {
    case PredKind::False:
      return false;
    case PredKind::True:
      return true;
    case PredKind::Test:
      return schema.get(pk, t.field) == t.value;
    case PredKind::Or:
      return eval_predicate(schema, *t.a, pk) ||
             eval_predicate(schema, *t.b, pk);
    case PredKind::And:
      return eval_predicate(schema, *t.a, pk) &&
             eval_predicate(schema, *t.b, pk);
    case PredKind::Not:
      return !eval_predicate(schema, *t.a, pk);
  }
  return false;
}

bool pred_equal(const PredPtr& a, const PredPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case PredKind::False:
    case PredKind::True:
      return true;
    case PredKind::Test:
      return a->field == b->field && a->value == b->value;
    case PredKind::Not:
      return pred_equal(a->a, b->a);
    default:
      return pred_equal(a->a, b->a) && pred_equal(a->b, b->b);
  }
}

PolPtr filter(PredPtr t) {
  Pol p{PolKind::Filter};
  p.pred = std::move(t);
  return mk_pol(std::move(p));
}
PolPtr assign(FieldId f, ValueId v) {
  Pol p{PolKind::Assign};
  p.field = f;
  p.value = v;
  return mk_pol(std::move(p));
}
PolPtr dup() {
  static const PolPtr p = mk_pol({PolKind::Dup});
  return p;
}
PolPtr seq(PolPtr a, PolPtr b) {
  Pol p{PolKind::Seq};
  p.a = std::move(a);
  p.b = std::move(b);
  return mk_pol(std::move(p));
}
PolPtr weigh(Value r, PolPtr child) {
  Pol p{PolKind::Weigh};
  p.weight = std::move(r);
  p.a = std::move(child);
  return mk_pol(std::move(p));
}
PolPtr choice(PolPtr a, PolPtr b) {
  Pol p{PolKind::Choice};
  p.a = std::move(a);
  p.b = std::move(b);
  return mk_pol(std::move(p));
}
PolPtr star(PolPtr child) {
  Pol p{PolKind::Star};
  p.a = std::move(child);
  return mk_pol(std::move(p));
}
PolPtr complete_test(PacketId pk) {
  Pol p{PolKind::CompleteTest};
  p.packet = pk;
  return mk_pol(std::move(p));
}
PolPtr complete_assign(PacketId pk) {
  Pol p{PolKind::CompleteAssign};
  p.packet = pk;
  return mk_pol(std::move(p));
}
PolPtr skip() { return filter(pred_true()); }
PolPtr drop() { return filter(pred_false()); }

bool pol_equal(const PolPtr& a, const PolPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case PolKind::Filter:
      return pred_equal(a->pred, b->pred);
    case PolKind::Assign:
      return a->field == b->field && a->value == b->value;
    case PolKind::Dup:
      return true;
    case PolKind::Seq:
    case PolKind::Choice:
      return pol_equal(a->a, b->a) && pol_equal(a->b, b->b);
    case PolKind::Weigh:
      return a->weight == b->weight && pol_equal(a->a, b->a);
    case PolKind::Star:
      return pol_equal(a->a, b->a);
    case PolKind::CompleteTest:
    case PolKind::CompleteAssign:
      return a->packet == b->packet;
  }
  return false;
}

bool star_free(const PolPtr& p) {
  switch (p->kind) {
    case PolKind::Star:
      return false;
    case PolKind::Seq:
    case PolKind::Choice:
      return star_free(p->a) && star_free(p->b);
    case PolKind::Weigh:
      return star_free(p->a);
    default:
      return true;
  }
}

size_t count_primitives(const PolPtr& p) {
  switch (p->kind) {
    case PolKind::Seq:
    case PolKind::Choice:
      return count_primitives(p->a) + count_primitives(p->b);
    case PolKind::Weigh:
    case PolKind::Star:
      return count_primitives(p->a);
    default:
      return 1;
  }
}

size_t count_dups(const PolPtr& p) {
  switch (p->kind) {
    case PolKind::Dup:
      return 1;
    case PolKind::Seq:
    case PolKind::Choice:
      return count_dups(p->a) + count_dups(p->b);
    case PolKind::Weigh:
    case PolKind::Star:
      return count_dups(p->a);
    default:
      return 0;
  }
}

size_t count_stars(const PolPtr& p) {
  switch (p->kind) {
    case PolKind::Seq:
    case PolKind::Choice:
      return count_stars(p->a) + count_stars(p->b);
    case PolKind::Weigh:
      return count_stars(p->a);
    case PolKind::Star:
      return 1 + count_stars(p->a);
    default:
      return 0;
  }
}

namespace {

// predicate precedence: or 0, and 1, not/atom 2
void print_pred_rec(const FieldSchema& schema, const PredPtr& t, int prec,
                    std::string& out) {
  switch (t->kind) {
    case PredKind::False:
      out += "false";
      return;
    case PredKind::True:
      out += "true";
      return;
    case PredKind::Test:
      out += schema.field_name(t->field);
      out += "=";
      out += schema.value_name(t->field, t->value);
      return;
    case PredKind::Not:
      if (t->a->kind == PredKind::Test) {  // f!=v shorthand
        out += schema.field_name(t->a->field);
        out += "!=";
        out += schema.value_name(t->a->field, t->a->value);
        return;
      }
      out += "!";
      if (t->a->kind == PredKind::Or || t->a->kind == PredKind::And) {
        out += "(";
        print_pred_rec(schema, t->a, 0, out);
        out += ")";
      } else {
        print_pred_rec(schema, t->a, 2, out);
      }
      return;
    case PredKind::Or: {
      bool paren = prec > 0;
      if (paren) out += "(";
      print_pred_rec(schema, t->a, 0, out);
      out += " | ";
      print_pred_rec(schema, t->b, 1, out);
      if (paren) out += ")";
      return;
    }
    case PredKind::And: {
      bool paren = prec > 1;
      if (paren) out += "(";
      print_pred_rec(schema, t->a, 1, out);
      out += " & ";
      print_pred_rec(schema, t->b, 2, out);
      if (paren) out += ")";
      return;
    }
  }
}

// policy precedence: choice 0, seq 1, weigh 2, atom 3
void print_pol_rec(const FieldSchema& schema, const Semiring& sr,
                   const PolPtr& p, int prec, std::string& out) {
  switch (p->kind) {
    case PolKind::Filter:
      if (p->pred->kind == PredKind::True) {
        out += "skip";
      } else if (p->pred->kind == PredKind::False) {
        out += "drop";
      } else {
        bool paren = p->pred->kind == PredKind::Or ||
                     p->pred->kind == PredKind::And;
        // & and | bind tighter than ; so bare conjunctions are fine, but
        // parenthesize anyway to keep the output unambiguous to read
        if (paren) out += "(";
        print_pred_rec(schema, p->pred, 0, out);
        if (paren) out += ")";
      }
      return;
    case PolKind::Assign:
      out += schema.field_name(p->field);
      out += " := ";
      out += schema.value_name(p->field, p->value);
      return;
    case PolKind::Dup:
      out += "dup";
      return;
    case PolKind::Seq: {
      bool paren = prec > 1;
      if (paren) out += "(";
      print_pol_rec(schema, sr, p->a, 1, out);
      out += " ; ";
      print_pol_rec(schema, sr, p->b, 2, out);
      if (paren) out += ")";
      return;
    }
    case PolKind::Weigh: {
      out += "weight(";
      out += sr.print(p->weight);
      out += ")@";
      print_pol_rec(schema, sr, p->a, 3, out);
      return;
    }
    case PolKind::Choice: {
      bool paren = prec > 0;
      if (paren) out += "(";
      print_pol_rec(schema, sr, p->a, 0, out);
      out += " + ";
      print_pol_rec(schema, sr, p->b, 1, out);
      if (paren) out += ")";
      return;
    }
    case PolKind::Star:
      out += "(";
      print_pol_rec(schema, sr, p->a, 0, out);
      out += ")*";
      return;
    case PolKind::CompleteTest: {
      out += "(";
      for (size_t f = 0; f < schema.num_fields(); ++f) {
        if (f) out += " & ";
        out += schema.field_name(static_cast<FieldId>(f));
        out += "=";
        out += schema.value_name(static_cast<FieldId>(f),
                                 schema.get(p->packet, static_cast<FieldId>(f)));
      }
      out += ")";
      return;
    }
    case PolKind::CompleteAssign: {
      out += "(";
      for (size_t f = 0; f < schema.num_fields(); ++f) {
        if (f) out += " ; ";
        out += schema.field_name(static_cast<FieldId>(f));
        out += " := ";
        out += schema.value_name(static_cast<FieldId>(f),
                                 schema.get(p->packet, static_cast<FieldId>(f)));
      }
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_pred(const FieldSchema& schema, const PredPtr& t) {
  std::string out;
  print_pred_rec(schema, t, 0, out);
  return out;
}

std::string print_policy(const FieldSchema& schema, const Semiring& sr,
                         const PolPtr& p) {
  std::string out;
  print_pol_rec(schema, sr, p, 0, out);
  return out;
}

}  // namespace wnk
