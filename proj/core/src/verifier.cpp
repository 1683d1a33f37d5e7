#include "weyllab/verifier.hpp"

#include "weyllab/error.hpp"

namespace weyl {

struct Formula::Node {
  Op op = Op::Const;
  bool value = false;
  Var var = Var::Sigma;
  std::shared_ptr<const Node> a, b;
};

std::string_view varName(Var v) {
  static constexpr std::array<std::string_view, kVarCount> names = {"sigma", "sigmaA", "Phi1", "Phi2", "Psi1", "Psi2"};
  return names[static_cast<std::size_t>(v)];
}

std::string describe(const Assignment& a) {
  std::string out = "{";
  for (std::size_t k = 0; k < kVarCount; ++k) {
    if (k) out += ", ";
    out += std::string(varName(static_cast<Var>(k))) + "=" + (a.values[k] ? "1" : "0");
  }
  return out + "}";
}

Formula Formula::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = value;
  return Formula(std::move(n));
}

Formula Formula::var(Var v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->var = v;
  return Formula(std::move(n));
}

Formula operator!(const Formula& f) {
  auto n = std::make_shared<Formula::Node>();
  n->op = Formula::Op::Not;
  n->a = f.node_;
  return Formula(std::move(n));
}

Formula Formula::binary(Op op, const Formula& x, const Formula& y) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = x.node_;
  n->b = y.node_;
  return Formula(std::move(n));
}

Formula operator&&(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::And, a, b); }
Formula operator||(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::Or, a, b); }
Formula implies(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::Implies, a, b); }
Formula iff(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::Iff, a, b); }

bool Formula::eval(const Assignment& v) const {
  const Node& n = *node_;
  auto sub = [&](const std::shared_ptr<const Node>& p) { return Formula(p).eval(v); };
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::Var: return v[n.var];
    case Op::Not: return !sub(n.a);
    case Op::And: return sub(n.a) && sub(n.b);
    case Op::Or: return sub(n.a) || sub(n.b);
    case Op::Implies: return !sub(n.a) || sub(n.b);
    case Op::Iff: return sub(n.a) == sub(n.b);
  }
  return false;
}

std::string Formula::str() const {
  const Node& n = *node_;
  auto sub = [](const std::shared_ptr<const Node>& p) { return Formula(p).str(); };
  switch (n.op) {
    case Op::Const: return n.value ? "true" : "false";
    case Op::Var: return std::string(varName(n.var));
    case Op::Not: return "!" + sub(n.a);
    case Op::And: return "(" + sub(n.a) + " & " + sub(n.b) + ")";
    case Op::Or: return "(" + sub(n.a) + " | " + sub(n.b) + ")";
    case Op::Implies: return "(" + sub(n.a) + " -> " + sub(n.b) + ")";
    case Op::Iff: return "(" + sub(n.a) + " <-> " + sub(n.b) + ")";
  }
  return {};
}

Formula minus(const Formula& a, const Formula& b) { return a && !b; }

Formula disjointUnionIs(const Formula& target, const Formula& a, const Formula& b) {
  return iff(target, a || b) && !(a && b);
}

std::vector<Formula> structuralAxioms() {
  Formula sigma = Formula::var(Var::Sigma);
  std::vector<Formula> out;
  for (Var v : {Var::SigmaA, Var::Phi1, Var::Phi2, Var::Psi1, Var::Psi2}) out.push_back(implies(Formula::var(v), sigma));
  return out;
}

SetSentence encodeTheorem(TheoremId id, Mutation mutation) {
  const TheoremShape& shape = theoremShape(id);
  const Formula sigma = Formula::var(Var::Sigma), sigmaA = Formula::var(Var::SigmaA);
  const Formula phi1 = Formula::var(Var::Phi1), phi2 = Formula::var(Var::Phi2);
  const Formula psi1 = Formula::var(Var::Psi1), psi2 = Formula::var(Var::Psi2);
  const Formula gap = minus(sigma, sigmaA);

  auto partition = [&](Role role, Target target) {
    const Formula& t = target == Target::Sigma ? sigma : sigmaA;
    return role == Role::Phi ? disjointUnionIs(t, phi1, phi2) : disjointUnionIs(t, psi1, psi2);
  };
  // lhs = a ⊔ b, or a ∪ b when weakened.
  auto unionIs = [&](const Formula& lhs, const Formula& a, const Formula& b) {
    return mutation == Mutation::WeakenDisjoint ? iff(lhs, a || b) : disjointUnionIs(lhs, a, b);
  };

  SetSentence s;
  if (mutation != Mutation::DropPartition) s.hypotheses.push_back(partition(shape.hypothesisRole, shape.hypothesisTarget));
  if (mutation != Mutation::DropOrder) {
    if (shape.order == Order::Leq) {
      s.hypotheses.push_back(implies(phi1, psi1));
      s.hypotheses.push_back(implies(psi2, phi2));
    } else {
      s.hypotheses.push_back(implies(psi1, phi1));
      s.hypotheses.push_back(implies(psi2, phi2));
    }
  }
  s.lhs = partition(shape.conclusionRole, shape.conclusionTarget);
  switch (shape.condition) {
    case Condition::T21: s.rhs = iff(minus(psi1, phi1), minus(phi2, psi2)); break;
    case Condition::T41: s.rhs = unionIs(minus(phi2, psi2), minus(psi1, phi1), gap); break;
    case Condition::T42: s.rhs = unionIs(minus(psi1, phi1), minus(phi2, psi2), gap); break;
    case Condition::T45: s.rhs = unionIs(gap, minus(phi1, psi1), minus(phi2, psi2)); break;
  }
  return s;
}

std::vector<Assignment> enumerationOrder() {
  std::vector<Assignment> out;
  const std::pair<bool, bool> outer[] = {{true, true}, {true, false}, {false, false}};
  for (const auto& [sigma, sigmaA] : outer) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      Assignment a;
      a[Var::Sigma] = sigma;
      a[Var::SigmaA] = sigmaA;
      a[Var::Phi1] = mask & 8;
      a[Var::Phi2] = mask & 4;
      a[Var::Psi1] = mask & 2;
      a[Var::Psi2] = mask & 1;
      out.push_back(a);
    }
  }
  return out;
}

Decision decide(const SetSentence& s) {
  static const std::vector<Assignment> order = enumerationOrder();
  const std::vector<Formula> axioms = structuralAxioms();
  auto admissible = [&](const Assignment& a) {
    for (const Formula& f : axioms)
      if (!f.eval(a)) return false;
    for (const Formula& f : s.hypotheses)
      if (!f.eval(a)) return false;
    return true;
  };
  auto search = [&](const Formula& antecedent, const Formula& consequent) {
    Verdict v;
    for (const Assignment& a : order) {
      if (admissible(a) && antecedent.eval(a) && !consequent.eval(a)) {
        v.counterAtom = a;
        break;
      }
    }
    return v;
  };
  return {search(s.lhs, s.rhs), search(s.rhs, s.lhs)};
}

std::vector<CatalogVerdict> checkCatalog() {
  std::vector<CatalogVerdict> out;
  for (const TheoremShape& shape : theoremCatalog()) out.push_back({shape.id, decide(encodeTheorem(shape.id))});
  return out;
}

}  // namespace weyl
