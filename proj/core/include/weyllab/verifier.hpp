#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weyllab/weylcat.hpp"

namespace weyl {

/// Membership variables of a Venn atom.
enum class Var { Sigma, SigmaA, Phi1, Phi2, Psi1, Psi2 };

inline constexpr std::size_t kVarCount = 6;

/// One membership pattern over the six sets.
struct Assignment {
  std::array<bool, kVarCount> values{};

  bool operator[](Var v) const { return values[static_cast<std::size_t>(v)]; }
  bool& operator[](Var v) { return values[static_cast<std::size_t>(v)]; }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

std::string_view varName(Var v);
std::string describe(const Assignment& a);

/// Per-point boolean formula over the membership variables.
class Formula {
 public:
  enum class Op { Const, Var, Not, And, Or, Implies, Iff };

  static Formula constant(bool value);
  static Formula var(Var v);

  friend Formula operator!(const Formula& f);
  friend Formula operator&&(const Formula& a, const Formula& b);
  friend Formula operator||(const Formula& a, const Formula& b);
  friend Formula implies(const Formula& a, const Formula& b);
  friend Formula iff(const Formula& a, const Formula& b);

  bool eval(const Assignment& a) const;
  std::string str() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula binary(Op op, const Formula& a, const Formula& b);
  std::shared_ptr<const Node> node_;
};

/// Pointwise set difference a \ b.
Formula minus(const Formula& a, const Formula& b);
/// target = a ⊔ b pointwise: target iff (a or b), and a, b never both hold.
Formula disjointUnionIs(const Formula& target, const Formula& a, const Formula& b);

/// Every formula stands for a statement "for all points x".
/// The sentence claims: hypotheses imply (lhs iff rhs).
struct SetSentence {
  std::vector<Formula> hypotheses;
  Formula lhs = Formula::constant(true);
  Formula rhs = Formula::constant(true);
};

/// σ_a ⇒ σ and every part ⇒ σ.
std::vector<Formula> structuralAxioms();

enum class Mutation {
  None,
  DropOrder,       // remove the order relation between Psi and Phi
  DropPartition,   // remove the partitioning hypothesis
  WeakenDisjoint,  // read every ⊔ of the condition as ∪
};

/// Throws UnknownTheorem for ids outside the set-algebraic catalog.
SetSentence encodeTheorem(TheoremId id, Mutation mutation = Mutation::None);

struct Verdict {
  std::optional<Assignment> counterAtom;  // empty means Valid

  bool valid() const { return !counterAtom.has_value(); }
};

struct Decision {
  Verdict forward;   // hypotheses and lhs imply rhs
  Verdict backward;  // hypotheses and rhs imply lhs
};

/// A universally quantified implication between per-point statements fails
/// iff one Venn atom satisfies axioms, hypotheses and the antecedent but not
/// the consequent: the one-point model built on it is a countermodel, and
/// any countermodel contains such a point. Atoms are scanned with
/// (σ, σ_a) = (1,1), (1,0), (0,0) and then Φ1 Φ2 Ψ1 Ψ2 as an ascending
/// binary number with Φ1 the most significant bit.
Decision decide(const SetSentence& s);

/// The 48 assignments in scan order; (σ, σ_a) = (0, 1) is skipped by the axioms.
std::vector<Assignment> enumerationOrder();

struct CatalogVerdict {
  TheoremId id;
  Decision decision;
};

std::vector<CatalogVerdict> checkCatalog();

}  // namespace weyl
