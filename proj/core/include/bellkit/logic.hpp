#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

/// Immutable propositional formula: named atoms combined with NOT, AND, OR
/// and IMPLIES. Cheap to copy (shared structure).
class Formula {
public:
    enum class Kind { Atom, Not, And, Or, Implies };

    static Formula atom(std::string name);

    Kind kind() const;
    const std::string& atom_name() const;  // Kind::Atom only
    Formula left() const;                  // Not: the operand; binary: left
    Formula right() const;                 // binary nodes only

    std::set<std::string> atoms() const;

    friend Formula operator!(Formula f);
    friend Formula operator&&(Formula a, Formula b);
    friend Formula operator||(Formula a, Formula b);
    friend Formula implies(Formula a, Formula b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

using TruthAssignment = std::map<std::string, int>;  // atom -> 0 or 1

/// Classical two-valued semantics. Throws UnboundAtomError when the
/// assignment misses an atom, and ModelError for values outside {0,1}.
int evaluate(const Formula& formula, const TruthAssignment& assignment);

/// Rewrites every P => Q subformula as !P || Q.
Formula implication_as_disjunction(const Formula& formula);

/// Truth-table equality over the union of both formulas' atoms (exhaustive;
/// at most 20 atoms).
bool equivalent(const Formula& a, const Formula& b);

/// Outcome of assigning truth values to the two top-level theses:
/// bell_theorem (the CHSH bound holds for local realistic premises) and
/// commutativity_thesis (local realism forces every commutator observable
/// to vanish, i.e. "premises fail" OR "all commutators vanish" holds for
/// every state).
struct CaseReport {
    int bell_theorem = 0;
    int commutativity_thesis = 0;
    int premises_never_hold = 0;             // forced: NOT bell_theorem
    std::optional<int> commutators_vanish;   // forced when determined, nullopt if free
    int disjunction = 0;                     // premises_never_hold OR commutators_vanish
    bool consistent = false;
    int matched_case = 0;                    // 1..3 for the analyzed cases, 0 otherwise
    bool covered = false;                    // matched_case != 0
};

/// Derives the forced assignments for the remaining atoms, using the
/// two-valued OR semantics.
CaseReport case_analysis(int bell_theorem, int commutativity_thesis);

/// One derivation of a value for the shared quantity from a premise subset.
struct ForcedValue {
    double value = 0.0;
    std::vector<std::string> premises;
};

/// The five jointly unsatisfiable premises: under all of them the
/// two-time norm product of a commutator observable is forced to both
/// 0 and 1.
struct ContradictionReport {
    std::vector<std::string> members;
    std::string quantity;
    std::vector<ForcedValue> derivations;
    bool unsatisfiable = false;
};

ContradictionReport norm_product_contradiction();

/// True when removing the named member blocks at least one of the two
/// derivations, leaving no forced conflict.
bool satisfiable_without(const ContradictionReport& report, const std::string& member);

}  // namespace bellkit
