#include "bellkit/logic.hpp"

#include <algorithm>
#include <utility>

namespace bellkit {

struct Formula::Node {
    Kind kind;
    std::string name;  // atoms only
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string name) {
    if (name.empty()) throw ModelError("atom name must be non-empty");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->name = std::move(name);
    return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
    if (node_->kind != Kind::Atom) throw Error("atom_name on a non-atom node");
    return node_->name;
}

Formula Formula::left() const {
    if (!node_->left) throw Error("node has no operand");
    return Formula(node_->left);
}

Formula Formula::right() const {
    if (!node_->right) throw Error("node has no right operand");
    return Formula(node_->right);
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out.insert(f.atom_name());
            return;
        case Formula::Kind::Not:
            collect_atoms(f.left(), out);
            return;
        default:
            collect_atoms(f.left(), out);
            collect_atoms(f.right(), out);
            return;
    }
}

}  // namespace

std::set<std::string> Formula::atoms() const {
    std::set<std::string> out;
    collect_atoms(*this, out);
    return out;
}

Formula operator!(Formula f) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = Formula::Kind::Not;
    node->left = std::move(f.node_);
    return Formula(std::move(node));
}

Formula operator&&(Formula a, Formula b) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = Formula::Kind::And;
    node->left = std::move(a.node_);
    node->right = std::move(b.node_);
    return Formula(std::move(node));
}

Formula operator||(Formula a, Formula b) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = Formula::Kind::Or;
    node->left = std::move(a.node_);
    node->right = std::move(b.node_);
    return Formula(std::move(node));
}

Formula implies(Formula a, Formula b) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = Formula::Kind::Implies;
    node->left = std::move(a.node_);
    node->right = std::move(b.node_);
    return Formula(std::move(node));
}

int evaluate(const Formula& formula, const TruthAssignment& assignment) {
    switch (formula.kind()) {
        case Formula::Kind::Atom: {
            const auto it = assignment.find(formula.atom_name());
            if (it == assignment.end()) {
                throw UnboundAtomError("atom '" + formula.atom_name() + "' is unbound");
            }
            if (it->second != 0 && it->second != 1) {
                throw ModelError("truth value for '" + formula.atom_name() + "' must be 0 or 1");
            }
            return it->second;
        }
        case Formula::Kind::Not:
            return 1 - evaluate(formula.left(), assignment);
        case Formula::Kind::And:
            return evaluate(formula.left(), assignment) & evaluate(formula.right(), assignment);
        case Formula::Kind::Or:
            return evaluate(formula.left(), assignment) | evaluate(formula.right(), assignment);
        case Formula::Kind::Implies:
            return (1 - evaluate(formula.left(), assignment)) |
                   evaluate(formula.right(), assignment);
    }
    throw Error("invalid formula node");
}

Formula implication_as_disjunction(const Formula& formula) {
    switch (formula.kind()) {
        case Formula::Kind::Atom:
            return formula;
        case Formula::Kind::Not:
            return !implication_as_disjunction(formula.left());
        case Formula::Kind::And:
            return implication_as_disjunction(formula.left()) &&
                   implication_as_disjunction(formula.right());
        case Formula::Kind::Or:
            return implication_as_disjunction(formula.left()) ||
                   implication_as_disjunction(formula.right());
        case Formula::Kind::Implies:
            return !implication_as_disjunction(formula.left()) ||
                   implication_as_disjunction(formula.right());
    }
    throw Error("invalid formula node");
}

bool equivalent(const Formula& a, const Formula& b) {
    std::set<std::string> atom_set = a.atoms();
    for (const std::string& name : b.atoms()) atom_set.insert(name);
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
    if (atoms.size() > 20) throw ModelError("equivalence check limited to 20 atoms");

    const std::size_t total = std::size_t{1} << atoms.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        TruthAssignment assignment;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            assignment[atoms[i]] = static_cast<int>((mask >> i) & 1);
        }
        if (evaluate(a, assignment) != evaluate(b, assignment)) return false;
    }
    return true;
}

CaseReport case_analysis(int bell_theorem, int commutativity_thesis) {
    if ((bell_theorem != 0 && bell_theorem != 1) ||
        (commutativity_thesis != 0 && commutativity_thesis != 1)) {
        throw ModelError("case_analysis inputs must be 0 or 1");
    }

    CaseReport report;
    report.bell_theorem = bell_theorem;
    report.commutativity_thesis = commutativity_thesis;

    // Affirming the CHSH bound commits to states that satisfy its premises,
    // so "the premises fail everywhere" takes the opposite value.
    report.premises_never_hold = 1 - bell_theorem;

    // The commutativity thesis is the universally quantified disjunction
    // "premises fail OR commutators vanish"; its truth value is the target
    // value of that disjunction.
    const Formula disjunction =
        Formula::atom("premises_never_hold") || Formula::atom("commutators_vanish");

    if (report.premises_never_hold == 0) {
        // Left disjunct false: the right one is forced to the target.
        report.commutators_vanish = commutativity_thesis;
        TruthAssignment assignment{{"premises_never_hold", 0},
                                   {"commutators_vanish", *report.commutators_vanish}};
        report.disjunction = evaluate(disjunction, assignment);
        report.consistent = report.disjunction == commutativity_thesis;
    } else {
        // Left disjunct true: the disjunction is 1 whatever the right
        // disjunct does.
        TruthAssignment assignment{{"premises_never_hold", 1}, {"commutators_vanish", 0}};
        report.disjunction = evaluate(disjunction, assignment);
        report.consistent = report.disjunction == commutativity_thesis;
        if (report.consistent) {
            report.commutators_vanish = std::nullopt;  // both 0 and 1 work
        }
    }

    if (bell_theorem == 1 && commutativity_thesis == 0) report.matched_case = 1;
    if (bell_theorem == 0 && commutativity_thesis == 1) report.matched_case = 2;
    if (bell_theorem == 1 && commutativity_thesis == 1) report.matched_case = 3;
    report.covered = report.matched_case != 0;
    return report;
}

ContradictionReport norm_product_contradiction() {
    ContradictionReport report;
    report.members = {"realism", "distribution_rule", "locality", "dichotomic_outcomes",
                      "universal_commutativity"};
    report.quantity = "norm_product";  // ||{psi(t1),F(A,B)}|| * ||{psi(t2),F(A,B)}||

    // Each norm factor vanishes when every commutator observable has zero
    // expectation, so the product is 0.
    report.derivations.push_back({0.0, {"universal_commutativity"}});
    // Realism, the distribution rule, and dichotomic outcomes turn both
    // factors into integrals of +-1-valued responses; locality identifies
    // the two sample points and saturates the bound, so the product is 1.
    report.derivations.push_back(
        {1.0, {"realism", "distribution_rule", "locality", "dichotomic_outcomes"}});

    report.unsatisfiable = true;
    return report;
}

bool satisfiable_without(const ContradictionReport& report, const std::string& member) {
    std::vector<double> derivable;
    for (const ForcedValue& d : report.derivations) {
        const bool blocked =
            std::find(d.premises.begin(), d.premises.end(), member) != d.premises.end();
        if (!blocked) derivable.push_back(d.value);
    }
    for (std::size_t i = 0; i < derivable.size(); ++i)
        for (std::size_t j = i + 1; j < derivable.size(); ++j)
            if (derivable[i] != derivable[j]) return false;
    return true;
}

}  // namespace bellkit
