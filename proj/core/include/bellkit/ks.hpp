#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bellkit/quantum.hpp"

namespace bellkit {

/// A set of mutually commuting observables (given by index) whose ordered
/// product must equal sign * identity.
struct KSContext {
    std::vector<std::size_t> members;
    int sign = 1;
};

/// Labeled dichotomic observables plus signed product constraints.
/// Shape is validated on construction; the quantum-side constraints are
/// checked by verify_instance so deliberately broken instances can be built
/// and reported on.
struct KSInstance {
    std::vector<Observable> observables;
    std::vector<KSContext> contexts;

    KSInstance(std::vector<Observable> observables, std::vector<KSContext> contexts);
};

/// The 3x3 square of two-qubit Pauli products whose three row contexts carry
/// sign +1 and whose column contexts carry signs +1, +1, -1. The sign
/// product over all six contexts is -1 while every observable sits in
/// exactly two contexts, so no global {-1,+1} assignment satisfies all six.
KSInstance mermin_peres_square();

struct ContextCheck {
    bool commuting = false;        // all member pairs commute
    bool product_matches = false;  // ordered product == sign * identity
};

struct InstanceReport {
    std::vector<ContextCheck> contexts;
    bool pass = false;
};

/// Numerically checks every context (entrywise tolerance kMatrixTolerance).
InstanceReport verify_instance(const KSInstance& instance);

/// Global candidate valuation, index-aligned with the instance observables.
struct KSAssignment {
    std::vector<int> values;  // each +1 or -1
};

struct NoColoring {
    int min_violations = 0;   // true minimum over all assignments
    KSAssignment witness;     // lexicographically smallest attaining it (+1 < -1)
};

using ColoringResult = std::variant<KSAssignment, NoColoring>;

/// Number of contexts whose value product differs from the context sign.
int count_violated(const KSInstance& instance, const KSAssignment& assignment);

/// Exhaustive search over all 2^n assignments (n <= 24). Returns the first
/// valid coloring in lexicographic order, or the violation minimum plus a
/// witness when none exists.
ColoringResult find_coloring(const KSInstance& instance);

/// Real polynomial, coefficients in ascending degree order; degree <= 8.
struct Polynomial {
    std::vector<double> coeffs;

    double operator()(double x) const;
    std::size_t degree() const;
};

struct FunctionalRuleResult {
    bool consistent = false;             // forced value lies in the spectrum of g(obs)
    bool forces_nondichotomic = false;   // forced value outside {-1,+1}
    double forced_value = 0.0;           // g(value)
    std::vector<double> image_spectrum;  // eigenvalues of g(obs), ascending
};

/// Checks the functional rule g(f_v(w)) = f_{g(v)}(w) for one observable and
/// one candidate value: the value forced for g(obs) must be attainable,
/// i.e. an eigenvalue of g(obs) computed by spectral action.
FunctionalRuleResult functional_rule_check(const Observable& obs, int value,
                                           const Polynomial& g);

/// Consequences of fixing f_{zz} = zeta under the operator identity
/// zz = -(yy)(xx): the product f_{xx} * f_{yy} is forced to -zeta, leaving
/// exactly two admissible value pairs.
struct ValueEntanglementReport {
    int zeta = 1;
    int forced_product = -1;  // required value of f_{xx} * f_{yy}
    std::array<std::pair<int, int>, 2> admissible_pairs{};
    bool relation_verified = false;  // (yy)(xx) == -zz numerically
};

ValueEntanglementReport value_entanglement(int zeta);

}  // namespace bellkit
