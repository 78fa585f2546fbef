#include "bellkit/ks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace bellkit {

KSInstance::KSInstance(std::vector<Observable> observables_, std::vector<KSContext> contexts_)
    : observables(std::move(observables_)), contexts(std::move(contexts_)) {
    if (observables.empty()) throw ModelError("instance needs at least one observable");
    const std::size_t dim = observables.front().matrix.dim();
    for (const Observable& o : observables) {
        if (o.matrix.dim() != dim) {
            throw DimensionError("observable '" + o.label + "' has dim " +
                                 std::to_string(o.matrix.dim()) + ", expected " +
                                 std::to_string(dim));
        }
    }
    for (const KSContext& c : contexts) {
        if (c.sign != 1 && c.sign != -1) throw ModelError("context sign must be +1 or -1");
        for (std::size_t idx : c.members) {
            if (idx >= observables.size()) {
                throw ModelError("context refers to observable index " + std::to_string(idx) +
                                 " out of range");
            }
        }
    }
}

KSInstance mermin_peres_square() {
    using enum PauliAxis;
    std::vector<Observable> obs = {
        two_qubit(X, I), two_qubit(I, X), two_qubit(X, X),
        two_qubit(I, Y), two_qubit(Y, I), two_qubit(Y, Y),
        two_qubit(X, Y), two_qubit(Y, X), two_qubit(Z, Z),
    };
    std::vector<KSContext> contexts = {
        {{0, 1, 2}, +1},  // rows
        {{3, 4, 5}, +1},
        {{6, 7, 8}, +1},
        {{0, 3, 6}, +1},  // columns
        {{1, 4, 7}, +1},
        {{2, 5, 8}, -1},
    };
    return KSInstance(std::move(obs), std::move(contexts));
}

InstanceReport verify_instance(const KSInstance& instance) {
    InstanceReport report;
    report.pass = true;
    for (const KSContext& context : instance.contexts) {
        ContextCheck check;
        check.commuting = true;
        for (std::size_t i = 0; i < context.members.size(); ++i) {
            for (std::size_t j = i + 1; j < context.members.size(); ++j) {
                const ComplexMatrix c = commutator(instance.observables[context.members[i]].matrix,
                                                   instance.observables[context.members[j]].matrix);
                if (max_abs(c) > kMatrixTolerance) check.commuting = false;
            }
        }
        if (context.members.empty()) {
            check.product_matches = context.sign == 1;  // empty product is the identity
        } else {
            const std::size_t dim = instance.observables.front().matrix.dim();
            ComplexMatrix product = ComplexMatrix::identity(dim);
            for (std::size_t idx : context.members) {
                product = product * instance.observables[idx].matrix;
            }
            const Complex sign{static_cast<double>(context.sign), 0.0};
            check.product_matches =
                approx_equal(product, sign * ComplexMatrix::identity(dim), kMatrixTolerance);
        }
        report.pass = report.pass && check.commuting && check.product_matches;
        report.contexts.push_back(check);
    }
    return report;
}

int count_violated(const KSInstance& instance, const KSAssignment& assignment) {
    if (assignment.values.size() != instance.observables.size()) {
        throw ModelError("assignment size does not match observable count");
    }
    int violated = 0;
    for (const KSContext& context : instance.contexts) {
        int product = 1;
        for (std::size_t idx : context.members) product *= assignment.values[idx];
        if (product != context.sign) ++violated;
    }
    return violated;
}

ColoringResult find_coloring(const KSInstance& instance) {
    const std::size_t n = instance.observables.size();
    if (n > 24) {
        throw InstanceTooLargeError("exhaustive search budget is 24 observables, got " +
                                    std::to_string(n));
    }
    // Bit (n-1-i) of the counter carries observable i, so ascending counter
    // order is lexicographic order over assignments with +1 < -1.
    KSAssignment best;
    int best_violations = -1;
    KSAssignment current;
    current.values.resize(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < n; ++i) {
            current.values[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
        }
        const int violations = count_violated(instance, current);
        if (violations == 0) return current;
        if (best_violations < 0 || violations < best_violations) {
            best_violations = violations;
            best = current;
        }
    }
    return NoColoring{best_violations, std::move(best)};
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::size_t Polynomial::degree() const {
    std::size_t deg = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0) deg = k;
    return deg;
}

FunctionalRuleResult functional_rule_check(const Observable& obs, int value,
                                           const Polynomial& g) {
    if (value != 1 && value != -1) {
        throw ModelError("candidate value must be +1 or -1");
    }
    if (!obs.is_dichotomic()) {
        throw NotDichotomicError("observable '" + obs.label + "' is not dichotomic");
    }
    if (g.degree() > 8) {
        throw ModelError("polynomial degree exceeds 8");
    }

    FunctionalRuleResult result;
    result.forced_value = g(static_cast<double>(value));

    // Spectral action: g maps each eigenvalue of obs to an eigenvalue of g(obs).
    result.image_spectrum = hermitian_eigenvalues(obs.matrix);
    for (double& ev : result.image_spectrum) ev = g(ev);
    std::sort(result.image_spectrum.begin(), result.image_spectrum.end());

    constexpr double tol = 1e-8;
    result.consistent = std::any_of(result.image_spectrum.begin(), result.image_spectrum.end(),
                                    [&](double ev) {
                                        return std::abs(ev - result.forced_value) <= tol;
                                    });
    result.forces_nondichotomic = std::abs(std::abs(result.forced_value) - 1.0) > tol;
    return result;
}

ValueEntanglementReport value_entanglement(int zeta) {
    if (zeta != 1 && zeta != -1) throw ModelError("zeta must be +1 or -1");

    using enum PauliAxis;
    const ComplexMatrix zz = tensor(pauli_matrix(Z), pauli_matrix(Z));
    const ComplexMatrix yy_xx =
        tensor(pauli_matrix(Y), pauli_matrix(Y)) * tensor(pauli_matrix(X), pauli_matrix(X));

    ValueEntanglementReport report;
    report.zeta = zeta;
    report.relation_verified = approx_equal(zz, -yy_xx, kMatrixTolerance);

    // f_zz = -f_yy * f_xx, hence f_xx * f_yy = -zeta.
    report.forced_product = -zeta;
    std::size_t found = 0;
    for (int fxx : {+1, -1}) {
        for (int fyy : {+1, -1}) {
            if (fxx * fyy == report.forced_product) {
                report.admissible_pairs[found++] = {fxx, fyy};
            }
        }
    }
    return report;
}

}  // namespace bellkit
