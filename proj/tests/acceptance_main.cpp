// Acceptance suite: every headline claim the toolkit makes, one criterion
// per line, each with its numeric tolerance and runtime budget pinned in
// code. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "bellkit/commands.hpp"
#include "bellkit/ks.hpp"
#include "bellkit/lhv.hpp"
#include "bellkit/logic.hpp"
#include "bellkit/quantum.hpp"
#include "test_support.hpp"

using namespace bellkit;
using bellkit::testing::Rng;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double budget_ms;
    std::function<bool(std::string&)> body;
};

void run(const Criterion& criterion) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = criterion.body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
            .count();
    if (elapsed_ms >= criterion.budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over runtime budget");
    }
    std::printf("[%s] %s (%.2f ms / %.0f ms)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.name.c_str(), elapsed_ms, criterion.budget_ms,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double real_value(const Report& report, const std::string& key) {
    return std::get<double>(report.values.at(key));
}

std::int64_t int_value(const Report& report, const std::string& key) {
    return std::get<std::int64_t>(report.values.at(key));
}

const double kTwoSqrtTwo = 2.0 * std::numbers::sqrt2;

// 1. CHSH quantum value 2*sqrt(2) with both partial sums sqrt(2), each to 1e-10.
bool chsh_quantum_value(std::string& detail) {
    const Report report = cmd_chsh_quantum();
    const double s = real_value(report, "s_quantum");
    const double p1 = real_value(report, "partial_xx_yy");
    const double p2 = real_value(report, "partial_xy_yx");
    detail = "s=" + format_real(s);
    return report.status == Status::Pass && close(s, kTwoSqrtTwo, 1e-10) &&
           close(p1, std::numbers::sqrt2, 1e-10) && close(p2, std::numbers::sqrt2, 1e-10);
}

// 2. Classical ceiling exactly 2, 8 attaining strategies, V in {-2,+2} for all 16.
bool lhv_bound(std::string& detail) {
    const Report report = cmd_chsh_lhv();
    bool values_ok = true;
    for (int mask = 0; mask < 16; ++mask) {
        const auto bit = [mask](int i) { return (mask >> i) & 1 ? -1 : 1; };
        const int v = chsh_v(DeterministicStrategy{bit(0), bit(1), bit(2), bit(3)});
        if (v != 2 && v != -2) values_ok = false;
    }
    detail = "max=" + std::to_string(int_value(report, "max_lhv")) +
             " attaining=" + std::to_string(int_value(report, "attaining_strategies"));
    return report.status == Status::Pass && int_value(report, "max_lhv") == 2 &&
           int_value(report, "attaining_strategies") == 8 && values_ok;
}

// 3. U in {-2,+2} over all 2^8 two-point response tables.
bool two_time_identity(std::string& detail) {
    int checked = 0;
    for (int mask = 0; mask < 256; ++mask) {
        AssignmentTable table;
        const auto bit = [mask](int i) { return (mask >> i) & 1 ? -1 : 1; };
        table.set("a1", "t1", bit(0));
        table.set("a2", "t1", bit(1));
        table.set("b1", "t1", bit(2));
        table.set("b2", "t1", bit(3));
        table.set("a1", "t2", bit(4));
        table.set("a2", "t2", bit(5));
        table.set("b1", "t2", bit(6));
        table.set("b2", "t2", bit(7));
        const int u = chsh_u(TwoTimeStrategy{"t1", "t2", table});
        if (u != 2 && u != -2) return false;
        ++checked;
    }
    detail = std::to_string(checked) + " tables";
    return checked == 256;
}

// 4. Bell operator maximum equals the state-achieved value to 1e-10.
bool tsirelson_consistency(std::string& detail) {
    const ChshSettings settings = ChshSettings::pauli_xy();
    const double operator_max = tsirelson_max(settings);
    const double achieved = chsh_value(phased_bell_state(), settings);
    detail = "max=" + format_real(operator_max) + " achieved=" + format_real(achieved);
    return close(operator_max, achieved, 1e-10) && close(operator_max, kTwoSqrtTwo, 1e-10);
}

// 5. Commutator observable: F(sx,sy) expectation 4 on 100 random states;
//    exact 0 for 20 exactly-commuting pairs; PSD for 100 random pairs.
bool commutator_observable_checks(std::string& detail) {
    Rng rng(501);

    for (int trial = 0; trial < 100; ++trial) {
        const QuantumState state =
            QuantumState::pure("random", bellkit::testing::random_amplitudes(rng, 2));
        const double value = commutator_norm_expectation(state, pauli(PauliAxis::X),
                                                         pauli(PauliAxis::Y));
        if (!close(value, 4.0, 1e-10)) {
            detail = "F(sx,sy) expectation " + format_real(value);
            return false;
        }
    }

    // Commuting pairs with Gaussian-integer entries: products are exact in
    // binary64, so the commutator and hence the expectation are exactly 0.
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m1 = bellkit::testing::random_integer_hermitian(rng, 2);
        const ComplexMatrix m2 = bellkit::testing::random_integer_hermitian(rng, 2);
        const Observable a("a(x)id", tensor(m1, ComplexMatrix::identity(2)));
        const Observable b("id(x)b", tensor(ComplexMatrix::identity(2), m2));
        const QuantumState state =
            QuantumState::pure("random", bellkit::testing::random_amplitudes(rng, 4));
        const double value = commutator_norm_expectation(state, a, b);
        if (value != 0.0) {
            detail = "commuting pair expectation " + format_real(value) + " != 0";
            return false;
        }
    }

    for (int trial = 0; trial < 100; ++trial) {
        const Observable a("a", bellkit::testing::random_hermitian(rng, 4));
        const Observable b("b", bellkit::testing::random_hermitian(rng, 4));
        const double min_eig =
            hermitian_eigenvalues(commutator_observable(a, b).matrix).front();
        if (min_eig < -1e-10) {
            detail = "min eigenvalue " + format_real(min_eig);
            return false;
        }
    }
    detail = "100 states, 20 commuting pairs, 100 PSD checks";
    return true;
}

// 6. Square constraints to 1e-12 including zz = -(yy)(xx); no coloring,
//    minimum exactly 1 over all 512 assignments.
bool square_noncolorability(std::string& detail) {
    const KSInstance square = mermin_peres_square();
    const InstanceReport verification = verify_instance(square);
    if (!verification.pass) {
        detail = "context constraints failed";
        return false;
    }

    using enum PauliAxis;
    const ComplexMatrix lhs = two_qubit(Z, Z).matrix;
    const ComplexMatrix rhs = -(two_qubit(Y, Y).matrix * two_qubit(X, X).matrix);
    if (!approx_equal(lhs, rhs, 1e-12)) {
        detail = "zz != -(yy)(xx)";
        return false;
    }

    const ColoringResult result = find_coloring(square);
    if (!std::holds_alternative<NoColoring>(result)) {
        detail = "unexpected coloring found";
        return false;
    }
    const auto& no = std::get<NoColoring>(result);
    detail = "min_violations=" + std::to_string(no.min_violations);
    return no.min_violations == 1;
}

// 7. Fixing f_zz = zeta forces f_xx * f_yy = -zeta with exactly 2 pairs.
bool value_entanglement_forcing(std::string& detail) {
    for (int zeta : {+1, -1}) {
        const ValueEntanglementReport report = value_entanglement(zeta);
        if (!report.relation_verified || report.forced_product != -zeta) return false;
        int admissible = 0;
        for (const auto& [fxx, fyy] : report.admissible_pairs) {
            if (fxx * fyy == -zeta) ++admissible;
        }
        if (admissible != 2) return false;
    }
    detail = "zeta=+1 -> product -1; zeta=-1 -> product +1";
    return true;
}

// 8. Case analysis reproduces the three consistent cases and the
//    two-valued OR table.
bool logic_cases(std::string& detail) {
    const Report case1 = cmd_logic_cases(1, 0);
    const Report case2 = cmd_logic_cases(0, 1);
    const Report case3 = cmd_logic_cases(1, 1);
    const bool cases_ok =
        case1.status == Status::Pass && int_value(case1, "premises_never_hold") == 0 &&
        int_value(case1, "commutators_vanish") == 0 && int_value(case1, "disjunction") == 0 &&
        case2.status == Status::Pass && int_value(case2, "premises_never_hold") == 1 &&
        case2.values.count("commutators_vanish") == 0 && int_value(case2, "disjunction") == 1 &&
        case3.status == Status::Pass && int_value(case3, "premises_never_hold") == 0 &&
        int_value(case3, "commutators_vanish") == 1 && int_value(case3, "disjunction") == 1;

    const Formula disjunction = Formula::atom("A") || Formula::atom("B");
    const int expected[2][2] = {{0, 1}, {1, 1}};
    bool table_ok = true;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            if (evaluate(disjunction, {{"A", a}, {"B", b}}) != expected[a][b]) table_ok = false;

    detail = "cases 1-3 consistent; OR table exhaustive";
    return cases_ok && table_ok;
}

// 9. Property suites: eigensolver round-trip on 500 random Hermitian
//    matrices up to dim 16, adjoint involution, tensor dimension law, and
//    exhaustive implication-rewrite equivalence.
bool property_suites(std::string& detail) {
    Rng rng(901);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 16);

    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = dim_dist(rng);
        const ComplexMatrix a = bellkit::testing::random_hermitian(rng, n);
        double sum = 0.0;
        for (double ev : hermitian_eigenvalues(a)) sum += ev;
        if (!close(sum, trace(a).real(), 1e-10)) {
            detail = "eigenvalue sum mismatch at dim " + std::to_string(n);
            return false;
        }
    }

    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = dim_dist(rng);
        ComplexMatrix m(n);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{dist(rng), dist(rng)};
        if (!approx_equal(adjoint(adjoint(m)), m)) {
            detail = "adjoint involution failed";
            return false;
        }
    }

    std::uniform_int_distribution<std::size_t> small_dim(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t na = small_dim(rng);
        const std::size_t nb = small_dim(rng);
        if (tensor(bellkit::testing::random_hermitian(rng, na),
                   bellkit::testing::random_hermitian(rng, nb))
                .dim() != na * nb) {
            detail = "tensor dimension law failed";
            return false;
        }
    }

    const Formula a = Formula::atom("A");
    const Formula b = Formula::atom("B");
    const Formula c = Formula::atom("C");
    const Formula shapes[] = {
        implies(a, b),
        implies(a, implies(b, c)),
        implies(a && b, c) || implies(c, a && !b),
        !implies(implies(a, b), c),
    };
    for (const Formula& f : shapes) {
        if (!equivalent(f, implication_as_disjunction(f))) {
            detail = "implication rewrite changed a truth table";
            return false;
        }
    }

    detail = "500 spectra, 100 adjoints, 100 tensors, 4 rewrite shapes";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 chsh-quantum: 2*sqrt(2) and sqrt(2) partial sums (1e-10)", 10.0, chsh_quantum_value},
        {"2 chsh-lhv: maximum exactly 2, 8 attaining, V = +-2", 10.0, lhv_bound},
        {"3 two-time identity: U = +-2 over all 256 tables", 100.0, two_time_identity},
        {"4 tsirelson: operator max equals state value (1e-10)", 10.0, tsirelson_consistency},
        {"5 commutator observable: 4 / exact 0 / PSD", 1000.0, commutator_observable_checks},
        {"6 contextuality square: constraints pass, min_violations = 1", 100.0,
         square_noncolorability},
        {"7 value entanglement: product forced to -zeta, 2 pairs", 10.0,
         value_entanglement_forcing},
        {"8 logic cases: cases 1-3 consistent, OR table exact", 10.0, logic_cases},
        {"9 property suites: spectra, adjoint, tensor, rewrite", 5000.0, property_suites},
    };
    for (const Criterion& criterion : criteria) run(criterion);
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
