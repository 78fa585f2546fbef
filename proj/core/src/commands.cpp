#include "bellkit/commands.hpp"

#include <cmath>
#include <numbers>

#include "bellkit/json_io.hpp"
#include "bellkit/lhv.hpp"
#include "bellkit/logic.hpp"

namespace bellkit {

namespace {

const double kTwoSqrtTwo = 2.0 * std::numbers::sqrt2;

}  // namespace

Report cmd_chsh_quantum() {
    Report report;
    report.command = "chsh-quantum";

    const QuantumState state = phased_bell_state();
    const auto corr = [&](PauliAxis a, PauliAxis b) {
        return expectation(state, two_qubit(a, b));
    };
    using enum PauliAxis;
    const double xx = corr(X, X);
    const double xy = corr(X, Y);
    const double yx = corr(Y, X);
    const double yy = corr(Y, Y);

    const double total = xx - xy + yx + yy;
    report.set("partial_xx_yy", xx + yy);
    report.set("partial_xy_yx", -xy + yx);
    report.set("s_quantum", total);
    report.status =
        std::abs(total - kTwoSqrtTwo) <= kChshTolerance ? Status::Pass : Status::Fail;
    return report;
}

Report cmd_chsh_lhv() {
    Report report;
    report.command = "chsh-lhv";

    const LhvBound bound = enumerate_deterministic_strategies();
    report.set("max_lhv", bound.max_value);
    report.set("attaining_strategies", bound.attaining);
    report.set("strategies_checked", bound.strategies_checked);
    report.set("gap", quantum_gap());
    report.status = bound.max_value == 2 ? Status::Pass : Status::Fail;
    return report;
}

namespace {

Report report_ks(const KSInstance& instance, const std::string& command) {
    Report report;
    report.command = command;

    const InstanceReport verification = verify_instance(instance);
    int failed_contexts = 0;
    for (std::size_t i = 0; i < verification.contexts.size(); ++i) {
        const ContextCheck& check = verification.contexts[i];
        if (!check.commuting) {
            report.note("context " + std::to_string(i) + ": members do not all commute");
        }
        if (!check.product_matches) {
            report.note("context " + std::to_string(i) + ": product != sign * identity");
        }
        if (!check.commuting || !check.product_matches) ++failed_contexts;
    }

    report.set("observables", static_cast<int>(instance.observables.size()));
    report.set("contexts", static_cast<int>(instance.contexts.size()));
    report.set("constraint_failures", failed_contexts);
    report.set("assignments_searched",
               static_cast<std::int64_t>(std::int64_t{1} << instance.observables.size()));

    const ColoringResult coloring = find_coloring(instance);
    if (const auto* ok = std::get_if<KSAssignment>(&coloring)) {
        report.set("colorable", 1);
        report.set("min_violations", 0);
        std::string values;
        for (int v : ok->values) values += v > 0 ? "+" : "-";
        report.note("coloring: " + values);
        report.status = verification.pass ? Status::Pass : Status::Fail;
    } else {
        const auto& no = std::get<NoColoring>(coloring);
        report.set("colorable", 0);
        report.set("min_violations", no.min_violations);
        std::string values;
        for (int v : no.witness.values) values += v > 0 ? "+" : "-";
        report.note("closest assignment: " + values);
        report.status = verification.pass ? Status::Pass : Status::Fail;
    }
    return report;
}

}  // namespace

Report cmd_ks_square() {
    const KSInstance square = mermin_peres_square();
    Report report = report_ks(square, "ks-square");
    // The built-in square must additionally be non-colorable with exactly
    // one unavoidable violation.
    const bool expected = std::get<std::int64_t>(report.values.at("colorable")) == 0 &&
                          std::get<std::int64_t>(report.values.at("min_violations")) == 1;
    if (report.status == Status::Pass && !expected) report.status = Status::Fail;
    return report;
}

Report cmd_ks_instance(const KSInstance& instance, const std::string& source) {
    Report report = report_ks(instance, "ks-square");
    report.note("instance: " + source);
    return report;
}

Observable parse_pauli_product(const std::string& spec) {
    const auto axis_of = [&](char c) {
        switch (c) {
            case 'x': return PauliAxis::X;
            case 'y': return PauliAxis::Y;
            case 'z': return PauliAxis::Z;
            case 'i': return PauliAxis::I;
            default:
                throw ParseError("bad observable spec '" + spec +
                                 "': axes must be one of x, y, z, i");
        }
    };
    if (spec.size() == 1) return pauli(axis_of(spec[0]));
    if (spec.size() == 3 && spec[1] == '.') return two_qubit(axis_of(spec[0]), axis_of(spec[2]));
    throw ParseError("bad observable spec '" + spec + "': expected '<axis>' or '<axis>.<axis>'");
}

Report cmd_commutator(const std::string& a_spec, const std::string& b_spec) {
    Report report;
    report.command = "commutator";

    const Observable a = parse_pauli_product(a_spec);
    const Observable b = parse_pauli_product(b_spec);
    if (a.matrix.dim() != b.matrix.dim()) {
        throw ParseError("observable specs '" + a_spec + "' and '" + b_spec +
                         "' act on different numbers of qubits");
    }

    const Observable f = commutator_observable(a, b);
    const QuantumState state =
        f.matrix.dim() == 4 ? phased_bell_state() : QuantumState::maximally_mixed(f.matrix.dim());
    const double value = expectation(state, f);
    const double max_eig = hermitian_eigenvalues(f.matrix).back();
    const bool commuting = max_abs(commutator(a.matrix, b.matrix)) <= kMatrixTolerance;

    report.set("f_norm_expectation", value);
    report.set("f_max_eigenvalue", max_eig);
    report.set("commuting", commuting ? 1 : 0);
    report.note("F(" + a.label + ", " + b.label + ") on state '" + state.label + "'");
    report.status = Status::Info;
    return report;
}

Report cmd_logic_cases(int bell_theorem, int commutativity_thesis) {
    Report report;
    report.command = "logic-cases";

    const CaseReport cases = case_analysis(bell_theorem, commutativity_thesis);
    report.set("bell_theorem", cases.bell_theorem);
    report.set("commutativity_thesis", cases.commutativity_thesis);
    report.set("premises_never_hold", cases.premises_never_hold);
    if (cases.commutators_vanish) {
        report.set("commutators_vanish", *cases.commutators_vanish);
    } else if (cases.consistent) {
        report.note("commutators_vanish unconstrained: both 0 and 1 are admissible");
    } else {
        report.note("no value of commutators_vanish reaches the required disjunction value");
    }
    report.set("disjunction", cases.disjunction);
    report.set("consistent", cases.consistent ? 1 : 0);
    report.set("matched_case", cases.matched_case);
    if (!cases.covered) {
        report.note("input pair not covered by the standard case analysis (cases 1-3)");
        report.status = Status::Info;
    } else {
        report.status = cases.consistent ? Status::Pass : Status::Fail;
    }
    return report;
}

Report cmd_lhv_eval(const std::string& path) {
    Report report;
    report.command = "lhv-eval";

    const HiddenVariableModel model = load_lhv_model(path);
    const double c11 = lhv_expectation(model, "a1*b1");
    const double c12 = lhv_expectation(model, "a1*b2");
    const double c21 = lhv_expectation(model, "a2*b1");
    const double c22 = lhv_expectation(model, "a2*b2");
    const double chsh = c11 - c12 + c21 + c22;

    report.set("corr_a1b1", c11);
    report.set("corr_a1b2", c12);
    report.set("corr_a2b1", c21);
    report.set("corr_a2b2", c22);
    report.set("chsh", chsh);
    report.set("points", static_cast<int>(model.space.points.size()));
    if (std::abs(chsh) > 2.0 + 1e-12) {
        report.note("|CHSH| exceeds the factorized-model ceiling 2; model is malformed");
        report.status = Status::Fail;
    } else {
        report.status = Status::Pass;
    }
    return report;
}

Report cmd_tsirelson() {
    Report report;
    report.command = "tsirelson";

    const ChshSettings settings = ChshSettings::pauli_xy();
    const double operator_max = tsirelson_max(settings);
    const double state_value = chsh_value(phased_bell_state(), settings);

    report.set("bell_operator_max", operator_max);
    report.set("state_value", state_value);
    report.set("difference", operator_max - state_value);
    report.status = std::abs(operator_max - kTwoSqrtTwo) <= kChshTolerance &&
                            std::abs(operator_max - state_value) <= kChshTolerance
                        ? Status::Pass
                        : Status::Fail;
    return report;
}

void append_tolerance_report(Report& report) {
    report.set("tol_chsh", kChshTolerance);
    report.set("tol_entrywise", kMatrixTolerance);
    report.set("tol_spectral", kSpectralTolerance);
    report.note("tol_entrywise: matrix equality / hermiticity checks");
    report.note("tol_spectral: eigenvalue checks");
    report.note("tol_chsh: CHSH headline comparisons");
}

}  // namespace bellkit
