#pragma once

#include <string>

#include "bellkit/ks.hpp"
#include "bellkit/report.hpp"

namespace bellkit {

/// Tolerance for the CHSH headline numbers (2*sqrt(2) and the sqrt(2)
/// partial sums).
inline constexpr double kChshTolerance = 1e-10;

/// CHSH value of the phased Bell state under x/y settings, with both
/// partial sums. Pass when the total is 2*sqrt(2) within kChshTolerance.
Report cmd_chsh_quantum();

/// Classical CHSH ceiling by exhaustive enumeration of the 16 deterministic
/// strategies. Pass when the maximum is exactly 2.
Report cmd_chsh_lhv();

/// Verifies the built-in square's six context constraints and searches all
/// 512 assignments for a coloring.
Report cmd_ks_square();

/// Same checks for a user-supplied instance.
Report cmd_ks_instance(const KSInstance& instance, const std::string& source);

/// Commutator observable F(A,B) for two observables given as Pauli product
/// specs: "<axis>" or "<axis>.<axis>" with axes in {x, y, z, i}.
/// Two-qubit pairs are evaluated on the phased Bell state, single-qubit
/// pairs on the maximally mixed qubit.
Report cmd_commutator(const std::string& a_spec, const std::string& b_spec);

/// Case analysis for the two top-level theses (each 0 or 1).
Report cmd_logic_cases(int bell_theorem, int commutativity_thesis);

/// Correlations and CHSH value of a user-supplied hidden-variable model.
Report cmd_lhv_eval(const std::string& path);

/// Compares the Bell operator's largest eigenvalue with the CHSH value the
/// phased Bell state achieves.
Report cmd_tsirelson();

/// Parses "<axis>" or "<axis>.<axis>" into an observable. Throws ParseError.
Observable parse_pauli_product(const std::string& spec);

/// Appends the numeric tolerances the command family relies on.
void append_tolerance_report(Report& report);

}  // namespace bellkit
