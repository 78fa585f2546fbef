#pragma once

#include <string>
#include <vector>

#include "bellkit/complex_matrix.hpp"

namespace bellkit {

enum class PauliAxis { X, Y, Z, I };

char axis_letter(PauliAxis axis);

/// The standard 2x2 matrix for the axis (identity for PauliAxis::I).
ComplexMatrix pauli_matrix(PauliAxis axis);

/// Labeled Hermitian matrix. Hermiticity is enforced at construction.
struct Observable {
    std::string label;
    ComplexMatrix matrix;

    Observable(std::string label, ComplexMatrix matrix);

    /// True when the observable squares to the identity (outcomes in {-1,+1}).
    bool is_dichotomic(double tol = kMatrixTolerance) const;
};

Observable pauli(PauliAxis axis);

/// tensor(pauli(axis1), pauli(axis2)), labeled "s1_<axis1> s2_<axis2>".
Observable two_qubit(PauliAxis axis1, PauliAxis axis2);

/// Density matrix. Must be Hermitian, unit trace, and positive
/// semidefinite within tolerance.
struct QuantumState {
    std::string label;
    ComplexMatrix rho;

    QuantumState(std::string label, ComplexMatrix rho);

    static QuantumState pure(std::string label, const std::vector<Complex>& amplitudes);
    static QuantumState maximally_mixed(std::size_t dim);
};

/// The two-qubit state (|01> + e^{i pi/4}|10>)/sqrt(2). Its x/y correlations
/// are <xx> = <yy> = cos(pi/4) and <yx> = -<xy> = sin(pi/4), so the CHSH
/// combination <xx> - <xy> + <yx> + <yy> reaches 2*sqrt(2); it is the top
/// eigenvector of the x/y Bell operator.
QuantumState phased_bell_state();

/// Two dichotomic settings per party; joint observables are tensor products
/// with party 1 on the left.
struct ChshSettings {
    Observable a1, a2;  // party 1
    Observable b1, b2;  // party 2

    ChshSettings(Observable a1, Observable a2, Observable b1, Observable b2);

    /// a1 = b1 = sigma_x, a2 = b2 = sigma_y.
    static ChshSettings pauli_xy();
};

/// Re tr(rho * A). Throws if the imaginary part of the trace exceeds
/// the entrywise tolerance (possible only for invalid inputs).
double expectation(const QuantumState& state, const Observable& obs);

/// <a1 b1> - <a1 b2> + <a2 b1> + <a2 b2> on the given state.
double chsh_value(const QuantumState& state, const ChshSettings& settings);

/// a1(x)b1 - a1(x)b2 + a2(x)b1 + a2(x)b2.
ComplexMatrix bell_operator(const ChshSettings& settings);

/// Largest eigenvalue of the Bell operator; the quantum ceiling for the
/// CHSH value of any state under these settings.
double tsirelson_max(const ChshSettings& settings);

/// F(A,B) = [A,B]^dagger [A,B]. Hermitian, positive semidefinite, and the
/// zero matrix exactly when A and B commute.
Observable commutator_observable(const Observable& a, const Observable& b);

/// expectation(state, F(a,b)); nonnegative up to rounding.
double commutator_norm_expectation(const QuantumState& state, const Observable& a,
                                   const Observable& b);

}  // namespace bellkit
