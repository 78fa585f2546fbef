#include "bellkit/quantum.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace bellkit {

char axis_letter(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return 'x';
        case PauliAxis::Y: return 'y';
        case PauliAxis::Z: return 'z';
        case PauliAxis::I: return 'i';
    }
    throw Error("invalid Pauli axis");
}

ComplexMatrix pauli_matrix(PauliAxis axis) {
    const Complex i{0.0, 1.0};
    switch (axis) {
        case PauliAxis::X:
            return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        case PauliAxis::Y:
            return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
        case PauliAxis::Z:
            return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
        case PauliAxis::I:
            return ComplexMatrix::identity(2);
    }
    throw Error("invalid Pauli axis");
}

Observable::Observable(std::string label_, ComplexMatrix matrix_)
    : label(std::move(label_)), matrix(std::move(matrix_)) {
    if (!is_hermitian(matrix)) {
        throw NotHermitianError("observable '" + label + "' is not Hermitian");
    }
}

bool Observable::is_dichotomic(double tol) const {
    return approx_equal(matrix * matrix, ComplexMatrix::identity(matrix.dim()), tol);
}

Observable pauli(PauliAxis axis) {
    return Observable(std::string("s_") + axis_letter(axis), pauli_matrix(axis));
}

Observable two_qubit(PauliAxis axis1, PauliAxis axis2) {
    std::string label = std::string("s1_") + axis_letter(axis1) + " s2_" + axis_letter(axis2);
    return Observable(std::move(label), tensor(pauli_matrix(axis1), pauli_matrix(axis2)));
}

QuantumState::QuantumState(std::string label_, ComplexMatrix rho_)
    : label(std::move(label_)), rho(std::move(rho_)) {
    if (!is_hermitian(rho)) {
        throw NotHermitianError("state '" + label + "': density matrix is not Hermitian");
    }
    const Complex tr = trace(rho);
    if (std::abs(tr - Complex{1.0, 0.0}) > kMatrixTolerance) {
        throw ModelError("state '" + label + "': trace is not 1");
    }
    for (double ev : hermitian_eigenvalues(rho)) {
        if (ev < -kMatrixTolerance) {
            throw ModelError("state '" + label + "': density matrix has a negative eigenvalue");
        }
    }
}

QuantumState QuantumState::pure(std::string label, const std::vector<Complex>& amplitudes) {
    const std::size_t n = amplitudes.size();
    double norm2 = 0.0;
    for (const Complex& z : amplitudes) norm2 += std::norm(z);
    if (norm2 <= 0.0) throw ModelError("pure state amplitudes are all zero");
    ComplexMatrix rho(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rho(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
    return QuantumState(std::move(label), std::move(rho));
}

QuantumState QuantumState::maximally_mixed(std::size_t dim) {
    const Complex w{1.0 / static_cast<double>(dim), 0.0};
    return QuantumState("maximally_mixed", w * ComplexMatrix::identity(dim));
}

QuantumState phased_bell_state() {
    const double phi = std::numbers::pi / 4.0;
    const Complex phase{std::cos(phi), std::sin(phi)};
    return QuantumState::pure("phased_bell", {0.0, 1.0, phase, 0.0});
}

ChshSettings::ChshSettings(Observable a1_, Observable a2_, Observable b1_, Observable b2_)
    : a1(std::move(a1_)), a2(std::move(a2_)), b1(std::move(b1_)), b2(std::move(b2_)) {
    for (const Observable* o : {&a1, &a2, &b1, &b2}) {
        if (!o->is_dichotomic()) {
            throw NotDichotomicError("CHSH setting '" + o->label +
                                     "' does not square to the identity");
        }
    }
}

ChshSettings ChshSettings::pauli_xy() {
    return ChshSettings(pauli(PauliAxis::X), pauli(PauliAxis::Y),
                        pauli(PauliAxis::X), pauli(PauliAxis::Y));
}

double expectation(const QuantumState& state, const Observable& obs) {
    if (state.rho.dim() != obs.matrix.dim()) {
        throw DimensionError("expectation: state dim " + std::to_string(state.rho.dim()) +
                             " vs observable dim " + std::to_string(obs.matrix.dim()));
    }
    const Complex tr = trace(state.rho * obs.matrix);
    if (std::abs(tr.imag()) > kMatrixTolerance) {
        throw Error("expectation of '" + obs.label + "' has non-real trace");
    }
    return tr.real();
}

double chsh_value(const QuantumState& state, const ChshSettings& s) {
    const auto joint = [](const Observable& a, const Observable& b) {
        return Observable(a.label + " " + b.label, tensor(a.matrix, b.matrix));
    };
    return expectation(state, joint(s.a1, s.b1)) - expectation(state, joint(s.a1, s.b2)) +
           expectation(state, joint(s.a2, s.b1)) + expectation(state, joint(s.a2, s.b2));
}

ComplexMatrix bell_operator(const ChshSettings& s) {
    return tensor(s.a1.matrix, s.b1.matrix) - tensor(s.a1.matrix, s.b2.matrix) +
           tensor(s.a2.matrix, s.b1.matrix) + tensor(s.a2.matrix, s.b2.matrix);
}

double tsirelson_max(const ChshSettings& settings) {
    return hermitian_eigenvalues(bell_operator(settings)).back();
}

Observable commutator_observable(const Observable& a, const Observable& b) {
    if (a.matrix.dim() != b.matrix.dim()) {
        throw DimensionError("commutator_observable: dimension mismatch");
    }
    const ComplexMatrix c = commutator(a.matrix, b.matrix);
    return Observable("F(" + a.label + "," + b.label + ")", adjoint(c) * c);
}

double commutator_norm_expectation(const QuantumState& state, const Observable& a,
                                   const Observable& b) {
    return expectation(state, commutator_observable(a, b));
}

}  // namespace bellkit
