#include "bellkit/lhv.hpp"

#include <cmath>
#include <utility>

#include "bellkit/quantum.hpp"

namespace bellkit {

SampleSpace::SampleSpace(std::vector<std::string> points_, std::vector<double> weights_)
    : points(std::move(points_)), weights(std::move(weights_)) {
    if (points.empty()) throw ModelError("sample space needs at least one point");
    if (points.size() != weights.size()) {
        throw ModelError("sample space has " + std::to_string(points.size()) + " points but " +
                         std::to_string(weights.size()) + " weights");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw ModelError("weights must be finite and >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ModelError("weights sum to " + std::to_string(sum) + ", expected 1");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw ModelError("duplicate point '" + points[i] + "'");
}

void AssignmentTable::set(const std::string& label, const std::string& point, int value) {
    if (value != 1 && value != -1) {
        throw ModelError("response value for (" + label + ", " + point + ") must be +1 or -1");
    }
    rows_[label][point] = value;
}

int AssignmentTable::value(const std::string& label, const std::string& point) const {
    const auto row = rows_.find(label);
    if (row != rows_.end()) {
        const auto cell = row->second.find(point);
        if (cell != row->second.end()) return cell->second;
    }
    throw UnknownObservableError("no response for observable '" + label + "' at point '" +
                                 point + "'");
}

bool AssignmentTable::has(const std::string& label, const std::string& point) const {
    const auto row = rows_.find(label);
    return row != rows_.end() && row->second.count(point) > 0;
}

namespace {

void require_total(const SampleSpace& space, const AssignmentTable& table,
                   const std::array<std::string, 4>& labels) {
    for (const std::string& label : labels)
        for (const std::string& point : space.points)
            if (!table.has(label, point)) {
                throw ModelError("table is missing (" + label + ", " + point + ")");
            }
}

}  // namespace

HiddenVariableModel::HiddenVariableModel(SampleSpace space_, AssignmentTable table_)
    : HiddenVariableModel(std::move(space_), std::move(table_), kChshLabels) {}

HiddenVariableModel::HiddenVariableModel(SampleSpace space_, AssignmentTable table_,
                                         std::array<std::string, 4> labels_)
    : space(std::move(space_)), table(std::move(table_)), labels(std::move(labels_)) {
    require_total(space, table, labels);
}

double lhv_expectation(const HiddenVariableModel& model, const std::string& label) {
    std::string first = label;
    std::string second;
    if (const auto star = label.find('*'); star != std::string::npos) {
        first = label.substr(0, star);
        second = label.substr(star + 1);
        if (first.empty() || second.empty() || second.find('*') != std::string::npos) {
            throw UnknownObservableError("malformed product label '" + label + "'");
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < model.space.points.size(); ++i) {
        const std::string& point = model.space.points[i];
        int response = model.table.value(first, point);
        if (!second.empty()) response *= model.table.value(second, point);
        sum += model.space.weights[i] * response;
    }
    return sum;
}

int chsh_u(const TwoTimeStrategy& s) {
    const int a1 = s.table.value("a1", s.omega_t1);
    const int b1 = s.table.value("b1", s.omega_t1);
    const int a2 = s.table.value("a2", s.omega_t2);
    const int b2 = s.table.value("b2", s.omega_t2);
    return a1 * b1 - a1 * b2 + a2 * b1 + a2 * b2;
}

int chsh_v(const std::string& point, const AssignmentTable& table) {
    return chsh_v(DeterministicStrategy{table.value("a1", point), table.value("a2", point),
                                        table.value("b1", point), table.value("b2", point)});
}

int chsh_v(const DeterministicStrategy& s) {
    return s.a1 * s.b1 - s.a1 * s.b2 + s.a2 * s.b1 + s.a2 * s.b2;
}

LhvBound enumerate_deterministic_strategies() {
    LhvBound bound{-4, 0, 0};
    for (int mask = 0; mask < 16; ++mask) {
        const auto bit = [mask](int i) { return (mask >> i) & 1 ? -1 : 1; };
        const int v = chsh_v(DeterministicStrategy{bit(0), bit(1), bit(2), bit(3)});
        ++bound.strategies_checked;
        if (v > bound.max_value) {
            bound.max_value = v;
            bound.attaining = 1;
        } else if (v == bound.max_value) {
            ++bound.attaining;
        }
    }
    return bound;
}

double max_chsh_lhv() {
    return static_cast<double>(enumerate_deterministic_strategies().max_value);
}

double quantum_gap() {
    return chsh_value(phased_bell_state(), ChshSettings::pauli_xy()) - max_chsh_lhv();
}

}  // namespace bellkit
