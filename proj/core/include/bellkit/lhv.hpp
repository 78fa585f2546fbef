#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

/// Finite probability space: named points with normalized weights.
struct SampleSpace {
    std::vector<std::string> points;
    std::vector<double> weights;

    SampleSpace(std::vector<std::string> points, std::vector<double> weights);
};

/// Dichotomic response functions: (observable label, point) -> {-1,+1}.
class AssignmentTable {
public:
    void set(const std::string& label, const std::string& point, int value);
    int value(const std::string& label, const std::string& point) const;
    bool has(const std::string& label, const std::string& point) const;

    const std::map<std::string, std::map<std::string, int>>& rows() const { return rows_; }

private:
    std::map<std::string, std::map<std::string, int>> rows_;  // label -> point -> value
};

/// The four single-party measurement labels, in CHSH order.
inline const std::array<std::string, 4> kChshLabels = {"a1", "a2", "b1", "b2"};

/// A finite sample space plus a total response table for the four CHSH
/// labels. Joint responses factorize: f_{ab}(w) = f_a(w) * f_b(w).
struct HiddenVariableModel {
    SampleSpace space;
    AssignmentTable table;
    std::array<std::string, 4> labels = kChshLabels;

    HiddenVariableModel(SampleSpace space, AssignmentTable table);
    HiddenVariableModel(SampleSpace space, AssignmentTable table,
                        std::array<std::string, 4> labels);
};

/// Two sample points that may differ, with responses for all four labels at
/// both points.
struct TwoTimeStrategy {
    std::string omega_t1;
    std::string omega_t2;
    AssignmentTable table;
};

/// Average of a response (label "a1") or of a factorized product
/// (label "a1*b1") over the sample space.
double lhv_expectation(const HiddenVariableModel& model, const std::string& label);

/// f_a1(w1) f_b1(w1) - f_a1(w1) f_b2(w2) + f_a2(w2) f_b1(w1) + f_a2(w2) f_b2(w2).
/// Always +2 or -2.
int chsh_u(const TwoTimeStrategy& strategy);

/// The single-point value chsh_u(w, w); always +2 or -2.
int chsh_v(const std::string& point, const AssignmentTable& table);

/// One of the 16 deterministic response patterns (values +-1).
struct DeterministicStrategy {
    int a1, a2, b1, b2;
};

int chsh_v(const DeterministicStrategy& s);

struct LhvBound {
    int max_value;           // over the 16 deterministic strategies
    int attaining;           // strategies reaching max_value
    int strategies_checked;  // 16
};

/// Enumerates all deterministic strategies; the CHSH functional is linear in
/// the weights, so its maximum over all models is attained at one of them.
LhvBound enumerate_deterministic_strategies();

/// The classical CHSH ceiling: exactly 2.
double max_chsh_lhv();

/// CHSH value of the phased Bell state under x/y settings minus the
/// classical ceiling; positive (2*sqrt(2) - 2).
double quantum_gap();

}  // namespace bellkit
