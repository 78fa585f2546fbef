#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace bellkit {

enum class Status { Pass, Fail, Info };

const char* to_string(Status status);

/// Integers stay integers; reals are printed with 12 significant digits.
using ReportValue = std::variant<std::int64_t, double>;

/// Deterministic 12-significant-digit rendering ("%.12g").
std::string format_real(double value);

/// Result of one verification command. Serialization is canonical: keys
/// sorted, stable number formatting, no locale dependence — identical
/// invocations produce byte-identical output.
struct Report {
    std::string command;
    Status status = Status::Info;
    std::map<std::string, ReportValue> values;
    std::vector<std::string> details;

    void set(const std::string& key, std::int64_t value);
    void set(const std::string& key, int value);
    void set(const std::string& key, double value);
    void note(std::string detail);

    std::string to_json() const;
    std::string to_text() const;

    /// 0 for pass/info, 1 for fail.
    int exit_code() const;
};

}  // namespace bellkit
