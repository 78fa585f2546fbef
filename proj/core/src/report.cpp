#include "bellkit/report.hpp"

#include <cstdio>

namespace bellkit {

const char* to_string(Status status) {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "info";
    }
    return "info";
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void Report::set(const std::string& key, std::int64_t value) { values[key] = value; }
void Report::set(const std::string& key, int value) { values[key] = static_cast<std::int64_t>(value); }
void Report::set(const std::string& key, double value) { values[key] = value; }
void Report::note(std::string detail) { details.push_back(std::move(detail)); }

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string value_to_string(const ReportValue& value) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
    return format_real(std::get<double>(value));
}

}  // namespace

std::string Report::to_json() const {
    std::string out = "{";
    out += "\"command\":\"" + json_escape(command) + "\",";
    out += "\"details\":[";
    for (std::size_t i = 0; i < details.size(); ++i) {
        if (i > 0) out += ",";
        out += "\"" + json_escape(details[i]) + "\"";
    }
    out += "],";
    out += "\"status\":\"" + std::string(to_string(status)) + "\",";
    out += "\"values\":{";
    bool first = true;
    for (const auto& [key, value] : values) {  // std::map: keys already sorted
        if (!first) out += ",";
        first = false;
        out += "\"" + json_escape(key) + "\":" + value_to_string(value);
    }
    out += "}}";
    return out;
}

std::string Report::to_text() const {
    std::string out = "command: " + command + "\n";
    out += "status: " + std::string(to_string(status)) + "\n";
    for (const auto& [key, value] : values) {
        out += "  " + key + " = " + value_to_string(value) + "\n";
    }
    for (const std::string& detail : details) {
        out += "  # " + detail + "\n";
    }
    return out;
}

int Report::exit_code() const { return status == Status::Fail ? 1 : 0; }

}  // namespace bellkit
