#include "bellkit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bellkit {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports byte offsets; convert to a line number.
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') ++line;
        }
        throw ParseError("JSON parse error at line " + std::to_string(line) + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const json& require_field(const json& doc, const char* field, const char* where) {
    const auto it = doc.find(field);
    if (it == doc.end()) {
        throw ParseError(std::string(where) + ": missing field '" + field + "'");
    }
    return *it;
}

int require_pm1(const json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw ParseError(where + ": expected integer +1 or -1");
    }
    const int v = value.get<int>();
    if (v != 1 && v != -1) throw ParseError(where + ": expected +1 or -1, got " + std::to_string(v));
    return v;
}

}  // namespace

HiddenVariableModel parse_lhv_model(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("model: top-level value must be an object");

    const json& points_json = require_field(doc, "points", "model");
    const json& weights_json = require_field(doc, "weights", "model");
    const json& table_json = require_field(doc, "table", "model");
    if (!points_json.is_array()) throw ParseError("model.points: expected an array of strings");
    if (!weights_json.is_array()) throw ParseError("model.weights: expected an array of numbers");
    if (!table_json.is_object()) throw ParseError("model.table: expected an object");

    std::vector<std::string> points;
    for (const json& p : points_json) {
        if (!p.is_string()) throw ParseError("model.points: entries must be strings");
        points.push_back(p.get<std::string>());
    }
    std::vector<double> weights;
    for (const json& w : weights_json) {
        if (!w.is_number()) throw ParseError("model.weights: entries must be numbers");
        weights.push_back(w.get<double>());
    }

    AssignmentTable table;
    for (const auto& [label, row] : table_json.items()) {
        if (!row.is_object()) {
            throw ParseError("model.table." + label + ": expected an object of point -> value");
        }
        for (const auto& [point, value] : row.items()) {
            table.set(label, point, require_pm1(value, "model.table." + label + "." + point));
        }
    }

    return HiddenVariableModel(SampleSpace(std::move(points), std::move(weights)),
                               std::move(table));
}

HiddenVariableModel load_lhv_model(const std::string& path) {
    return parse_lhv_model(read_file(path));
}

KSInstance parse_ks_instance(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("instance: top-level value must be an object");

    const json& obs_json = require_field(doc, "observables", "instance");
    const json& ctx_json = require_field(doc, "contexts", "instance");
    if (!obs_json.is_array()) throw ParseError("instance.observables: expected an array");
    if (!ctx_json.is_array()) throw ParseError("instance.contexts: expected an array");

    std::vector<Observable> observables;
    for (std::size_t n = 0; n < obs_json.size(); ++n) {
        const std::string where = "instance.observables[" + std::to_string(n) + "]";
        const json& entry = obs_json[n];
        if (!entry.is_object()) throw ParseError(where + ": expected an object");
        const json& label = require_field(entry, "label", where.c_str());
        const json& matrix_json = require_field(entry, "matrix", where.c_str());
        if (!label.is_string()) throw ParseError(where + ".label: expected a string");
        if (!matrix_json.is_array()) throw ParseError(where + ".matrix: expected an array");

        const std::size_t count = matrix_json.size();
        const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(double(count))));
        if (count == 0 || dim * dim != count) {
            throw ParseError(where + ".matrix: entry count " + std::to_string(count) +
                             " is not a perfect square");
        }
        std::vector<Complex> entries;
        entries.reserve(count);
        for (const json& pair : matrix_json) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number()) {
                throw ParseError(where + ".matrix: entries must be [re, im] number pairs");
            }
            entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        try {
            observables.emplace_back(label.get<std::string>(),
                                     ComplexMatrix(dim, std::move(entries)));
        } catch (const NotHermitianError&) {
            throw ParseError(where + ": matrix is not Hermitian");
        }
    }

    std::vector<KSContext> contexts;
    for (std::size_t n = 0; n < ctx_json.size(); ++n) {
        const std::string where = "instance.contexts[" + std::to_string(n) + "]";
        const json& entry = ctx_json[n];
        if (!entry.is_object()) throw ParseError(where + ": expected an object");
        const json& members_json = require_field(entry, "members", where.c_str());
        const json& sign_json = require_field(entry, "sign", where.c_str());
        if (!members_json.is_array()) throw ParseError(where + ".members: expected an array");

        KSContext context;
        context.sign = require_pm1(sign_json, where + ".sign");
        for (const json& m : members_json) {
            if (!m.is_number_unsigned()) {
                throw ParseError(where + ".members: expected non-negative observable indices");
            }
            context.members.push_back(m.get<std::size_t>());
        }
        contexts.push_back(std::move(context));
    }

    try {
        return KSInstance(std::move(observables), std::move(contexts));
    } catch (const Error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
}

KSInstance load_ks_instance(const std::string& path) {
    return parse_ks_instance(read_file(path));
}

std::string ks_instance_to_json(const KSInstance& instance) {
    json doc;
    doc["observables"] = json::array();
    for (const Observable& obs : instance.observables) {
        json matrix = json::array();
        for (const Complex& z : obs.matrix.entries()) {
            matrix.push_back(json::array({z.real(), z.imag()}));
        }
        doc["observables"].push_back({{"label", obs.label}, {"matrix", std::move(matrix)}});
    }
    doc["contexts"] = json::array();
    for (const KSContext& context : instance.contexts) {
        doc["contexts"].push_back({{"members", context.members}, {"sign", context.sign}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace bellkit
