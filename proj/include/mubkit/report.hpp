#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "mubkit/linalg.hpp"

namespace mubkit {

/// One verified claim: a stable identifier, the structural anchor it checks,
/// expected and measured values, and the worst observed deviation.
struct Claim {
    std::string id;
    std::string anchor;
    std::string expected;
    std::string measured;
    double max_deviation = 0;
    bool pass = false;
};

struct Report {
    std::string command;
    std::vector<i64> dimensions;
    std::vector<Claim> claims;
    /// Optional tabular payload (e.g. a distance spectrum), appended to the
    /// CSV form after the claims table.
    std::string extra_csv;
    double runtime_seconds = 0;

    bool all_pass() const {
        for (const auto& c : claims) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Fixed float formatting: 12 significant digits, locale-independent.
inline std::string fmt_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string fmt_int(i64 v) { return std::to_string(v); }

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace detail

/// Deterministic JSON: fixed key order, 12-significant-digit numbers.
inline std::string report_to_json(const Report& r) {
    std::string out = "{\n";
    out += "  \"command\": \"" + detail::json_escape(r.command) + "\",\n";
    out += "  \"dimensions\": [";
    for (std::size_t i = 0; i < r.dimensions.size(); ++i) {
        if (i) out += ", ";
        out += fmt_int(r.dimensions[i]);
    }
    out += "],\n";
    out += "  \"claims\": [\n";
    for (std::size_t i = 0; i < r.claims.size(); ++i) {
        const auto& c = r.claims[i];
        out += "    {\"id\": \"" + detail::json_escape(c.id) + "\", ";
        out += "\"anchor\": \"" + detail::json_escape(c.anchor) + "\", ";
        out += "\"expected\": \"" + detail::json_escape(c.expected) + "\", ";
        out += "\"measured\": \"" + detail::json_escape(c.measured) + "\", ";
        out += "\"max_deviation\": " + fmt_g12(c.max_deviation) + ", ";
        out += std::string("\"pass\": ") + (c.pass ? "true" : "false") + "}";
        if (i + 1 < r.claims.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n";
    out += "  \"all_pass\": " + std::string(r.all_pass() ? "true" : "false") + ",\n";
    out += "  \"runtime_seconds\": " + fmt_g12(r.runtime_seconds) + "\n";
    out += "}\n";
    return out;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

inline std::string report_to_csv(const Report& r) {
    std::string out = "claim_id,anchor,expected,measured,max_deviation,pass\n";
    for (const auto& c : r.claims) {
        out += csv_escape(c.id) + "," + csv_escape(c.anchor) + "," + csv_escape(c.expected) + "," +
               csv_escape(c.measured) + "," + fmt_g12(c.max_deviation) + "," +
               (c.pass ? "true" : "false") + "\n";
    }
    if (!r.extra_csv.empty()) {
        out += "\n";
        out += r.extra_csv;
    }
    return out;
}

} // namespace mubkit
