#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"

#include "bentqf/enumeration.hpp"
#include "bentqf/quadform.hpp"

namespace bentqf {

/// Exact integers serialize as JSON numbers while they fit in 64 bits and
/// as decimal strings beyond that, so no value is ever rounded.
inline nlohmann::json bigint_json(const BigInt& value) {
    if (value >= 0 && value <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        return value.convert_to<std::uint64_t>();
    }
    return value.str();
}

inline nlohmann::json to_json(const QuadForm& f) {
    return nlohmann::json{{"e", f.ctx().e()}, {"m", f.ctx().m()}, {"coeffs", f.coeffs()}};
}

inline nlohmann::json to_json(const SpectrumSummary& summary) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [value, count] : summary.values) {
        values[std::to_string(value)] = count;
    }
    return nlohmann::json{{"n", summary.n}, {"k_f", summary.k_f}, {"values", values}};
}

inline nlohmann::json to_json(const ParamClass& cls) {
    nlohmann::json out;
    out["kind"] = to_string(cls.kind);
    out["v"] = cls.v;
    out["p"] = cls.p > 0 ? nlohmann::json(cls.p) : nlohmann::json(nullptr);
    out["q"] = cls.q > 0 ? nlohmann::json(cls.q) : nlohmann::json(nullptr);
    out["r"] = cls.r > 0 ? nlohmann::json(cls.r) : nlohmann::json(nullptr);
    out["failed_condition"] = cls.failed_condition.empty()
                                  ? nlohmann::json(nullptr)
                                  : nlohmann::json(cls.failed_condition);
    return out;
}

inline nlohmann::json to_json(const CountReport& report) {
    nlohmann::json out;
    out["kind"] = to_string(report.cls.kind);
    out["formula"] = report.formula ? bigint_json(*report.formula) : nlohmann::json(nullptr);
    out["exhaustive"] =
        report.exhaustive ? nlohmann::json(*report.exhaustive) : nlohmann::json(nullptr);
    out["space"] = bigint_json(report.space);
    return out;
}

}  // namespace bentqf
