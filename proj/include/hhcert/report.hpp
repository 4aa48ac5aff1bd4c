#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hhcert/audit.hpp"
#include "hhcert/bounds.hpp"
#include "hhcert/convexity.hpp"
#include "hhcert/means.hpp"
#include "hhcert/quad_bounds.hpp"
#include "hhcert/special.hpp"
#include "hhcert/version.hpp"

namespace hhcert {

using json = nlohmann::json;

inline json to_json(const ConvexityReport& r) {
    json j{{"pass", r.pass},
           {"s", r.s},
           {"worst_violation", r.worst_violation},
           {"domain_violation", r.domain_violation}};
    if (r.witness)
        j["witness"] = {{"x", r.witness->x}, {"y", r.witness->y}, {"t", r.witness->t}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const BoundResult& r) {
    json j{{"theorem", r.theorem_id}, {"bound", r.bound},         {"lhs", r.lhs},
           {"tightness", r.tightness}, {"hypothesis_ok", r.hypothesis_ok}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.variants.empty()) j["variants"] = r.variants;
    return j;
}

inline json to_json(const HHSandwich& r) {
    return json{{"lower", r.lower},
                {"upper", r.upper},
                {"mean_integral", r.mean_integral},
                {"s_convexity_ok", r.s_convexity_ok}};
}

inline json to_json(const QuadratureResult& r) {
    json j{{"rule", to_string(r.rule)},
           {"value", r.value},
           {"error_bound", r.error_bound},
           {"error_bound_weak", r.error_bound_weak},
           {"error_bound_corrected", r.error_bound_corrected},
           {"oracle_error", r.oracle_error},
           {"hypothesis_ok", r.hypothesis_ok}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline json to_json(const JagersBounds& jb) {
    return json{{"s", jb.s}, {"lower", jb.lower}, {"middle", jb.middle}, {"upper", jb.upper}};
}

inline json to_json(const AuditCase& c) {
    json j{{"claim", c.claim_id}, {"variant", c.variant}};
    if (!c.tag.empty()) j["tag"] = c.tag;
    if (!c.fn.empty()) {
        j["fn"] = c.fn;
        j["fn_params"] = c.fn_params;
    }
    j["params"] = c.params;
    if (!c.nodes.empty()) j["nodes"] = c.nodes;
    return j;
}

inline json to_json(const AuditRecord& r) {
    json j{{"case", to_json(r.c)},
           {"stated", r.stated},
           {"measured", r.measured},
           {"verdict", to_string(r.verdict)},
           {"tightness", r.tightness}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const AuditSummary& s) {
    json claims = json::array();
    for (const ClaimSummary& cs : s.claims) {
        json c{{"claim", cs.claim_id},
               {"cases", cs.cases},
               {"holds", cs.holds},
               {"violations", cs.violations},
               {"gating_violations", cs.gating_violations},
               {"hypothesis_unmet", cs.hypothesis_unmet},
               {"max_tightness_holding", cs.max_tightness_holding}};
        c["violated"] = cs.violated_keys;
        claims.push_back(c);
    }
    return json{{"claims", claims},
                {"total_cases", s.total_cases},
                {"total_violations", s.total_violations},
                {"gating_violations", s.total_gating_violations},
                {"printed_violations", s.total_printed_violations}};
}

/// Machine-readable envelope every CLI subcommand prints: the inputs echoed
/// back verbatim make any result reproducible.
struct ReportEnvelope {
    std::string command;
    json inputs_echo;
    json results;
    std::vector<std::string> warnings;

    json to_json() const {
        return json{{"tool_version", tool_version},
                    {"command", command},
                    {"inputs_echo", inputs_echo},
                    {"results", results},
                    {"warnings", warnings}};
    }

    std::string dump() const { return to_json().dump(2) + "\n"; }
};

} // namespace hhcert
