#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity.hpp"

namespace schubert {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "schubert-rigidity-report/1";

namespace detail {

inline json pair_json(int x, int y) { return json::array({x, y}); }

inline json node_json(const InductionNode& n) {
    json j{{"partition", to_string(n.partition)},
           {"role", to_string(n.role)},
           {"status", to_string(n.status)},
           {"note", n.note},
           {"projected_vanishing", n.projected_vanishing ? json(*n.projected_vanishing) : json(nullptr)},
           {"projection_note", n.projection_note},
           {"children", json::array()}};
    for (auto& c : n.children) j["children"].push_back(node_json(c));
    return j;
}

template <class T, class F>
json opt(const std::optional<T>& x, F f) {
    return x ? f(*x) : json(nullptr);
}

} // namespace detail

inline json component_json(const ComplementComponent& c) {
    return json{{"kind", to_string(c.kind)},
                {"piece", to_string(c.piece)},
                {"source", detail::pair_json(c.j, c.b)},
                {"target", detail::pair_json(c.i, c.a)},
                {"dim", c.dim}};
}

inline json to_json(const RigidityReport& r) {
    json j;
    j["schema_version"] = schema_version;
    j["partition"] = to_string(r.a);
    j["ambient"] = {{"m", r.a.m()}, {"n", r.a.n()}};
    j["parts"] = r.a.parts();
    j["codim"] = codim(r.a);
    j["exp_form"] = to_string(r.exp_a);
    j["exp_form_conjugate"] = to_string(r.exp_conj);
    j["verdict"] = to_string(r.kind);
    j["trivial_reason"] = r.trivial_reason.empty() ? json(nullptr) : json(r.trivial_reason);
    j["theorem_condition"] = r.kind == VerdictKind::Trivial ? json(nullptr) : json(r.theorem_verdict);
    j["h11_dim"] = detail::opt(r.h11_dim, [](long long d) { return json(d); });
    j["strong_rigidity"] = r.h11_dim ? json(*r.h11_dim == 0 ? "H11 vanishes; integrability not evaluated"
                                                           : "H11 nonzero; integrability not evaluated")
                                     : json(nullptr);
    j["certificates"] = json::array();
    for (auto& c : r.certificates) {
        json cj = component_json(c.component);
        cj["in_Ia"] = c.in_Ia;
        j["certificates"].push_back(cj);
    }
    j["equality"] = detail::opt(r.equality, [](const TangentComparison& t) {
        return json{{"verdict", to_string(t.verdict)}, {"dim_Ta", t.dim_ta}, {"dim_ma", t.dim_ma}, {"gap", t.gap()}};
    });
    j["exception_boxes"] = json::array();
    for (auto [i, al] : r.exception_boxes) j["exception_boxes"].push_back(detail::pair_json(i, al));
    j["audit"] = detail::opt(r.audit, [](const AuditReport& a) {
        return json{{"hom_dim", a.hom_dim},
                    {"ma_dim", a.ma_dim},
                    {"component_dims", a.generated_dims},
                    {"missing", a.missing},
                    {"ok", a.ok()}};
    });
    j["induction_trace"] = detail::opt(r.trace, [](const InductionNode& n) { return detail::node_json(n); });
    j["trace_status"] = r.trace_note.empty() ? json(nullptr) : json(r.trace_note);
    j["smoothness"] = detail::opt(r.smoothness, [](const SmoothClass& s) {
        return json{{"class", s.smooth ? "Smooth" : "Singular"},
                    {"p", s.smooth ? json(s.p) : json(nullptr)},
                    {"q", s.smooth ? json(s.q) : json(nullptr)}};
    });
    j["smoothable"] = r.smoothable;
    j["problems"] = r.problems;
    return j;
}

// --- text ----------------------------------------------------------------------------

namespace detail {

inline void node_text(std::ostringstream& os, const InductionNode& n, int depth) {
    os << std::string(static_cast<std::size_t>(2 * depth + 2), ' ') << to_string(n.role) << ' '
       << to_string(n.partition) << " [" << to_string(n.status) << "]";
    if (!n.note.empty()) os << ' ' << n.note;
    if (n.projected_vanishing) os << "; projected_vanishing " << (*n.projected_vanishing ? "true" : "false");
    if (!n.projection_note.empty()) os << " (" << n.projection_note << ")";
    os << "\n";
    for (auto& c : n.children) node_text(os, c, depth + 1);
}

inline std::string text_value(const json& v) {
    if (v.is_null()) return "n/a";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace detail

/// Text rendering. Every top-level JSON key appears as a "key:" label.
inline std::string to_text(const RigidityReport& r) {
    json j = to_json(r);
    std::ostringstream os;
    for (auto& [key, v] : j.items()) {
        if (key == "certificates") {
            os << "certificates: " << v.size() << "\n";
            for (auto& c : v)
                os << "  " << c["kind"].get<std::string>() << ' ' << c["piece"].get<std::string>() << ' '
                   << c["source"].dump() << " -> " << c["target"].dump() << " dim " << c["dim"].dump()
                   << " in_Ia " << (c["in_Ia"].get<bool>() ? "true" : "false") << "\n";
        } else if (key == "induction_trace") {
            os << "induction_trace:" << (r.trace ? "" : " n/a") << "\n";
            if (r.trace) detail::node_text(os, *r.trace, 0);
        } else if (key == "equality" && !v.is_null()) {
            os << "equality: " << v["verdict"].get<std::string>() << " (dim_Ta " << v["dim_Ta"].dump() << ", dim_ma "
               << v["dim_ma"].dump() << ", gap " << v["gap"].dump() << ")\n";
        } else if (key == "audit" && !v.is_null()) {
            os << "audit: " << (v["ok"].get<bool>() ? "ok" : "FAILED") << " (hom_dim " << v["hom_dim"].dump()
               << " = ma_dim " << v["ma_dim"].dump() << " + components " << v["component_dims"].dump() << ")\n";
        } else if (key == "smoothness" && !v.is_null()) {
            os << "smoothness: " << to_string(*r.smoothness) << "\n";
        } else if (key == "problems") {
            os << "problems:" << (v.empty() ? " none" : "") << "\n";
            for (auto& p : v) os << "  " << p.get<std::string>() << "\n";
        } else {
            os << key << ": " << detail::text_value(v) << "\n";
        }
    }
    return os.str();
}

// --- schema -----------------------------------------------------------------------

namespace detail {

inline json type_of(std::initializer_list<const char*> types) {
    if (types.size() == 1) return json{{"type", *types.begin()}};
    json arr = json::array();
    for (auto t : types) arr.push_back(t);
    return json{{"type", arr}};
}

inline json object_of(json props) {
    json req = json::array();
    for (auto& [k, v] : props.items()) req.push_back(k);
    return json{{"type", "object"}, {"required", req}, {"properties", props}, {"additionalProperties", false}};
}

inline json int_pair() {
    return json{{"type", "array"}, {"items", {{"type", "integer"}}}, {"minItems", 2}, {"maxItems", 2}};
}

inline json node_schema() {
    json props{{"partition", type_of({"string"})},
               {"role", {{"enum", {"root", "foliation_b", "leaf_space_c", "rectangle_b", "reduced_d"}}}},
               {"status", {{"enum", {"reduced", "base", "smooth", "leaf", "hypothesis-fails"}}}},
               {"note", type_of({"string"})},
               {"projected_vanishing", type_of({"boolean", "null"})},
               {"projection_note", type_of({"string"})},
               {"children", {{"type", "array"}, {"items", {{"$ref", "#/definitions/node"}}}}}};
    return object_of(props);
}

} // namespace detail

/// Field-by-field schema of a serialized report, in JSON Schema form.
inline json report_schema() {
    using detail::object_of;
    using detail::type_of;
    json cert = object_of({{"kind", {{"enum", {"Type1", "Type2", "Type3"}}}},
                           {"piece", {{"enum", {"whole", "sl(Q)", "sl(E)", "Id(Q)", "Id(E)"}}}},
                           {"source", detail::int_pair()},
                           {"target", detail::int_pair()},
                           {"dim", type_of({"integer"})},
                           {"in_Ia", type_of({"boolean"})}});
    json equality = object_of({{"verdict", {{"enum", {"Equal", "ProperInclusion"}}}},
                               {"dim_Ta", type_of({"integer"})},
                               {"dim_ma", type_of({"integer"})},
                               {"gap", type_of({"integer"})}});
    equality["type"] = {"object", "null"};
    json audit = object_of({{"hom_dim", type_of({"integer"})},
                            {"ma_dim", type_of({"integer"})},
                            {"component_dims", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
                            {"missing", type_of({"integer"})},
                            {"ok", type_of({"boolean"})}});
    audit["type"] = {"object", "null"};
    json smooth = object_of({{"class", {{"enum", {"Smooth", "Singular"}}}},
                             {"p", type_of({"integer", "null"})},
                             {"q", type_of({"integer", "null"})}});
    smooth["type"] = {"object", "null"};

    json props{
        {"schema_version", {{"const", schema_version}}},
        {"partition", type_of({"string"})},
        {"ambient", object_of({{"m", type_of({"integer"})}, {"n", type_of({"integer"})}})},
        {"parts", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
        {"codim", type_of({"integer"})},
        {"exp_form", type_of({"string"})},
        {"exp_form_conjugate", type_of({"string"})},
        {"verdict", {{"enum", {"SchurRigid", "NotCertified", "Trivial", "Skipped", "ConsistencyFailure"}}}},
        {"trivial_reason", type_of({"string", "null"})},
        {"theorem_condition", type_of({"boolean", "null"})},
        {"h11_dim", type_of({"integer", "null"})},
        {"strong_rigidity", type_of({"string", "null"})},
        {"certificates", {{"type", "array"}, {"items", cert}}},
        {"equality", equality},
        {"exception_boxes", {{"type", "array"}, {"items", detail::int_pair()}}},
        {"audit", audit},
        {"induction_trace", {{"oneOf", {{{"type", "null"}}, {{"$ref", "#/definitions/node"}}}}}},
        {"trace_status", type_of({"string", "null"})},
        {"smoothness", smooth},
        {"smoothable", {{"enum", {"smooth", "not smoothable", "not evaluated"}}}},
        {"problems", {{"type", "array"}, {"items", {{"type", "string"}}}}}};
    json s = object_of(props);
    json out{{"$schema", "http://json-schema.org/draft-07/schema#"},
             {"title", "Schubert rigidity report"},
             {"version", schema_version}};
    for (auto& [k, v] : s.items()) out[k] = v;
    out["definitions"] = {{"node", detail::node_schema()}};
    return out;
}

/// A survey is an array of reports.
inline json survey_schema() {
    json report = report_schema();
    json defs = report["definitions"];
    report.erase("definitions");
    report.erase("$schema");
    return json{{"$schema", "http://json-schema.org/draft-07/schema#"},
                {"title", "Schubert rigidity survey"},
                {"version", schema_version},
                {"type", "array"},
                {"items", report},
                {"definitions", defs}};
}

} // namespace schubert
