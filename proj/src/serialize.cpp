#include "chromspec/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace chromspec::io {

json real_number(double v) {
    if (!std::isfinite(v)) throw ValidationError("non-finite value in output document");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return json(std::strtod(buf, nullptr));
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string format_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

json to_json(const linalg::Spectrum& s) {
    json values = json::array();
    for (double v : s.values()) values.push_back(real_number(v));
    return json{{"values", values}, {"residual", real_number(s.residual())}};
}

json to_json(const coloring::ChiResult& r) {
    json out;
    if (r.status == coloring::SolveStatus::exact) {
        out["status"] = "exact";
        out["value"] = r.chi;
        out["witness"] = r.witness.color_of;
    } else {
        out["status"] = "unknown";
        out["lower"] = r.lower;
        out["upper"] = r.upper;
    }
    out["nodes"] = r.nodes;
    return out;
}

json to_json(const coloring::AlphaResult& r) {
    json out;
    if (r.status == coloring::SolveStatus::exact) {
        out["status"] = "exact";
        out["value"] = r.alpha;
        out["witness"] = r.witness;
    } else {
        out["status"] = "unknown";
        out["lower"] = r.lower;
        out["upper"] = r.upper;
    }
    out["nodes"] = r.nodes;
    return out;
}

json to_json(const coloring::EqualityReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pair_results) {
        json pair{{"class_a", p.class_a},
                  {"class_b", p.class_b},
                  {"regular", p.regular},
                  {"target_degree", real_number(p.target_degree)}};
        pair["violating_vertex"] =
            p.violating_vertex ? json(*p.violating_vertex) : json(nullptr);
        pairs.push_back(std::move(pair));
    }
    return json{{"tau", real_number(r.tau)},
                {"tau_is_integer", r.tau_is_integer},
                {"pair_results", pairs},
                {"characterization_holds", r.characterization_holds}};
}

json to_json(const bounds::BoundReport& r) {
    json out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["connected"] = r.connected;
    out["bounds_defined"] = r.bounds_defined;
    out["mu_a"] = real_number(r.mu_a);
    out["mu_min_a"] = real_number(r.mu_min_a);
    out["mu_l"] = real_number(r.mu_l);
    if (r.bounds_defined) {
        out["hoffman"] = real_number(r.hoffman);
        out["hoffman_ceil"] = r.hoffman_ceil;
        out["nikiforov"] = real_number(r.nikiforov);
        out["nikiforov_ceil"] = r.nikiforov_ceil;
    } else {
        out["hoffman"] = nullptr;
        out["hoffman_ceil"] = nullptr;
        out["nikiforov"] = nullptr;
        out["nikiforov_ceil"] = nullptr;
    }
    out["chi"] = r.chi ? to_json(*r.chi) : json(nullptr);
    out["alpha"] = r.alpha ? to_json(*r.alpha) : json(nullptr);
    out["ratio_bound"] = r.ratio_bound ? real_number(*r.ratio_bound) : json(nullptr);
    out["equality"] = r.equality ? to_json(*r.equality) : json(nullptr);
    return out;
}

json to_json(const harness::InstanceTags& t) {
    return json{{"family", std::string(harness::family_name(t.family))},
                {"r", t.r},
                {"block_sizes", t.block_sizes},
                {"b_is_zero", t.b_is_zero},
                {"b_is_rowsum_diagonal", t.b_is_rowsum_diagonal},
                {"bipartite_support", t.bipartite_support}};
}

json to_json(const harness::Record& r) {
    json out{{"trial", r.trial},
             {"digest", r.digest},
             {"gap", real_number(r.gap)},
             {"tags", to_json(r.tags)}};
    if (r.tau) out["tau"] = real_number(*r.tau);
    if (r.characterization_holds) out["characterization_holds"] = *r.characterization_holds;
    return out;
}

json to_json(const harness::FuzzSummary& s) {
    json violations = json::array();
    for (const auto& r : s.violations) violations.push_back(to_json(r));
    json near = json::array();
    for (const auto& r : s.near_equality) near.push_back(to_json(r));
    return json{{"target", s.target},
                {"trials_run", s.trials_run},
                {"violation_count", s.violation_count},
                {"violations", violations},
                {"min_gap", s.min_gap ? real_number(*s.min_gap) : json(nullptr)},
                {"near_equality_count", s.near_equality_count},
                {"near_equality", near},
                {"max_records", s.max_records}};
}

} // namespace chromspec::io
