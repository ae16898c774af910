#include "hololab/json_io.hpp"

#include <limits>

namespace hololab {

Json json_int(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();
}

Json to_json(const CohomologyEntry& e) {
    Json j;
    if (e.exact()) j["exact"] = json_int(e.lower);
    else j["interval"] = Json::array({json_int(e.lower), json_int(e.upper)});
    return j;
}

Json to_json(const CohomologyReport& r) {
    Json j;
    Json h = Json::object();
    for (const auto& [q, e] : r.h) h[std::to_string(q)] = to_json(e);
    j["h"] = std::move(h);
    j["euler"] = json_int(r.euler);
    j["tier"] = r.tier;
    return j;
}

Json to_json(const ModuleDecomposition& d, const LeviContext& ctx) {
    Json arr = Json::array();
    for (const auto& [w, m] : d.terms) {
        Json t;
        t["weight"] = w.coords;
        t["multiplicity"] = json_int(m);
        t["dimension"] = json_int(levi_dim(ctx, w));
        arr.push_back(std::move(t));
    }
    return arr;
}

Json to_json(const LegendreAnalysis& a) {
    Json j;
    j["dim_M"] = json_int(a.dim_m);
    j["g_ind_dim"] = to_json(a.g_ind_dim);
    j["conn_space_dim"] = to_json(a.conn_space_dim);
    j["torsion_obstruction"] = to_json(a.torsion_obstruction);
    j["curvature_space"] = to_json(a.curvature_space);
    Json higher = Json::array();
    for (const auto& lr : a.levels) {
        Json t;
        t["k"] = lr.k;
        t["report"] = to_json(lr.report);
        higher.push_back(std::move(t));
    }
    j["higher"] = std::move(higher);
    j["kmax"] = a.kmax_requested;
    j["complete"] = a.complete;
    return j;
}

Json to_json(const KodairaAnalysis& a) {
    Json j;
    j["h1_N"] = to_json(a.h1_n);
    j["obstruction1"] = to_json(a.obstruction1);
    j["obstruction2"] = to_json(a.obstruction2);
    j["g_dim"] = to_json(a.g_dim);
    j["verdict"] = a.verdict == KodairaVerdict::one_flat_structure ? "one_flat_structure"
                                                                   : "inconclusive";
    return j;
}

Json to_json(const ScreenVerdict& v) {
    Json j;
    Json c;
    c["system"] = v.candidate.system.name();
    c["weight"] = v.candidate.highest_weight.coords;
    c["marking"] = marking_string(v.candidate.marking);
    c["dim_rep"] = json_int(v.candidate.dim_rep);
    j["candidate"] = std::move(c);
    j["analysis"] = to_json(v.analysis);
    j["classification"] = to_string(v.classification);
    if (v.enlargement_target_dim) j["enlargement_target_dim"] = json_int(*v.enlargement_target_dim);
    if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
    return j;
}

Json to_json(const TableRow& r) {
    Json j;
    j["group"] = r.group;
    j["printed_label"] = r.printed_label;
    j["translated"] = r.translated;
    j["computed_dim"] = json_int(r.computed_dim);
    j["printed_dim"] = json_int(r.printed_dim);
    j["mismatch"] = r.mismatch;
    return j;
}

}  // namespace hololab
