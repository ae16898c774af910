#include "hololab/screener.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hololab {

ParabolicMarking stabilizer_marking(RootSystem rs, const Weight& highest_weight) {
    if (!highest_weight.dominant()) throw domain_error("candidate weight must be dominant");
    std::vector<int> crossed;
    for (int i = 0; i < rs.rank; ++i)
        if (highest_weight.coords[i] != 0) crossed.push_back(i);
    if (crossed.empty()) throw domain_error("trivial representation has no stabilizer parabolic");
    return make_marking(std::move(rs), std::move(crossed));
}

Candidate make_candidate(RootSystem rs, Weight highest_weight) {
    auto marking = stabilizer_marking(rs, highest_weight);
    Int d = weyl_dim(rs, highest_weight);
    return {std::move(rs), std::move(highest_weight), std::move(marking), std::move(d)};
}

Int dim_group(const RootSystem& rs) {
    return Int(2) * static_cast<long long>(rs.positive_roots.size()) + rs.rank;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::flat_only: return "flat_only";
        case Classification::torsion_free_rigid: return "torsion_free_rigid";
        case Classification::torsion_free_with_curvature: return "torsion_free_with_curvature";
        case Classification::very_little_torsion_candidate: return "very_little_torsion_candidate";
        case Classification::enlargement: return "enlargement";
        case Classification::undecided: return "undecided";
    }
    return "undecided";
}

namespace {

bool exact_zero(const CohomologyEntry& e) { return e.exact() && e.lower == 0; }
bool exact_positive(const CohomologyEntry& e) { return e.exact() && e.lower > 0; }

Classification classify(const ScreenVerdict& v, int kmax) {
    const auto& a = v.analysis;
    if (!a.complete || static_cast<int>(a.levels.size()) < std::min(kmax, 3))
        return Classification::undecided;

    // classification consumes exact entries only; intervals stay undecided
    if (a.g_ind_dim.exact() && a.g_ind_dim.lower > dim_group(v.candidate.system) + 1)
        return Classification::enlargement;

    bool all_h1_known = true, all_h1_zero = true;
    for (const auto& lr : a.levels) {
        auto h1 = lr.report.at(1);
        if (!h1.exact()) all_h1_known = false;
        else if (h1.lower != 0) all_h1_zero = false;
    }
    if (all_h1_known && all_h1_zero) return Classification::flat_only;

    if (exact_positive(a.torsion_obstruction)) return Classification::very_little_torsion_candidate;
    if (!exact_zero(a.torsion_obstruction)) return Classification::undecided;
    if (exact_positive(a.curvature_space)) return Classification::torsion_free_with_curvature;
    if (!exact_zero(a.curvature_space)) return Classification::undecided;
    if (a.conn_space_dim.exact() && a.conn_space_dim.lower == 0)
        return Classification::torsion_free_rigid;
    return Classification::undecided;
}

}  // namespace

ScreenVerdict screen(const Candidate& c, int kmax, const Budget& budget) {
    ScreenVerdict v;
    v.candidate = c;
    try {
        auto datum = make_datum(c.marking, c.highest_weight);
        v.analysis = legendre_analyze(datum, kmax, budget);
        v.classification = classify(v, kmax);
        if (v.classification == Classification::enlargement)
            v.enlargement_target_dim = v.analysis.g_ind_dim.lower;
    } catch (const std::exception& e) {
        v.classification = Classification::undecided;
        v.diagnostic = e.what();
    }
    return v;
}

std::vector<TableRow> table_dims() {
    std::vector<TableRow> rows;
    auto simple_dim = [](const std::string& sys, std::vector<long long> w) {
        auto rs = parse_root_system(sys);
        return weyl_dim(rs, Weight(std::move(w)));
    };
    // SL(2) family at the smallest printed parameter k = 4
    {
        TableRow r;
        r.group = "SL(2,C)";
        r.printed_label = "k (k>=4), shown at k=4";
        r.translated = "A1 [4]";
        r.computed_dim = simple_dim("A1", {4});
        r.printed_dim = 10;  // k(k+1)/2 at k=4
        r.mismatch = r.computed_dim != r.printed_dim;
        rows.push_back(r);
    }
    // SL(2)xSL(2) rows at k = 2; exterior tensor dimension is the product
    {
        TableRow r;
        r.group = "SL(2,C)xSL(2,C)";
        r.printed_label = "1(x)k (k>=2), dim 2k+2, shown at k=2";
        r.translated = "A1 [1] x A1 [2]";
        r.computed_dim = simple_dim("A1", {1}) * simple_dim("A1", {2});
        r.printed_dim = 6;
        r.mismatch = r.computed_dim != r.printed_dim;
        rows.push_back(r);
        r.printed_label = "1(x)k (k>=2), dim 3k+3, shown at k=2";
        r.printed_dim = 9;
        r.computed_dim = simple_dim("A1", {1}) * simple_dim("A1", {2});
        r.mismatch = r.computed_dim != r.printed_dim;
        rows.push_back(r);
    }
    auto push = [&](std::string group, std::string label, std::string sys,
                    std::vector<long long> w, long long printed) {
        TableRow r;
        r.group = std::move(group);
        r.printed_label = std::move(label);
        r.translated = sys + " " + to_string(Weight(w));
        r.computed_dim = simple_dim(sys, w);
        r.printed_dim = printed;
        r.mismatch = r.computed_dim != r.printed_dim;
        rows.push_back(r);
    };
    push("SL(3,C)", "1-1", "A2", {1, 1}, 8);
    push("SL(3,C)", "1-2", "A2", {1, 2}, 15);
    push("Sp(4,C)", "1=1", "C2", {1, 1}, 16);
    push("Sp(4,C)", "2=0", "C2", {0, 2}, 14);  // long-root node under our numbering
    push("Sp(4,C)", "3=0", "C2", {0, 3}, 30);
    push("G2", "0#2", "G2", {2, 0}, 27);  // multiples of the 7-dim fundamental
    push("G2", "0#3", "G2", {3, 0}, 77);
    return rows;
}

std::vector<ScreenVerdict> sweep(int max_rank, int max_level, int kmax, int jobs,
                                 const Budget& budget) {
    if (max_rank < 1 || max_level < 1) throw domain_error("sweep bounds must be positive");
    if (jobs < 1) jobs = 1;

    std::vector<Candidate> candidates;
    std::vector<RootSystem> systems;
    for (int r = 1; r <= max_rank; ++r) systems.push_back(build_root_system(Series::A, r));
    for (int r = 2; r <= max_rank; ++r) systems.push_back(build_root_system(Series::B, r));
    for (int r = 2; r <= max_rank; ++r) systems.push_back(build_root_system(Series::C, r));
    for (int r = 3; r <= max_rank; ++r) systems.push_back(build_root_system(Series::D, r));
    if (max_rank >= 2) systems.push_back(build_root_system(Series::G, 2));

    for (const auto& rs : systems) {
        std::vector<std::vector<long long>> weights;
        // all coordinate vectors with sum in [1, max_level], lexicographic
        std::vector<long long> cur(rs.rank, 0);
        auto rec = [&](auto&& self, int pos, int budget_left) -> void {
            if (pos == rs.rank) {
                if (budget_left < max_level) weights.push_back(cur);
                return;
            }
            for (int c = 0; c <= budget_left; ++c) {
                cur[pos] = c;
                self(self, pos + 1, budget_left - c);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, max_level);
        std::sort(weights.begin(), weights.end());
        for (auto& w : weights) candidates.push_back(make_candidate(rs, Weight(w)));
    }

    std::vector<ScreenVerdict> out(candidates.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= candidates.size()) return;
            out[i] = screen(candidates[i], kmax, budget);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace hololab
