#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "hololab/repthy.hpp"

using namespace hololab;

namespace {

std::vector<RootSystem> systems_up_to(int max_rank) {
    std::vector<RootSystem> out;
    for (int r = 1; r <= max_rank; ++r) out.push_back(build_root_system(Series::A, r));
    for (int r = 2; r <= max_rank; ++r) out.push_back(build_root_system(Series::B, r));
    for (int r = 2; r <= max_rank; ++r) out.push_back(build_root_system(Series::C, r));
    for (int r = 3; r <= max_rank; ++r) out.push_back(build_root_system(Series::D, r));
    if (max_rank >= 2) out.push_back(build_root_system(Series::G, 2));
    return out;
}

std::vector<Weight> dominant_weights(int rank, int max_sum, bool include_zero = false) {
    std::vector<Weight> out;
    std::vector<long long> cur(rank, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == rank) {
            if (include_zero || left < max_sum) out.emplace_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[pos] = c;
            rec(pos + 1, left - c);
        }
        cur[pos] = 0;
    };
    rec(0, max_sum);
    return out;
}

}  // namespace

TEST_CASE("Weyl dimensions of the table representations") {
    CHECK(weyl_dim(parse_root_system("A2"), Weight({1, 1})) == 8);
    CHECK(weyl_dim(parse_root_system("A2"), Weight({1, 2})) == 15);
    CHECK(weyl_dim(parse_root_system("C2"), Weight({1, 1})) == 16);
    CHECK(weyl_dim(parse_root_system("C2"), Weight({0, 2})) == 14);
    CHECK(weyl_dim(parse_root_system("C2"), Weight({0, 3})) == 30);
    CHECK(weyl_dim(parse_root_system("G2"), Weight({2, 0})) == 27);
    CHECK(weyl_dim(parse_root_system("G2"), Weight({3, 0})) == 77);
    CHECK(weyl_dim(parse_root_system("G2"), Weight({1, 0})) == 7);
    CHECK(weyl_dim(parse_root_system("G2"), Weight({0, 1})) == 14);
    CHECK(weyl_dim(parse_root_system("B3"), Weight({0, 0, 1})) == 8);
    CHECK(weyl_dim(parse_root_system("D4"), Weight({0, 0, 0, 0})) == 1);
    CHECK_THROWS_AS(weyl_dim(parse_root_system("A2"), Weight({-1, 0})), domain_error);
}

TEST_CASE("levi_dim examples") {
    auto a2 = parse_root_system("A2");
    CHECK(levi_dim(make_levi(a2, {1}), Weight({-2, 1})) == 2);
    auto a3 = parse_root_system("A3");
    for (long long k : {-3, 0, 5})
        CHECK(levi_dim(make_levi(a3, {1, 2}), Weight({k, 1, 0})) == 3);
    CHECK(levi_dim(full_context(a2), Weight({0, 0})) == 1);
}

TEST_CASE("weight multisets: size, invariance, adjoint example") {
    auto a2 = parse_root_system("A2");
    auto ctx = full_context(a2);
    auto adj = weight_multiset(ctx, Weight({1, 1}));
    Int total = 0;
    for (const auto& [w, m] : adj) total += m;
    CHECK(total == 8);
    CHECK(adj.at({0, 0}) == 2);
    CHECK(adj.at({1, 1}) == 1);
    CHECK(adj.at({-1, 2}) == 1);
    CHECK(adj.at({2, -1}) == 1);

    auto a1 = parse_root_system("A1");
    auto m1 = weight_multiset(full_context(a1), Weight({2}));
    CHECK(m1.size() == 3);
    CHECK(m1.at({2}) == 1);
    CHECK(m1.at({0}) == 1);
    CHECK(m1.at({-2}) == 1);

    // size equals levi_dim and the multiset is Weyl-invariant
    for (const auto& rs : systems_up_to(3)) {
        auto full = full_context(rs);
        for (const auto& w : dominant_weights(rs.rank, 2)) {
            auto ms = weight_multiset(full, w);
            Int count = 0;
            for (const auto& [lam, m] : ms) count += m;
            CHECK(count == weyl_dim(rs, w));
            for (const auto& [lam, m] : ms)
                for (int i = 0; i < rs.rank; ++i) {
                    auto refl = simple_reflection(rs, Weight(lam), i);
                    CHECK(ms.at(refl.coords) == m);
                }
        }
    }
}

TEST_CASE("tensor decompositions: examples and conservation") {
    auto a1 = parse_root_system("A1");
    auto ctx1 = full_context(a1);
    auto cg = tensor_decompose(ctx1, Weight({1}), Weight({1}));
    REQUIRE(cg.terms.size() == 2);
    CHECK(cg.terms[0].first == Weight({0}));
    CHECK(cg.terms[1].first == Weight({2}));

    auto a2 = parse_root_system("A2");
    auto ctx2 = full_context(a2);
    auto ad = tensor_decompose(ctx2, Weight({1, 0}), Weight({0, 1}));
    REQUIRE(ad.terms.size() == 2);
    CHECK(ad.terms[0].first == Weight({0, 0}));
    CHECK(ad.terms[1].first == Weight({1, 1}));

    for (const auto& rs : systems_up_to(3)) {
        auto full = full_context(rs);
        auto ws = dominant_weights(rs.rank, 2, true);
        for (const auto& v : ws)
            for (const auto& w : ws) {
                Int lhs = weyl_dim(rs, v) * weyl_dim(rs, w);
                if (lhs > 5000) continue;  // stays inside the default budget
                auto dec = tensor_decompose(full, v, w);
                CHECK(dec.total_dimension(full) == lhs);
                // unit and commutativity
                if (w.is_zero()) {
                    REQUIRE(dec.terms.size() == 1);
                    CHECK(dec.terms[0].first == v);
                    CHECK(dec.terms[0].second == 1);
                }
                auto rev = tensor_decompose(full, w, v);
                CHECK(dec.terms == rev.terms);
            }
    }
}

TEST_CASE("symmetric powers: examples and binomial conservation") {
    auto a1 = parse_root_system("A1");
    auto ctx1 = full_context(a1);
    auto s2 = sym_power(ctx1, Weight({1}), 2);
    REQUIRE(s2.terms.size() == 1);
    CHECK(s2.terms[0].first == Weight({2}));
    auto s22 = sym_power(ctx1, Weight({2}), 2);
    REQUIRE(s22.terms.size() == 2);
    CHECK(s22.terms[0].first == Weight({0}));
    CHECK(s22.terms[1].first == Weight({4}));
    auto s3 = sym_power(ctx1, Weight({1}), 3);
    REQUIRE(s3.terms.size() == 1);
    CHECK(s3.terms[0].first == Weight({3}));

    auto binom = [](Int n, int k) {
        Int r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (const auto& rs : systems_up_to(3)) {
        auto full = full_context(rs);
        for (const auto& v : dominant_weights(rs.rank, 2)) {
            Int d = weyl_dim(rs, v);
            for (int k = 1; k <= 3; ++k) {
                if (binom(d + k - 1, k) > 5000) continue;
                auto dec = sym_power(full, v, k);
                CHECK(dec.total_dimension(full) == binom(d + k - 1, k));
                if (k == 1) {
                    REQUIRE(dec.terms.size() == 1);
                    CHECK(dec.terms[0].first == v);
                    CHECK(dec.terms[0].second == 1);
                }
            }
        }
    }
}

TEST_CASE("duals: involution, examples, dimension preservation") {
    auto a2 = parse_root_system("A2");
    CHECK(dual_weight(a2, Weight({1, 0})) == Weight({0, 1}));
    auto a1 = parse_root_system("A1");
    CHECK(dual_weight(a1, Weight({5})) == Weight({5}));
    auto c2 = parse_root_system("C2");
    for (const auto& w : dominant_weights(2, 4, true)) CHECK(dual_weight(c2, w) == w);

    for (const auto& rs : systems_up_to(4)) {
        for (const auto& w : dominant_weights(rs.rank, rs.rank <= 3 ? 4 : 3, true)) {
            auto d = dual_weight(rs, w);
            CHECK(dual_weight(rs, d) == w);
            CHECK(weyl_dim(rs, d) == weyl_dim(rs, w));
        }
    }
}

TEST_CASE("levi duals on a proper parabolic") {
    auto a2 = parse_root_system("A2");
    auto ctx = make_levi(a2, {1});  // node 1 crossed
    // the rank-2 cotangent piece dualizes within the A1 Levi
    Weight w({-2, 1});
    auto d = levi_dual_weight(ctx, w);
    CHECK(levi_dual_weight(ctx, d) == w);
    CHECK(levi_dim(ctx, d) == levi_dim(ctx, w));
    // fully crossed Levi: dual is plain negation
    auto all = make_levi(a2, {});
    CHECK(levi_dual_weight(all, Weight({2, 3})) == Weight({-2, -3}));
}

TEST_CASE("budget violations are clean resource errors") {
    auto a2 = parse_root_system("A2");
    auto full = full_context(a2);
    CHECK_THROWS_AS(sym_power(full, Weight({1, 0}), 7), budget_error);
    CHECK_THROWS_AS(tensor_decompose(full, Weight({6, 6}), Weight({6, 6})), budget_error);
    Budget tight;
    tight.max_fiber_dim = 10;
    CHECK_THROWS_AS(tensor_decompose(full, Weight({1, 1}), Weight({1, 1}), tight), budget_error);
}

TEST_CASE("preconditions are rejected") {
    auto a2 = parse_root_system("A2");
    auto full = full_context(a2);
    CHECK_THROWS_AS(tensor_decompose(full, Weight({-1, 0}), Weight({1, 0})), domain_error);
    CHECK_THROWS_AS(sym_power(full, Weight({0, -2}), 2), domain_error);
    CHECK_THROWS_AS(dual_weight(a2, Weight({0, -1})), domain_error);
    CHECK_THROWS_AS(weight_multiset(full, Weight({-1, -1})), domain_error);
}
