#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hololab/json_io.hpp"
#include "hololab/screener.hpp"

using namespace hololab;

TEST_CASE("stabilizer marking is the support of the weight") {
    auto a1 = parse_root_system("A1");
    CHECK(marking_string(stabilizer_marking(a1, Weight({3}))) == "x");
    auto cn = parse_root_system("C3");
    CHECK(marking_string(stabilizer_marking(cn, Weight({1, 0, 0}))) == "xoo");
    auto g2 = parse_root_system("G2");
    CHECK(marking_string(stabilizer_marking(g2, Weight({1, 0}))) == "xo");
    CHECK_THROWS_AS(stabilizer_marking(g2, Weight({0, 0})), domain_error);
    CHECK_THROWS_AS(stabilizer_marking(g2, Weight({-1, 0})), domain_error);

    // scaling invariance: the marking depends only on the support
    auto b3 = parse_root_system("B3");
    for (long long s = 1; s <= 5; ++s)
        CHECK(marking_string(stabilizer_marking(b3, Weight({2 * s, 0, s}))) ==
              marking_string(stabilizer_marking(b3, Weight({2, 0, 1}))));
}

TEST_CASE("dim_group") {
    CHECK(dim_group(parse_root_system("A1")) == 3);
    CHECK(dim_group(parse_root_system("A3")) == 15);
    CHECK(dim_group(parse_root_system("B3")) == 21);
    CHECK(dim_group(parse_root_system("C2")) == 10);
    CHECK(dim_group(parse_root_system("G2")) == 14);
}

TEST_CASE("candidate bookkeeping") {
    auto c = make_candidate(parse_root_system("A2"), Weight({1, 1}));
    CHECK(c.dim_rep == 8);
    CHECK(marking_string(c.marking) == "xx");
}

TEST_CASE("enlargement verdicts") {
    for (int n : {2, 3}) {
        auto rs = parse_root_system("C" + std::to_string(n));
        std::vector<long long> w(n, 0);
        w[0] = 1;
        auto v = screen(make_candidate(rs, Weight(w)), 3);
        CHECK(v.classification == Classification::enlargement);
        REQUIRE(v.enlargement_target_dim.has_value());
        CHECK(*v.enlargement_target_dim == 4 * n * n);
    }
    auto vg = screen(make_candidate(parse_root_system("G2"), Weight({1, 0})), 3);
    CHECK(vg.classification == Classification::enlargement);
    REQUIRE(vg.enlargement_target_dim.has_value());
    CHECK(*vg.enlargement_target_dim == 22);

    auto vs = screen(make_candidate(parse_root_system("B3"), Weight({0, 0, 1})), 3);
    CHECK(vs.classification == Classification::enlargement);
    REQUIRE(vs.enlargement_target_dim.has_value());
    CHECK(*vs.enlargement_target_dim == 29);
}

TEST_CASE("flat and curved verdicts") {
    auto vb = screen(make_candidate(parse_root_system("A1"), Weight({3})), 3);
    CHECK(vb.classification == Classification::torsion_free_with_curvature);

    for (int m = 2; m <= 6; ++m) {
        auto rs = parse_root_system("A" + std::to_string(m - 1));
        std::vector<long long> w(m - 1, 0);
        w[0] = 1;
        auto v = screen(make_candidate(rs, Weight(w)), 3);
        CHECK(v.classification == Classification::flat_only);
    }
}

TEST_CASE("interval entries never collapse to a classification") {
    // Veronese-type candidates produce tier-1 intervals at k >= 2
    auto v = screen(make_candidate(parse_root_system("A2"), Weight({0, 2})), 3);
    CHECK(v.classification == Classification::undecided);
    bool some_interval = false;
    for (const auto& lr : v.analysis.levels)
        for (const auto& [q, e] : lr.report.h) some_interval = some_interval || !e.exact();
    CHECK(some_interval);
}

TEST_CASE("holonomy table rows") {
    auto rows = table_dims();
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].computed_dim == 5);
    CHECK(rows[0].printed_dim == 10);
    CHECK(rows[0].mismatch);
    CHECK(rows[1].computed_dim == 6);
    CHECK(!rows[1].mismatch);
    CHECK(rows[2].computed_dim == 6);
    CHECK(rows[2].printed_dim == 9);
    CHECK(rows[2].mismatch);
    long long expect[] = {8, 15, 16, 14, 30, 27, 77};
    for (int i = 0; i < 7; ++i) {
        CHECK(rows[3 + i].computed_dim == expect[i]);
        CHECK(rows[3 + i].printed_dim == expect[i]);
        CHECK(!rows[3 + i].mismatch);
    }
}

TEST_CASE("sweep determinism and contents") {
    auto one = sweep(2, 3, 3, 1);
    auto four = sweep(2, 3, 3, 4);
    REQUIRE(one.size() == four.size());
    std::ostringstream s1, s4;
    for (const auto& v : one) s1 << to_json(v).dump() << "\n";
    for (const auto& v : four) s4 << to_json(v).dump() << "\n";
    CHECK(s1.str() == s4.str());

    bool found_bryant = false, found_adjoint = false;
    for (const auto& v : sweep(1, 4, 3, 2)) {
        if (v.candidate.system.name() == "A1" && v.candidate.highest_weight == Weight({3})) {
            found_bryant = true;
            CHECK(v.classification == Classification::torsion_free_with_curvature);
        }
    }
    for (const auto& v : one)
        if (v.candidate.system.name() == "A2" && v.candidate.highest_weight == Weight({1, 1})) {
            found_adjoint = true;
            CHECK(v.candidate.dim_rep == 8);
        }
    CHECK(found_bryant);
    CHECK(found_adjoint);
}

TEST_CASE("sweep records failures in place") {
    Budget tiny;
    tiny.max_fiber_dim = 2;
    auto out = sweep(1, 3, 3, 2, tiny);
    CHECK(!out.empty());
    for (const auto& v : out) {
        CHECK(v.classification == Classification::undecided);
        CHECK(!v.analysis.complete);
    }
}
