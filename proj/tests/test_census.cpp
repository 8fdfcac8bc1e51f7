#include <catch2/catch_amalgamated.hpp>

#include <multiflag/census.hpp>

using namespace multiflag;

TEST_CASE("projective points and group enumeration") {
    CHECK(detail::projective_points(2, 2).size() == 3);
    CHECK(detail::projective_points(2, 3).size() == 4);
    CHECK(detail::projective_points(3, 2).size() == 7);
    CHECK(detail::general_linear_group(2, 2).size() == 6);
    CHECK(detail::general_linear_group(2, 3).size() == 48);
    CHECK(detail::general_linear_group(3, 2).size() == 168);
}

TEST_CASE("census (2,3,2): five orbits") {
    auto rep = run_census(2, 3, 2);
    CHECK(rep.total_configurations == 27);
    CHECK(rep.brute_force_orbits == 5);
    CHECK(rep.pipeline_orbits == 5);
    CHECK(rep.burnside_orbits == 5);
    CHECK(rep.agreement);
    // every stratum has a singleton fibre over F_2 (no K-blocks at m = 3)
    for (const auto& [p, count] : rep.per_ptype_orbits) {
        CHECK(p.K.empty());
        CHECK(count == 1);
    }
    CHECK(rep.per_ptype_orbits.size() == 5);
}

TEST_CASE("census (2,4,2): fourteen orbits") {
    auto rep = run_census(2, 4, 2);
    CHECK(rep.total_configurations == 81);
    CHECK(rep.brute_force_orbits == 14);
    CHECK(rep.pipeline_orbits == 14);
    CHECK(rep.burnside_orbits == 14);
    CHECK(rep.agreement);
}

TEST_CASE("census (2,4,3): fifteen orbits") {
    auto rep = run_census(2, 4, 3);
    CHECK(rep.total_configurations == 256);
    CHECK(rep.brute_force_orbits == 15);
    CHECK(rep.pipeline_orbits == 15);
    CHECK(rep.burnside_orbits == 15);
    CHECK(rep.agreement);
}

TEST_CASE("fibre censuses") {
    PType p_g;
    p_g.K.emplace_back(std::set<int>{1, 2, 3, 4}, 2);
    CHECK(fibre_census(p_g, 2, 2) == 6);
    // the generic fibre contributes (q + 1) + 3 boundary classes
    CHECK(fibre_census(p_g, 2, 3) == 7);

    PType p_c;
    p_c.I.push_back({1, 2, 3});
    CHECK(fibre_census(p_c, 2, 2) == 1);

    PType p_o;
    p_o.J.push_back({1, 2, 3});
    CHECK(fibre_census(p_o, 2, 3) == 1);
}

TEST_CASE("singleton fibres for K-free strata") {
    for (auto [n, m, q] : {std::tuple<std::size_t, std::size_t, std::int64_t>{2, 3, 2},
                           {2, 3, 3},
                           {2, 2, 3}}) {
        auto rep = run_census(n, m, q);
        REQUIRE(rep.agreement);
        for (const auto& [p, count] : rep.per_ptype_orbits)
            if (p.K.empty()) CHECK(count == 1);
    }
}

TEST_CASE("orbit growth in q at (2,4)") {
    // desk-scale shadow of the one-parameter moduli: count fits q + 12
    CHECK(run_census(2, 4, 2).brute_force_orbits == 2 + 12);
    CHECK(run_census(2, 4, 3).brute_force_orbits == 3 + 12);
}

TEST_CASE("guard rails") {
    CHECK_THROWS_AS(run_census(2, 3, 4), field_error);       // not prime
    CHECK_THROWS_AS(run_census(3, 6, 5), field_error);       // budget
    CHECK_THROWS_AS(run_census(2, 3, 2, 10), field_error);   // tiny budget
}
