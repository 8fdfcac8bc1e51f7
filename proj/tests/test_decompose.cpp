#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include <multiflag/decompose.hpp>

using namespace multiflag;

namespace {

const Rational like;

ProjectivePoint<Rational> pt(const std::vector<long>& v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return ProjectivePoint<Rational>(std::move(c));
}

Configuration<Rational> config(std::size_t n, const std::vector<std::vector<long>>& lines) {
    std::vector<ProjectivePoint<Rational>> pts;
    for (const auto& l : lines) pts.push_back(pt(l));
    return Configuration<Rational>(n, std::move(pts));
}

// oracle: finest partition refinement by exhaustive rank-additive bipartitions
std::vector<std::set<int>> brute_force_components(const Configuration<Rational>& c) {
    auto rank_of = [&](const std::set<int>& subset) {
        std::vector<std::vector<Rational>> cols;
        for (int i : subset) cols.push_back(c.line(static_cast<std::size_t>(i) - 1).coords());
        return rank(Matrix<Rational>::from_columns(cols));
    };
    std::function<std::vector<std::set<int>>(const std::set<int>&)> split =
        [&](const std::set<int>& s) -> std::vector<std::set<int>> {
        std::vector<int> elems(s.begin(), s.end());
        const std::size_t k = elems.size();
        for (std::size_t mask = 1; mask + 1 < (1u << k); ++mask) {
            if (!(mask & 1u)) continue;  // fix element 0 on one side
            std::set<int> left, right;
            for (std::size_t i = 0; i < k; ++i)
                (mask & (1u << i) ? left : right).insert(elems[i]);
            if (rank_of(left) + rank_of(right) == rank_of(s)) {
                auto out = split(left);
                for (auto& piece : split(right)) out.push_back(std::move(piece));
                return out;
            }
        }
        return {s};
    };
    std::set<int> all;
    for (std::size_t i = 1; i <= c.m(); ++i) all.insert(static_cast<int>(i));
    auto parts = split(all);
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    return parts;
}

std::vector<std::vector<ProjectivePoint<Rational>>> random_moduli(const PType& p,
                                                                  std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-6, 6);
    std::vector<std::vector<ProjectivePoint<Rational>>> q;
    for (const auto& [block, r] : p.K) {
        std::vector<ProjectivePoint<Rational>> pts;
        for (std::size_t h = 0; h + r + 1 < block.size(); ++h) {
            std::vector<Rational> v;
            bool zero = true;
            do {
                v.clear();
                zero = true;
                for (std::size_t i = 0; i < r; ++i) {
                    v.emplace_back(dist(rng));
                    if (!v.back().is_zero()) zero = false;
                }
            } while (zero);
            pts.emplace_back(std::move(v));
        }
        q.push_back(std::move(pts));
    }
    return q;
}

Matrix<Rational> random_invertible(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-4, 4);
    while (true) {
        std::vector<std::vector<Rational>> rows(n);
        for (auto& row : rows)
            for (std::size_t j = 0; j < n; ++j) row.emplace_back(dist(rng));
        auto m = Matrix<Rational>::from_rows(rows);
        if (rank(m) == n) return m;
    }
}

}  // namespace

TEST_CASE("matroid components: worked cases") {
    CHECK(matroid_components(config(2, {{1, 0}, {0, 1}, {0, 1}})) ==
          std::vector<std::set<int>>{{1}, {2, 3}});
    CHECK(matroid_components(config(2, {{1, 0}, {0, 1}, {1, 1}})) ==
          std::vector<std::set<int>>{{1, 2, 3}});
    CHECK(matroid_components(config(4, {{1, 0, 0, 0},
                                        {0, 1, 0, 0},
                                        {1, 1, 0, 0},
                                        {0, 0, 1, 0},
                                        {0, 0, 0, 1},
                                        {0, 0, 1, 1}})) ==
          std::vector<std::set<int>>{{1, 2, 3}, {4, 5, 6}});
}

TEST_CASE("matroid components match the rank-additivity oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> dist(-2, 2);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 7;
        std::vector<std::vector<long>> lines;
        while (lines.size() < m) {
            std::vector<long> v(n);
            bool zero = true;
            for (auto& x : v) {
                x = dist(rng);
                if (x) zero = false;
            }
            if (!zero) lines.push_back(std::move(v));
        }
        auto c = config(n, lines);
        CHECK(matroid_components(c) == brute_force_components(c));
    }
}

TEST_CASE("classify_component: E-component moduli") {
    auto e = classify_component(config(2, {{1, 0}, {0, 1}, {1, 1}, {2, 3}}), {1, 2, 3, 4});
    CHECK(e.kind == ComponentKind::E);
    CHECK(e.generic);
    REQUIRE(e.q.size() == 1);
    CHECK(e.q[0] == pt({2, 3}));  // [1 : 3/2]

    auto anchor = classify_component(config(2, {{1, 0}, {0, 1}, {1, 1}, {1, 0}}), {1, 2, 3, 4});
    CHECK(anchor.generic);
    CHECK(anchor.q[0] == pt({1, 0}));

    auto degen = classify_component(config(2, {{1, 0}, {1, 0}, {0, 1}, {1, 1}}), {1, 2, 3, 4});
    CHECK(degen.kind == ComponentKind::E);
    CHECK_FALSE(degen.generic);
    CHECK(degen.q.empty());
}

TEST_CASE("classify: worked examples") {
    auto c = classify(config(2, {{1, 0}, {1, 0}, {1, 0}}));
    CHECK(c.ptype.I == std::vector<std::set<int>>{{1, 2, 3}});
    CHECK(c.free_multiplicity == 1);

    auto g = classify(config(2, {{1, 0}, {0, 1}, {1, 1}, {1, 0}}));
    REQUIRE(g.ptype.K.size() == 1);
    CHECK(g.ptype.K[0] == std::pair<std::set<int>, std::size_t>{{1, 2, 3, 4}, 2});
    CHECK(g.components[0].q[0] == pt({1, 0}));

    auto pairs = classify(config(2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
    CHECK(pairs.ptype.I == std::vector<std::set<int>>{{1, 2}, {3, 4}});
    CHECK(pairs.ptype.J.empty());
    CHECK(pairs.ptype.K.empty());
}

TEST_CASE("round trips for all strata with random moduli") {
    std::mt19937 rng(29);
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t m = 1; m <= 5; ++m)
            for (const auto& p : enumerate_ptypes(n, m))
                for (int rep = 0; rep < 10; ++rep)
                    CHECK(round_trip_check(p, random_moduli(p, rng), n, m, like));
}

TEST_CASE("anchor moduli coincide with the anchor lines") {
    // q = [1:1] equals the last anchor K(e1+e2); the map still reproduces it
    PType p;
    p.K.emplace_back(std::set<int>{1, 2, 3, 4}, 2);
    CHECK(round_trip_check(p, {{pt({1, 1})}}, 2, 4, like));
}

TEST_CASE("classification is constant on orbits") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 3, m = 2 + rng() % 4;
        std::uniform_int_distribution<long> dist(-3, 3);
        std::vector<std::vector<long>> lines;
        while (lines.size() < m) {
            std::vector<long> v(n);
            bool zero = true;
            for (auto& x : v) {
                x = dist(rng);
                if (x) zero = false;
            }
            if (!zero) lines.push_back(std::move(v));
        }
        auto c = config(n, lines);
        auto t = random_invertible(n, rng);
        auto rec = classify(c);
        auto rec_t = classify(c.transformed(t));
        CHECK(rec.ptype == rec_t.ptype);
        REQUIRE(rec.components.size() == rec_t.components.size());
        for (std::size_t i = 0; i < rec.components.size(); ++i) {
            CHECK(rec.components[i].generic == rec_t.components[i].generic);
            CHECK(rec.components[i].q == rec_t.components[i].q);
        }
    }
}

TEST_CASE("every component dimension vector is indecomposable") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> dist(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 3, m = 1 + rng() % 6;
        std::vector<std::vector<long>> lines;
        while (lines.size() < m) {
            std::vector<long> v(n);
            bool zero = true;
            for (auto& x : v) {
                x = dist(rng);
                if (x) zero = false;
            }
            if (!zero) lines.push_back(std::move(v));
        }
        auto rec = classify(config(n, lines));
        for (const auto& comp : rec.components)
            CHECK(is_indecomposable_dimvec(
                DimensionVector::of_support(comp.indices, comp.rank, m)));
    }
}
