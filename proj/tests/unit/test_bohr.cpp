#include <doctest.h>

#include <random>

#include "bohrcolor/bohr.hpp"

using namespace bohrcolor;

namespace {
Params desk() { return {0.1, 1e-4, 2000, 0.0, kSlack}; }

SparsePoint pt(std::vector<std::pair<std::uint64_t, double>> pairs,
               std::uint64_t ambient = kUnbounded) {
    return SparsePoint::from_pairs(std::move(pairs), ambient);
}

TorusBohrSet ones(std::size_t m, double eps) {
    return {{std::vector<long long>(m, 1)}, eps};
}
}  // namespace

TEST_CASE("validate") {
    TorusBohrSet empty{{}, 0.1};
    CHECK_THROWS_AS(empty.validate(), ConfigError);
    CHECK_THROWS_AS(ones(3, 0.0).validate(), ConfigError);
    CHECK_THROWS_AS(ones(3, 0.6).validate(), ConfigError);
    CHECK_NOTHROW(ones(3, 0.5).validate());
    TorusBohrSet ragged{{{1, 2}, {1}}, 0.1};
    CHECK_THROWS_AS(ragged.validate(), ConfigError);
}

TEST_CASE("dual_apply basics") {
    TorusBohrSet B{{{2, 0, 0}}, 0.1};
    CHECK(dual_apply(B, SparsePoint{}) == std::vector<double>{0.0});
    CHECK(dual_apply(B, pt({{1, 0.3}}))[0] == doctest::Approx(0.6).epsilon(1e-12));
    TorusBohrSet C{{{1, 1}}, 0.1};
    CHECK(dual_apply(C, pt({{1, 0.6}, {2, 0.6}}))[0] == doctest::Approx(0.2).epsilon(1e-12));
    // Coordinates past the stored dual row carry coefficient zero.
    CHECK(dual_apply(C, pt({{5, 0.3}}))[0] == 0.0);
}

TEST_CASE("dual_apply is a homomorphism") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    std::uniform_int_distribution<long long> coef(-5, 5);
    for (int t = 0; t < 300; ++t) {
        std::vector<long long> row(8);
        for (auto& c : row) c = coef(rng);
        TorusBohrSet B{{row}, 0.25};
        std::vector<std::pair<std::uint64_t, double>> xs, ys;
        for (std::uint64_t j = 1; j <= 8; ++j) {
            xs.emplace_back(j, val(rng));
            ys.emplace_back(j, val(rng));
        }
        SparsePoint x = pt(xs), y = pt(ys);
        double lhs = dual_apply(B, add(x, y))[0];
        double rhs = frac(dual_apply(B, x)[0] + dual_apply(B, y)[0]);
        CHECK(rz_norm_of(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("bohr_contains") {
    TorusBohrSet B{{{1, 0, 0}}, 0.1};
    CHECK(bohr_contains(B, SparsePoint{}));
    CHECK_FALSE(bohr_contains(B, pt({{1, 0.3}})));
    CHECK(bohr_contains(B, pt({{1, 0.95}})));
}

TEST_CASE("find_cluster on the all-ones dual") {
    Params p = desk();
    Cluster c = find_cluster(ones(20, 0.5), p);
    CHECK(c.indices.size() == p.ratio() + 1);
    // Columns 1..20 share one bucket; implicit zeros beyond fill another first.
    CHECK(c.anchor >= 1);
}

TEST_CASE("find_cluster on an alternating dual prefers the first filled cell") {
    Params p = desk();
    p.delta1 = 0.1;
    p.delta2 = 0.01;  // ratio 10, cluster target 11
    std::vector<long long> row;
    for (int j = 0; j < 40; ++j) row.push_back(j % 2 == 0 ? 1 : 2);
    Cluster c = find_cluster({{row}, 0.5}, p);
    REQUIRE(c.indices.size() == 11);
    CHECK(c.anchor == 1);
    for (std::uint64_t j : c.indices) CHECK(j % 2 == 1);  // odd = coefficient 1
}

TEST_CASE("find_cluster exhaustion carries the pigeonhole bound") {
    Params p = desk();
    p.m = 30;  // far below any possible cluster of 1001
    std::vector<long long> row(30);
    for (int j = 0; j < 30; ++j) row[j] = j;  // spread the images
    try {
        find_cluster({{row}, 0.5}, p);
        FAIL("expected NeedLargerM");
    } catch (const NeedLargerM& e) {
        std::uint64_t cells = static_cast<std::uint64_t>(std::ceil(1.0 / (p.delta2 * 0.5)));
        CHECK(e.required_m == 1000 * cells + 1);
    }
}

TEST_CASE("witness for the all-ones dual is exact") {
    Params p = desk();
    WitnessReport w = build_witness(ones(20, 0.5), p);
    CHECK(is_member(w.witness, p).is_member);
    CHECK(w.sup_norm == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w.cluster.size() == 1001);
}

TEST_CASE("random duals satisfy the witness chain") {
    Params p = desk();
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> coef(-5, 5);
    std::uniform_int_distribution<int> kk(1, 2);
    for (int t = 0; t < 100; ++t) {
        double eps = t % 2 == 0 ? 0.1 : 0.5;
        std::size_t k = kk(rng);
        std::vector<std::vector<long long>> dual(k, std::vector<long long>(50));
        for (auto& row : dual)
            for (auto& c : row) c = coef(rng);
        TorusBohrSet B{dual, eps};
        WitnessReport w = build_witness(B, p);
        CHECK(is_member(w.witness, p).is_member);
        CHECK(bohr_contains(B, w.witness));
        CHECK(w.sup_norm <= p.delta1 * eps + p.tol);
        CHECK(w.sup_norm <= w.chain_bound + p.tol);
        CHECK(w.chain_bound <= p.delta1 * eps + p.tol);
    }
}
