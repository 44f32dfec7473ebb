#include <doctest.h>

#include <cmath>
#include <random>

#include "bohrcolor/coloring.hpp"

using namespace bohrcolor;

namespace {
Params desk() { return {0.1, 1e-4, 2000, 0.0, kSlack}; }

SparsePoint pt(std::vector<std::pair<std::uint64_t, double>> pairs,
               std::uint64_t ambient = kUnbounded) {
    return SparsePoint::from_pairs(std::move(pairs), ambient);
}
}  // namespace

TEST_CASE("functional_f on simple points") {
    CHECK(std::abs(functional_f(SparsePoint{})) == 0.0);
    auto f1 = functional_f(pt({{1, 0.5}}));
    CHECK(f1.real() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(f1.imag()) < 1e-12);
    auto f2 = functional_f(pt({{1, 0.25}, {2, 0.75}}));
    CHECK(f2.real() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(f2.imag()) < 1e-12);
}

TEST_CASE("functional_f is 2pi-l1 bounded") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    for (int t = 0; t < 500; ++t) {
        std::vector<std::pair<std::uint64_t, double>> pairs;
        for (std::uint64_t j = 1; j <= 10; ++j) pairs.emplace_back(j, val(rng));
        SparsePoint x = pt(std::move(pairs));
        CHECK(std::abs(functional_f(x)) <= 2.0 * std::numbers::pi * l1_norm(x) + kSlack);
    }
}

TEST_CASE("color grid geometry") {
    Params p = desk();
    const std::uint64_t n = cells_per_side(p.delta2);
    CHECK(n == static_cast<std::uint64_t>(std::ceil(std::numbers::sqrt2 / p.delta2)));
    CHECK(color_of(SparsePoint{}, p).id.cell == 0);

    const double side = p.delta2 / std::numbers::sqrt2;
    auto c = color_of_value({0.5, 0.5}, p);
    auto k = static_cast<std::uint64_t>(0.5 / side);
    CHECK(c.id.cell == k * n + k);
    CHECK(c.id.cell < n * n);
}

TEST_CASE("color is a function of the f-value only") {
    Params p = desk();
    SparsePoint a = pt({{1, 0.25}, {2, 0.75}});
    SparsePoint b = pt({{5, 0.5}});  // same f = -2
    CHECK(color_of(a, p).id == color_of(b, p).id);
}

TEST_CASE("same color implies proximity of f-values") {
    Params p = desk();
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    std::uniform_real_distribution<double> nudge(-4e-5, 4e-5);
    for (int t = 0; t < 2000; ++t) {
        double v = val(rng);
        SparsePoint u = pt({{1, v}});
        SparsePoint w = pt({{1, frac(v + nudge(rng))}});
        if (color_of(u, p).id == color_of(w, p).id) {
            auto fu = functional_f(u), fw = functional_f(w);
            CHECK(gaussian_dist(fu - fw) < p.delta2);
        }
    }
}

TEST_CASE("boundary-adjacent values are flagged fragile") {
    Params p = desk();
    const double side = p.delta2 / std::numbers::sqrt2;
    CHECK(color_of_value({3.0 * side + 1e-12, 0.5 * side}, p).fragile);
    CHECK_FALSE(color_of_value({3.5 * side, 0.5 * side}, p).fragile);
}

TEST_CASE("second difference expansion identity") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::pair<std::uint64_t, double>> xs, ss;
        for (std::uint64_t j = 1; j <= 12; ++j) {
            xs.emplace_back(j, val(rng));
            ss.emplace_back(j, val(rng));
        }
        SparsePoint x = pt(xs), s = pt(ss);
        auto direct = second_difference(x, s);
        std::complex<double> expansion{0.0, 0.0};
        for (std::uint64_t j = 1; j <= 12; ++j) {
            auto one_minus = 1.0 - circle_exp(s.at(j));
            expansion += circle_exp(x.at(j)) * one_minus * one_minus;
        }
        CHECK(std::abs(direct - expansion) < 1e-10);
    }
}

TEST_CASE("second difference of a zero step vanishes") {
    SparsePoint x = pt({{1, 0.3}, {2, 0.6}});
    CHECK(std::abs(second_difference(x, SparsePoint{})) < 1e-12);
}

TEST_CASE("quarter-turn single-coordinate step has modulus 2") {
    SparsePoint x = pt({{1, 0.8}});
    SparsePoint s = pt({{1, 0.25}});
    CHECK(std::abs(second_difference(x, s)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("canonical-step second difference matches the sagitta value") {
    Params p = desk();
    SparsePoint s = canonical_member(p);
    auto sd = second_difference(SparsePoint{}, s);
    double expect = 4.0 * std::pow(std::sin(std::numbers::pi * p.delta1), 2);
    CHECK(std::abs(std::abs(sd) - expect) < 3.95e-4 + kSlack);
}

TEST_CASE("assert_blocked on the canonical witness") {
    Params p = desk();
    SparsePoint s = canonical_member(p);
    ObstructionRecord r = assert_blocked(SparsePoint{}, s, p);
    CHECK(r.modulus == doctest::Approx(0.3820).epsilon(2e-3));
    CHECK(r.modulus > r.lower_bound);
    CHECK(r.modulus < r.upper_bound);
    CHECK_FALSE(r.all_equal);
}

TEST_CASE("assert_blocked rejects non-members") {
    Params p = desk();
    CHECK_THROWS_AS(assert_blocked(SparsePoint{}, SparsePoint{}, p), std::invalid_argument);
    CHECK_THROWS_AS(assert_blocked(SparsePoint{}, pt({{1, 0.25}}), p), std::invalid_argument);
}

TEST_CASE("window theorem holds for sampled pairs") {
    // The acceptance suite runs the full 1e5-pair scan; this is the fast tier.
    for (Params p : {desk(), Params{0.15, 0.003125, 300, 0.0, kSlack}}) {
        std::mt19937_64 rng(34);
        std::uniform_real_distribution<double> val(0.0, 1.0);
        for (std::uint64_t seed = 1; seed <= 500; ++seed) {
            SparsePoint s = sample_member(p, seed);
            std::vector<std::pair<std::uint64_t, double>> xs;
            for (std::uint64_t j = 1; j <= 20; ++j) xs.emplace_back(j, val(rng));
            SparsePoint x = pt(std::move(xs), p.m);
            ObstructionRecord r = assert_blocked(x, s, p);
            CHECK(r.modulus > 2.0 * p.delta2);
            CHECK(r.modulus < 1.0 - 2.0 * p.delta2);
            CHECK_FALSE(r.all_equal);
        }
    }
}

TEST_CASE("triangle route: equal colors forces proximity to the lattice") {
    // Fuzz with steps NOT in S_m; whenever the three colors agree the second
    // difference must be within 2*delta2 (+ slack) of a Gaussian integer.
    Params p = desk();
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> tiny(0.0, 2e-5);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    int agreements = 0;
    for (int t = 0; t < 5000; ++t) {
        SparsePoint x = pt({{1, val(rng)}, {2, val(rng)}});
        SparsePoint s = pt({{1, tiny(rng)}, {2, tiny(rng)}});
        ColorId c0 = color_of(x, p).id;
        ColorId c1 = color_of(add(x, s), p).id;
        ColorId c2 = color_of(add(x, add(s, s)), p).id;
        if (c0 == c1 && c1 == c2) {
            ++agreements;
            CHECK(gaussian_dist(second_difference(x, s)) <= 2.0 * p.delta2 + 2.0 * kSlack);
        }
    }
    CHECK(agreements > 0);  // the fuzz must actually exercise the implication
}
