#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohrcolor/construction.hpp"

using namespace bohrcolor;

namespace {
Params desk() { return {0.1, 1e-4, 2000, 0.0, kSlack}; }

double window_lower(double d1, double d2) {
    double s = std::sin(std::numbers::pi * (d1 - 2 * d2));
    return 4 * s * s - 4 * std::numbers::pi * std::numbers::pi * (2 * d2) * (d1 + 2 * d2);
}
double window_upper(double d1, double d2) {
    double s = std::sin(std::numbers::pi * (d1 + 2 * d2));
    return 4 * s * s + 4 * std::numbers::pi * std::numbers::pi * (2 * d2) * (d1 + 2 * d2);
}
}  // namespace

TEST_CASE("validate_params accepts the reference parameter sets") {
    CHECK(validate_params(0.01, 1e-10).ok);
    CHECK(validate_params(0.1, 1e-4).ok);
    CHECK(validate_params(0.15, 0.003125).ok);
}

TEST_CASE("validate_params margins match direct evaluation") {
    ParamReport r = validate_params(0.1, 1e-4);
    double lower = window_lower(0.1, 1e-4) - 2e-4;
    double upper = (1.0 - 2e-4) - window_upper(0.1, 1e-4);
    CHECK(r.lower_margin == doctest::Approx(lower).epsilon(1e-9));
    CHECK(r.upper_margin == doctest::Approx(upper).epsilon(1e-9));
    CHECK(r.lower_margin == doctest::Approx(0.3794).epsilon(1e-3));
    CHECK(r.upper_margin == doctest::Approx(0.6156).epsilon(1e-3));
}

TEST_CASE("validate_params rejections name the clause") {
    ParamReport r = validate_params(0.1, 0.05);
    CHECK_FALSE(r.ok);
    CHECK(std::find(r.failed_clauses.begin(), r.failed_clauses.end(), "b") !=
          r.failed_clauses.end());
    // Non-integral ratio.
    ParamReport ra = validate_params(0.1, 3e-4);
    CHECK(std::find(ra.failed_clauses.begin(), ra.failed_clauses.end(), "a") !=
          ra.failed_clauses.end());
    // delta1 too large for the upper window: clause (d).
    ParamReport rd = validate_params(0.25, 1e-4);
    CHECK_FALSE(rd.ok);
    CHECK(std::find(rd.failed_clauses.begin(), rd.failed_clauses.end(), "d") !=
          rd.failed_clauses.end());
    CHECK_THROWS_AS(validate_params(0.1, 0.2), std::domain_error);
}

TEST_CASE("eta schedule") {
    EtaResult e1 = eta(1);
    CHECK(e1.value == std::ldexp(1.0, -100));
    CHECK_FALSE(e1.underflowed);
    EtaResult e10 = eta(10);
    CHECK(e10.value == std::ldexp(1.0, -1000));
    CHECK_FALSE(e10.underflowed);
    EtaResult e11 = eta(11);
    CHECK(e11.value == 0.0);
    CHECK(e11.underflowed);
    EtaResult einf = eta(kUnbounded);
    CHECK(einf.value == 0.0);
    CHECK_FALSE(einf.underflowed);
    CHECK_THROWS_AS(eta(0), std::domain_error);
}

TEST_CASE("canonical member certificate") {
    Params p = desk();
    SparsePoint v = canonical_member(p);
    MembershipCertificate c = is_member(v, p);
    REQUIRE(c.is_member);
    CHECK(c.special_index == 1);
    CHECK(c.tail_sum == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(c.margin1 > 0);
    CHECK(c.margin2 > 0);
    CHECK(c.margin3 > 0);
}

TEST_CASE("shifted anchor is rejected") {
    Params p = desk();
    std::vector<SparsePoint::Entry> e;
    e.push_back({1, frac(-p.delta1 + 3 * p.delta2)});
    for (std::uint64_t j = 2; j <= 1001; ++j) e.push_back({j, p.delta2});
    SparsePoint v = SparsePoint::from_pairs(std::move(e), p.m);
    CHECK_FALSE(is_member(v, p).is_member);
}

TEST_CASE("zero point is rejected") {
    CHECK_FALSE(is_member(SparsePoint{}, desk()).is_member);
}

TEST_CASE("sample round trip across parameter sets") {
    std::vector<Params> sets = {
        desk(),
        {0.1, 1e-3, 500, 0.0, kSlack},
        {0.15, 0.003125, 300, 0.0, kSlack},
    };
    for (const Params& p : sets) {
        for (std::uint64_t seed = 1; seed <= 300; ++seed) {
            SparsePoint v = sample_member(p, seed);
            CHECK(is_member(v, p).is_member);
        }
    }
}

TEST_CASE("sampler is deterministic") {
    Params p = desk();
    CHECK(sample_member(p, 42) == sample_member(p, 42));
}

TEST_CASE("capacity error carries a minimal m") {
    Params p = desk();
    p.m = 10;  // ratio 1000 needs ~1001 coordinates
    try {
        sample_member(p, 1);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.min_m > 10);
    }
}

TEST_CASE("slack monotonicity: members at eta > 0 remain members at eta = 0") {
    Params slack = desk();
    slack.eta = eta(1).value;
    Params tight = desk();
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        SparsePoint v = sample_member(slack, seed);
        CHECK(is_member(v, slack).is_member);
        CHECK(is_member(v, tight).is_member);
    }
}

TEST_CASE("boundary flip: moving a clause quantity to its boundary flips acceptance") {
    Params p = desk();
    const double w = p.width();
    SparsePoint v = canonical_member(p);
    REQUIRE(is_member(v, p).is_member);

    // Clause 1: anchor at the interval edge -delta1 + w.
    {
        std::vector<SparsePoint::Entry> e(v.entries());
        e[0].second = frac(-p.delta1 + w);
        CHECK_FALSE(is_member(SparsePoint::from_pairs(e, p.m), p).is_member);
    }
    // Clause 2: one small coordinate at the cap w.
    {
        std::vector<SparsePoint::Entry> e(v.entries());
        e[1].second = w;
        CHECK_FALSE(is_member(SparsePoint::from_pairs(e, p.m), p).is_member);
    }
    // Clause 3: drop enough tail mass to put the sum at the lower edge.
    {
        std::vector<SparsePoint::Entry> e(v.entries());
        e.resize(1 + static_cast<std::size_t>((p.delta1 - w) / p.delta2));
        CHECK_FALSE(is_member(SparsePoint::from_pairs(e, p.m), p).is_member);
    }
}

TEST_CASE("guard widens the required margins") {
    Params p = desk();
    SparsePoint v = canonical_member(p);
    MembershipCertificate c = is_member(v, p);
    REQUIRE(c.is_member);
    CHECK_FALSE(is_member(v, p, c.min_margin() + 1e-12).is_member);
}

TEST_CASE("ambient discipline") {
    Params p = desk();
    SparsePoint big = SparsePoint::from_pairs({{3000, 0.5}}, 4000);
    CHECK_THROWS_AS(is_member(big, p), DimensionError);
}
