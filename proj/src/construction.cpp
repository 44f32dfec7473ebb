#include "bohrcolor/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

namespace bohrcolor {

std::uint64_t Params::ratio() const {
    return static_cast<std::uint64_t>(std::llround(delta1 / delta2));
}

EtaResult eta(std::uint64_t m) {
    if (m == kUnbounded) return {0.0, false};  // eta_infinity = 0
    if (m == 0) throw std::domain_error("eta: m >= 1 required");
    if (m > 10) return {0.0, true};  // 2^{-1100} is below the smallest subnormal
    return {std::ldexp(1.0, -100 * static_cast<int>(m)), false};
}

ParamReport validate_params(double delta1, double delta2, double tol) {
    ParamReport r;
    if (!(delta2 > 0.0 && delta2 < delta1 && delta1 < 1.0))
        throw std::domain_error("validate_params: need 0 < delta2 < delta1 < 1");

    double ratio = delta1 / delta2;
    if (std::abs(ratio - std::llround(ratio)) > tol * std::max(1.0, ratio))
        r.failed_clauses.push_back("a");
    if (!(delta2 < delta1 * delta1 * delta1)) r.failed_clauses.push_back("b");

    const double pi = std::numbers::pi;
    double s_lo = std::sin(pi * (delta1 - 2.0 * delta2));
    double s_hi = std::sin(pi * (delta1 + 2.0 * delta2));
    double tail = 4.0 * pi * pi * (2.0 * delta2) * (delta1 + 2.0 * delta2);
    r.lower_margin = (4.0 * s_lo * s_lo - tail) - 2.0 * delta2;
    r.upper_margin = (1.0 - 2.0 * delta2) - (4.0 * s_hi * s_hi + tail);
    if (!(r.lower_margin > tol)) r.failed_clauses.push_back("c");
    if (!(r.upper_margin > tol)) r.failed_clauses.push_back("d");

    r.ok = r.failed_clauses.empty();
    return r;
}

void require_valid(const Params& p) {
    ParamReport r = validate_params(p.delta1, p.delta2, p.tol);
    if (!r.ok) {
        std::string msg = "invalid params, failed clause(s):";
        for (const auto& c : r.failed_clauses) msg += " " + c;
        throw ConfigError(msg);
    }
}

double MembershipCertificate::min_margin() const {
    return std::min(margin1, std::min(margin2, margin3));
}

namespace {
void check_ambient(const SparsePoint& x, const Params& p) {
    if (p.m == kUnbounded) return;
    if (x.ambient() != kUnbounded) {
        if (x.ambient() > p.m) throw DimensionError("point ambient exceeds params truncation");
    } else if (!x.entries().empty() && x.entries().back().first > p.m) {
        throw DimensionError("point support exceeds params truncation");
    }
}
}  // namespace

MembershipCertificate is_member(const SparsePoint& x, const Params& p, double guard) {
    check_ambient(x, p);
    const double w = p.width();
    const double need = p.tol + guard;

    // One pass: classify each support coordinate as a clause-1 candidate
    // (near -delta1) and/or a clause-2 small coordinate.
    struct Cand {
        std::uint64_t index;
        double margin1;
        double rz;
    };
    std::vector<Cand> cands;
    double sum_all = 0.0;
    double min_j_margin = w;  // off-support coordinates contribute margin w
    std::uint64_t bad = 0;    // coords failing clause 2
    std::uint64_t bad_index = 0;
    for (const auto& [i, v] : x.entries()) {
        double rz = rz_norm(v);
        sum_all += rz;
        double m1 = w - std::abs(signed_frac(v + p.delta1));
        if (m1 > need) cands.push_back({i, m1, rz});
        double mj = w - rz;
        if (mj > need) {
            min_j_margin = std::min(min_j_margin, mj);
        } else {
            ++bad;
            bad_index = i;
        }
    }

    MembershipCertificate best;
    for (const auto& c : cands) {
        // Clause 2 must hold at every coordinate other than c.
        if (bad > 1 || (bad == 1 && bad_index != c.index)) continue;
        double sum_others = sum_all - c.rz;
        double m3 = std::min(sum_others - (p.delta1 - w), (p.delta1 + w) - sum_others);
        if (!(m3 > need)) continue;
        best.is_member = true;
        best.special_index = c.index;
        best.tail_sum = sum_others;
        best.margin1 = c.margin1;
        best.margin2 = min_j_margin;
        best.margin3 = m3;
        return best;
    }
    return best;
}

SparsePoint canonical_member(const Params& p, std::uint64_t anchor) {
    std::uint64_t r = p.ratio();
    if (p.m != kUnbounded && p.m < anchor + r)
        throw CapacityError("canonical_member: truncation too small", anchor + r);
    std::vector<SparsePoint::Entry> e;
    e.reserve(r + 1);
    e.push_back({anchor, frac(-p.delta1)});
    for (std::uint64_t j = 1; j <= r; ++j) e.push_back({anchor + j, p.delta2});
    return SparsePoint::from_pairs(std::move(e), p.m);
}

SparsePoint sample_member(const Params& p, std::uint64_t seed) {
    const double w = p.width();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Clause-3 target, centered on delta1 with half the window as margin.
    double target = p.delta1 + (unit(rng) - 0.5) * w * 0.5;
    // Support size: per-entry magnitudes near 0.6*w stay clear of the
    // clause-2 cap after jitter.
    auto k = static_cast<std::uint64_t>(std::ceil(target / (0.6 * w)));
    std::uint64_t min_m =
        static_cast<std::uint64_t>(std::ceil((p.delta1 - w) / (w - 2.0 * p.tol))) + 2;
    if (p.m != kUnbounded && k + 1 > p.m)
        throw CapacityError("sample_member: m too small to host a member", std::max(min_m, k + 1));
    const std::uint64_t m = p.m == kUnbounded ? 4 * (k + 1) : p.m;

    // Distinct support: anchor i plus k others, via partial Fisher-Yates.
    std::vector<std::uint64_t> idx(m);
    for (std::uint64_t t = 0; t < m; ++t) idx[t] = t + 1;
    for (std::uint64_t t = 0; t + 1 < m && t <= k; ++t) {
        std::uniform_int_distribution<std::uint64_t> pick(t, m - 1);
        std::swap(idx[t], idx[pick(rng)]);
    }
    std::uint64_t anchor = idx[0];

    // Magnitudes sum exactly to target; jitter in cancelling pairs.
    double base = target / static_cast<double>(k);
    std::vector<double> mags(k, base);
    for (std::uint64_t t = 0; t + 1 < k; t += 2) {
        double eps = (unit(rng) - 0.5) * 0.58 * base;
        mags[t] += eps;
        mags[t + 1] -= eps;
    }

    std::vector<SparsePoint::Entry> e;
    e.reserve(k + 1);
    double u = (unit(rng) - 0.5) * 1.8 * (w - 2.0 * p.tol);
    e.push_back({anchor, frac(-p.delta1 + u)});
    for (std::uint64_t t = 0; t < k; ++t) {
        double v = unit(rng) < 0.5 ? mags[t] : 1.0 - mags[t];
        e.push_back({idx[t + 1], v});
    }
    SparsePoint out = SparsePoint::from_pairs(std::move(e), p.m);
    if (!is_member(out, p).is_member)
        throw ConstructionViolation("sample_member: generated point failed membership");
    return out;
}

void to_json(nlohmann::json& j, const MembershipCertificate& c) {
    j = {{"is_member", c.is_member},
         {"special_index", c.special_index},
         {"tail_sum", c.tail_sum},
         {"margins", {c.margin1, c.margin2, c.margin3}}};
}

void to_json(nlohmann::json& j, const ParamReport& r) {
    j = {{"ok", r.ok},
         {"failed_clauses", r.failed_clauses},
         {"lower_margin", r.lower_margin},
         {"upper_margin", r.upper_margin}};
}

}  // namespace bohrcolor
