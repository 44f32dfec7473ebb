#include "bohrcolor/coloring.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace bohrcolor {

std::uint64_t cells_per_side(double delta2) {
    return static_cast<std::uint64_t>(std::ceil(std::numbers::sqrt2 / delta2));
}

std::complex<double> functional_f(const SparsePoint& x) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [i, v] : x.entries()) s += circle_exp(v) - 1.0;
    return s;
}

ColorResult color_of_value(std::complex<double> f, const Params& p) {
    const std::uint64_t n = cells_per_side(p.delta2);
    const double side = p.delta2 / std::numbers::sqrt2;
    GaussianResidue g = gaussian_reduce(f);
    auto axis = [&](double v) {
        auto k = static_cast<std::uint64_t>(v / side);
        return k >= n ? n - 1 : k;  // guard against v/side rounding up to n
    };
    std::uint64_t col = axis(g.x), row = axis(g.y);
    auto near_edge = [&](double v, std::uint64_t k) {
        return v - static_cast<double>(k) * side < p.tol ||
               static_cast<double>(k + 1) * side - v < p.tol;
    };
    return {{row * n + col}, near_edge(g.x, col) || near_edge(g.y, row)};
}

std::complex<double> second_difference(const SparsePoint& x, const SparsePoint& s) {
    SparsePoint xs = add(x, s);
    SparsePoint xss = add(xs, s);
    return functional_f(x) - 2.0 * functional_f(xs) + functional_f(xss);
}

ObstructionRecord assert_blocked(const SparsePoint& x, const SparsePoint& s, const Params& p) {
    MembershipCertificate cert = is_member(s, p);
    if (!cert.is_member)
        throw std::invalid_argument("assert_blocked: s is not a certified member of S_m");

    ObstructionRecord r;
    r.second_diff = second_difference(x, s);
    r.modulus = std::abs(r.second_diff);
    r.lower_bound = 2.0 * p.delta2;
    r.upper_bound = 1.0 - 2.0 * p.delta2;
    r.colors[0] = color_of(x, p).id;
    r.colors[1] = color_of(add(x, s), p).id;
    r.colors[2] = color_of(add(x, add(s, s)), p).id;
    r.all_equal = r.colors[0] == r.colors[1] && r.colors[1] == r.colors[2];

    if (!(r.modulus > r.lower_bound + p.tol && r.modulus < r.upper_bound - p.tol))
        throw ConstructionViolation("assert_blocked: second difference left the sagitta window");
    if (r.all_equal)
        throw ConstructionViolation("assert_blocked: progression received one color");
    return r;
}

void to_json(nlohmann::json& j, const ObstructionRecord& r) {
    j = {{"second_diff", {r.second_diff.real(), r.second_diff.imag()}},
         {"modulus", r.modulus},
         {"lower_bound", r.lower_bound},
         {"upper_bound", r.upper_bound},
         {"colors", {r.colors[0].cell, r.colors[1].cell, r.colors[2].cell}},
         {"all_equal", r.all_equal}};
}

}  // namespace bohrcolor
