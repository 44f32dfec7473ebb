#pragma once

#include <complex>
#include <cstdint>

#include "bohrcolor/construction.hpp"
#include "bohrcolor/sparse_point.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

// A grid cell of the fundamental square of C/Z[i], row-major.
struct ColorId {
    std::uint64_t cell = 0;
    bool operator==(const ColorId&) const = default;
};

struct ColorResult {
    ColorId id;
    // f-value within tol of a cell boundary: valid but numerically fragile.
    bool fragile = false;
};

// Cells per side of the half-open square grid of side delta2/sqrt(2).
std::uint64_t cells_per_side(double delta2);

// f(x) = sum over the support of (e(a_i) - 1).
std::complex<double> functional_f(const SparsePoint& x);

// Cell of a reduced f-value; the grid is half-open so every residue gets
// exactly one color.
ColorResult color_of_value(std::complex<double> f, const Params& p);
inline ColorResult color_of(const SparsePoint& x, const Params& p) {
    return color_of_value(functional_f(x), p);
}

// f(x) - 2 f(x+s) + f(x+2s).
std::complex<double> second_difference(const SparsePoint& x, const SparsePoint& s);

struct ObstructionRecord {
    std::complex<double> second_diff;
    double modulus = 0.0;
    double lower_bound = 0.0;  // 2*delta2
    double upper_bound = 0.0;  // 1 - 2*delta2
    ColorId colors[3];
    bool all_equal = false;  // always false on success
};

// Certifies that x, x+s, x+2s are not all one color when s is in S_m.
// Throws if s is not a member, or (never, for valid params) if the modulus
// leaves the proven window.
ObstructionRecord assert_blocked(const SparsePoint& x, const SparsePoint& s, const Params& p);

void to_json(nlohmann::json& j, const ObstructionRecord& r);

}  // namespace bohrcolor
