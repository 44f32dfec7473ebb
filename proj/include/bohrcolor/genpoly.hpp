#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bohrcolor/circle.hpp"
#include "bohrcolor/errors.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

// One factor n^j * a of a special generalized polynomial.
struct GenPolyTerm {
    std::uint32_t exponent = 0;
    double coeff = 0.0;
};

// L(n^{j_1} a_1, ..., n^{j_l} a_l) with the bracket recursion
// L(x_1,...,x_l) = x_1 [L(x_2,...,x_l)].
struct SpecialGenPoly {
    std::vector<GenPolyTerm> terms;
};

// Right fold of the bracket recursion; L(x) = x.
double eval_L(std::span<const double> values);

// Degree = sum of the exponents.
std::uint32_t degree(const SpecialGenPoly& P);

// frac(L(n^{j_1} a_1, ..., n^{j_l} a_l)). Throws std::overflow_error when a
// factor n^j * a leaves the range where double fractional parts are exact
// enough (|value| > 2^53).
double eval(const SpecialGenPoly& P, std::uint64_t n);

struct NilBohrNbhd {
    std::vector<SpecialGenPoly> polys;
    double epsilon = 0.0;
    std::uint32_t degree_bound = 1;

    void validate() const;  // epsilon > 0, every degree <= degree_bound
};

// All ||P_i(n)|| < epsilon - tol; vacuously true for an empty family.
bool nilbohr_contains(const NilBohrNbhd& N, std::uint64_t n, double tol = kSlack);

void to_json(nlohmann::json& j, const SpecialGenPoly& P);
void from_json(const nlohmann::json& j, SpecialGenPoly& P);
void to_json(nlohmann::json& j, const NilBohrNbhd& N);
void from_json(const nlohmann::json& j, NilBohrNbhd& N);

}  // namespace bohrcolor
