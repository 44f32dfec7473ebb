#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrcolor/sparse_point.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

// Construction constants. delta1/delta2 must be an integer, delta2 < delta1^3,
// and the two window inequalities of validate_params must hold.
struct Params {
    double delta1 = 0.1;
    double delta2 = 1e-4;
    std::uint64_t m = kUnbounded;  // truncation bound of the ambient space
    double eta = 0.0;              // slack eta_m; 0 selects S_infinity
    double tol = kSlack;           // slack tau for every strict inequality

    // Interval half-width (2 - eta) * delta2 of the membership clauses.
    double width() const { return (2.0 - eta) * delta2; }
    // delta1/delta2, rounded (validated to be integral).
    std::uint64_t ratio() const;
};

// eta_m = 2^{-100 m}; values below double range clamp to 0 with a flag.
struct EtaResult {
    double value = 0.0;
    bool underflowed = false;
};
EtaResult eta(std::uint64_t m);

struct ParamReport {
    bool ok = false;
    std::vector<std::string> failed_clauses;  // subset of {"a","b","c","d"}
    double lower_margin = 0.0;  // clause (c): sagitta lower bound minus 2*delta2
    double upper_margin = 0.0;  // clause (d): 1 - 2*delta2 minus sagitta upper bound
};

// Checks (a) delta1/delta2 integral, (b) delta2 < delta1^3,
// (c) 4sin^2(pi(d1-2d2)) - 4pi^2(2d2)(d1+2d2) > 2d2 + tol,
// (d) 4sin^2(pi(d1+2d2)) + 4pi^2(2d2)(d1+2d2) < 1 - 2d2 - tol.
ParamReport validate_params(double delta1, double delta2, double tol = kSlack);

// Throws ConfigError if the report rejects.
void require_valid(const Params& p);

struct MembershipCertificate {
    bool is_member = false;
    std::uint64_t special_index = 0;  // the distinguished i when member
    double tail_sum = 0.0;            // sum of ||a_j|| over j != i
    // Distance of each clause quantity from its interval boundary; acceptance
    // requires all three to exceed tol (or a caller-supplied guard).
    double margin1 = 0.0;
    double margin2 = 0.0;
    double margin3 = 0.0;

    double min_margin() const;
};

// Membership in S_m with a certificate. `guard` widens the required margin
// beyond p.tol (used by the projection's tail bookkeeping).
MembershipCertificate is_member(const SparsePoint& x, const Params& p, double guard = 0.0);

// The proof's explicit member: -delta1 at `anchor`, delta2 at the next
// delta1/delta2 indices.
SparsePoint canonical_member(const Params& p, std::uint64_t anchor = 1);

// Deterministic random member of S_m. Throws CapacityError if p.m is too small.
SparsePoint sample_member(const Params& p, std::uint64_t seed);

void to_json(nlohmann::json& j, const MembershipCertificate& c);
void to_json(nlohmann::json& j, const ParamReport& r);

}  // namespace bohrcolor
