#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrcolor/coloring.hpp"
#include "bohrcolor/construction.hpp"
#include "bohrcolor/sparse_point.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

// Textbook schedule: alpha_i = frac(sqrt(p_i) * 10^{-c_i}) with p_i the i-th
// prime and c_i = c_start + c_step * (i - 1). Rapidly shrinking throughout.
struct PrimeRootScheduleConfig {
    int c_start = 2;
    int c_step = 2;
};

// Shipped schedule: one anchor frequency plus a cluster of near-equal tiny
// frequencies, then a geometric tail. The cluster makes the integer set
// nonempty at desk scale: near n = band_center all cluster coordinates sit
// near delta2 simultaneously, and recur near multiples of 1/nu.
struct ClusteredScheduleConfig {
    int gamma_prime = 5;            // anchor alpha_1 = frac(sqrt(gamma_prime))
    std::uint64_t cluster_size = 48;
    double delta1 = 0.15;           // band geometry matches these params
    double band_center = 5e4;       // first membership band center in n
    double spread = 3e-4;           // relative spread across the cluster
    double jitter = 1e-8;           // irrational jitter for independence
    double tail_start = 1e-13;      // alpha at index cluster_size + 2
    double tail_ratio = 0.1;

    double nu() const { return delta1 / (static_cast<double>(cluster_size) * band_center); }
};

// Materialized frequencies alpha_1 > alpha_2 > ... > alpha_m in (0, 1/2),
// with a certified upper bound on the tail sum beyond m.
class AlphaSchedule {
  public:
    static AlphaSchedule clustered(const ClusteredScheduleConfig& cfg, std::uint64_t m);
    static AlphaSchedule prime_root(const PrimeRootScheduleConfig& cfg, std::uint64_t m);

    std::uint64_t m() const { return alphas_.size(); }
    double alpha(std::uint64_t i) const { return alphas_[i - 1]; }
    const std::vector<double>& alphas() const { return alphas_; }
    double tail_bound() const { return tail_bound_; }
    const std::string& fingerprint() const { return fingerprint_; }

  private:
    AlphaSchedule(std::vector<double> alphas, double tail_bound, std::string fingerprint);
    std::vector<double> alphas_;
    double tail_bound_ = 0.0;
    std::string fingerprint_;
};

// i-th prime (1-based), via a cached sieve.
std::uint64_t nth_prime(std::uint64_t i);

// P(n) = ({alpha_1 n}, ..., {alpha_m n}); a homomorphism Z -> torus.
SparsePoint project(std::uint64_t n, const AlphaSchedule& sched);

struct IntegerSetReport {
    struct Element {
        std::uint64_t n = 0;
        double margin = 0.0;  // min clause margin of the guarded membership
    };
    std::vector<Element> elements;  // sorted by n
    std::uint64_t scan_bound = 0;
    std::string fingerprint;

    std::vector<std::uint64_t> values() const;
};

// All n in [1, N] whose guarded membership holds: is_member(P(n)) with every
// clause margin exceeding n * tail_bound, which certifies the untruncated
// point lies in S_infinity. Deterministic for any worker count.
IntegerSetReport enumerate_members(std::uint64_t N, const Params& p, const AlphaSchedule& sched,
                                   unsigned workers = 1, double guard_fraction = 0.1);

ColorResult color_integer(std::uint64_t n, const Params& p, const AlphaSchedule& sched);

void to_json(nlohmann::json& j, const IntegerSetReport& r);
std::string to_csv(const IntegerSetReport& r);

}  // namespace bohrcolor
