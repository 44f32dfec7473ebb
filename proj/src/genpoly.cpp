#include "bohrcolor/genpoly.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

namespace bohrcolor {

double eval_L(std::span<const double> values) {
    if (values.empty()) throw std::domain_error("eval_L: empty argument list");
    double acc = values.back();
    for (std::size_t t = values.size() - 1; t-- > 0;)
        acc = values[t] * static_cast<double>(nearest_int(acc));
    return acc;
}

std::uint32_t degree(const SpecialGenPoly& P) {
    std::uint32_t d = 0;
    for (const auto& t : P.terms) d += t.exponent;
    return d;
}

double eval(const SpecialGenPoly& P, std::uint64_t n) {
    if (n < 1) throw std::domain_error("eval: n >= 1 required");
    // Extended precision throughout: a quadratic factor at n ~ 5e7 reaches
    // 1e15, where a plain double keeps nothing of the fractional part.
    std::vector<long double> vals;
    vals.reserve(P.terms.size());
    for (std::size_t t = 0; t < P.terms.size(); ++t) {
        long double pw = 1.0L;
        for (std::uint32_t e = 0; e < P.terms[t].exponent; ++e)
            pw *= static_cast<long double>(n);
        long double v = pw * static_cast<long double>(P.terms[t].coeff);
        if (!(fabsl(v) <= 9.007199254740992e15L))
            throw std::overflow_error("eval: term " + std::to_string(t) +
                                      " exceeds exact fractional-part range");
        vals.push_back(v);
    }
    long double acc = vals.back();
    for (std::size_t t = vals.size() - 1; t-- > 0;) acc = vals[t] * floorl(acc + 0.5L);
    long double f = acc - floorl(acc);
    if (f < 0.0L) f = 0.0L;
    if (f >= 1.0L) f = 0.0L;
    return static_cast<double>(f);
}

void NilBohrNbhd::validate() const {
    if (!(epsilon > 0.0)) throw ConfigError("nil-Bohr neighborhood: epsilon must be positive");
    for (const auto& P : polys) {
        if (P.terms.empty()) throw ConfigError("nil-Bohr neighborhood: empty polynomial");
        if (degree(P) > degree_bound)
            throw ConfigError("nil-Bohr neighborhood: polynomial degree exceeds bound");
    }
}

bool nilbohr_contains(const NilBohrNbhd& N, std::uint64_t n, double tol) {
    for (const auto& P : N.polys)
        if (!(rz_norm(eval(P, n)) < N.epsilon - tol)) return false;
    return true;
}

void to_json(nlohmann::json& j, const SpecialGenPoly& P) {
    auto terms = nlohmann::json::array();
    for (const auto& t : P.terms) terms.push_back({t.exponent, t.coeff});
    j = {{"terms", terms}};
}

void from_json(const nlohmann::json& j, SpecialGenPoly& P) {
    P.terms.clear();
    for (const auto& t : j.at("terms"))
        P.terms.push_back({t.at(0).get<std::uint32_t>(), t.at(1).get<double>()});
}

void to_json(nlohmann::json& j, const NilBohrNbhd& N) {
    j = {{"epsilon", N.epsilon}, {"degree_bound", N.degree_bound}, {"polys", N.polys}};
}

void from_json(const nlohmann::json& j, NilBohrNbhd& N) {
    N.epsilon = j.at("epsilon").get<double>();
    N.degree_bound = j.at("degree_bound").get<std::uint32_t>();
    N.polys = j.at("polys").get<std::vector<SpecialGenPoly>>();
    N.validate();
}

}  // namespace bohrcolor
