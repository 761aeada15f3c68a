/*
   Copyright 2026 The ppf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PPF_MU_MAPS_HPP
#define PPF_MU_MAPS_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "association.hpp"
#include "poly.hpp"

// Bijection predicates on mu and mu -> F_q union {infinity}, the degree-one
// classification, and the brute-force curve-point scans. All curve conditions
// are decided by exhaustive scans over mu^2 or F_q^2; at desk scale these are
// instant and unconditionally correct.

namespace ppf {

/// True iff x -> L(x)/M(x) maps mu bijectively onto mu. A pole on mu forces
/// false (infinity is not in mu). Common roots are indeterminate.
inline bool permutes_mu(const RationalMap& r)
{
    const Field f = r.field();
    const std::uint64_t s = f.mu_order();
    std::set<std::uint64_t> image;
    for (const auto& x : f.mu()) {
        const LineValue v = r(x);
        if (v.is_infinity()) return false;
        if (!v.value().pow(std::int64_t(s)).is_one()) return false;  // image escapes mu
        image.insert(v.value().code());
    }
    return image.size() == s;
}

/// True iff the projective evaluation over mu_{q+1} hits q+1 distinct values,
/// all in F_q union {infinity}.
inline bool bijects_mu_to_line(const RationalMap& r)
{
    const Field f = r.field();
    std::set<std::uint64_t> image;
    bool seen_inf = false;
    for (const auto& x : f.mu()) {
        const LineValue v = r(x);
        if (v.is_infinity()) {
            if (seen_inf) return false;
            seen_inf = true;
            continue;
        }
        if (!v.value().in_base_subfield()) return false;
        if (!image.insert(v.value().code()).second) return false;
    }
    return image.size() + (seen_inf ? 1 : 0) == f.mu_order();
}

/// Off-diagonal points of the curve (L(x)M(y) - L(y)M(x))/(x - y) = 0 on
/// mu^2, i.e. pairs of distinct points with projectively equal values.
/// Empty iff L/M is injective on mu in the projective sense.
inline std::vector<std::pair<Element, Element>> offdiagonal_mu_points(const RationalMap& r)
{
    const auto mu = r.field().mu();
    std::vector<Element> lv, mv;
    lv.reserve(mu.size());
    mv.reserve(mu.size());
    for (const auto& x : mu) {
        lv.push_back(r.num(x));
        mv.push_back(r.den(x));
    }
    std::vector<std::pair<Element, Element>> pts;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = 0; j < mu.size(); ++j) {
            if (i == j) continue;
            if (lv[i] * mv[j] == lv[j] * mv[i]) pts.emplace_back(mu[i], mu[j]);
        }
    // deterministic order by coordinate codes
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a.first.code() != b.first.code()) return a.first.code() < b.first.code();
        return a.second.code() < b.second.code();
    });
    return pts;
}

/// Every degree-one rational map that permutes mu_{q+1}: beta/x with beta in
/// mu_{q+1}, and (x - gamma^q beta)/(gamma x - beta) with beta in mu_{q+1}
/// and gamma in F_{q^2} minus mu_{q+1}. Deduplicated as functions on mu.
inline std::vector<RationalMap> enumerate_degree_one_mu_bijections(const Field& f)
{
    if (f.ext_degree() != 2 * f.base_power())
        fail("BadTower", "degree-one classification requires an F_{q^2} tower");
    const auto mu = f.mu();
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<RationalMap> out;
    auto emit = [&](Polynomial l, Polynomial m) {
        RationalMap r(std::move(l), std::move(m));
        std::vector<std::uint64_t> key;
        key.reserve(mu.size());
        for (const auto& x : mu) key.push_back(r(x).value().code());
        if (seen.insert(std::move(key)).second) out.push_back(std::move(r));
    };
    for (const auto& beta : mu) emit(Polynomial::constant(beta), Polynomial::x(f));
    for (const auto& beta : mu) {
        for (std::uint64_t c = 0; c < f.size(); ++c) {
            const Element gamma = f.from_code(c);
            if (in_mu(gamma)) continue;
            // (x - gamma^q beta)/(gamma x - beta)
            Polynomial l = Polynomial::x(f) - Polynomial::constant(gamma.frobenius() * beta);
            Polynomial m = Polynomial::monomial(gamma, 1) - Polynomial::constant(beta);
            emit(std::move(l), std::move(m));
        }
    }
    return out;
}

/// Off-diagonal F_q-rational points of prod_{xi in F_q} (H(x) - xi H(y)):
/// pairs (x, y) in F_q^2, x != y, with H(x) = xi H(y) for some xi in F_q.
/// The xi = 0 factor makes any (x, y) with H(x) = 0 a point.
inline std::vector<std::pair<Element, Element>> H_offdiagonal_base_points(const Polynomial& h)
{
    const auto base = h.field().base_subfield();
    std::vector<Element> hv;
    hv.reserve(base.size());
    for (const auto& x : base) hv.push_back(h(x));
    std::vector<std::pair<Element, Element>> pts;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j) {
            if (i == j) continue;
            bool hit;
            if (hv[j].is_zero())
                hit = hv[i].is_zero();
            else
                hit = (hv[i] / hv[j]).in_base_subfield();
            if (hit) pts.emplace_back(base[i], base[j]);
        }
    return pts;
}

/// True iff (H^sigma - H)(x) != 0 for every x in F_q.
inline bool H_sigma_gap_rootfree(const Polynomial& h)
{
    const Polynomial d = h.sigma() - h;
    if (d.is_zero()) return false;
    return d.rootfree_on(h.field().base_subfield());
}

}  // namespace ppf

#endif
