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

#ifndef PPF_VERIFY_HPP
#define PPF_VERIFY_HPP

#include <functional>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "mu_maps.hpp"
#include "poly.hpp"

// Ground-truth oracles: exhaustive permutation checking over the full field
// and both directions of the Tucker-Zieve criterion.

namespace ppf {

struct PermutationReport {
    bool is_permutation = false;
    std::optional<std::pair<Element, Element>> collision_witness;  // smallest in code order
    std::uint64_t image_size = 0;
};

namespace detail {

/// Evaluate fn on every code in [0, n) and report bijectivity. Workers get
/// disjoint code ranges and private image marks; merge is deterministic.
inline PermutationReport permutation_scan(const Field& f,
                                          const std::function<std::uint64_t(std::uint64_t)>& fn,
                                          unsigned jobs)
{
    const std::uint64_t n = f.size();
    std::vector<std::uint64_t> image(n);
    if (jobs <= 1) {
        for (std::uint64_t c = 0; c < n; ++c) image[c] = fn(c);
    } else {
        std::vector<std::thread> ts;
        const std::uint64_t chunk = (n + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t lo = w * chunk, hi = std::min(n, lo + chunk);
            ts.emplace_back([&, lo, hi] {
                for (std::uint64_t c = lo; c < hi; ++c) image[c] = fn(c);
            });
        }
        for (auto& t : ts) t.join();
    }
    PermutationReport rep;
    std::vector<std::uint64_t> first(n, n);  // first preimage of each value
    std::uint64_t distinct = 0;
    for (std::uint64_t c = 0; c < n; ++c) {
        const std::uint64_t v = image[c];
        if (first[v] == n) {
            first[v] = c;
            ++distinct;
        } else if (!rep.collision_witness) {
            rep.collision_witness = {f.from_code(first[v]), f.from_code(c)};
        }
    }
    rep.image_size = distinct;
    rep.is_permutation = distinct == n;
    return rep;
}

}  // namespace detail

/// Evaluate P at every point of F and report bijectivity with the smallest
/// colliding pair on failure.
inline PermutationReport is_permutation_of_field(const Polynomial& p, const Field& f,
                                                 unsigned jobs = 1)
{
    if (p.field() != f) fail("MixedFields", "polynomial over a different field");
    return detail::permutation_scan(
        f, [&](std::uint64_t c) { return p(f.from_code(c)).code(); }, jobs);
}

/// Both sides of the Tucker-Zieve criterion, computed independently:
///   lhs = x^r h(x^d) permutes F,
///   rhs = gcd(r, d) = 1 and x^r h(x)^d permutes mu_{(|F|-1)/d}.
/// The theorem says lhs = rhs; callers assert the equivalence.
inline std::pair<bool, bool> check_agw_criterion(std::uint64_t r, std::uint64_t d,
                                                 const Polynomial& h, const Field& f)
{
    if (h.field() != f) fail("MixedFields", "h over a different field");
    if (d == 0 || (f.size() - 1) % d != 0)
        fail("NotADivisor", "d must divide |F| - 1");
    const Polynomial lhs_poly = h.compose_monomial(d).shifted(r);
    const bool lhs = is_permutation_of_field(lhs_poly, f).is_permutation;

    bool rhs = std::gcd(r, d) == 1;
    if (rhs) {
        const std::uint64_t s = (f.size() - 1) / d;
        std::set<std::uint64_t> image;
        for (const auto& x : f.mu_subgroup(s)) {
            const Element v = x.pow(std::int64_t(r)) * h(x).pow(std::int64_t(d));
            if (v.is_zero()) {
                rhs = false;
                break;
            }
            image.insert(v.code());
        }
        rhs = rhs && image.size() == (f.size() - 1) / d;
    }
    return {lhs, rhs};
}

}  // namespace ppf

#endif
