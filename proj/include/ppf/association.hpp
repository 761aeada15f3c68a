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

#ifndef PPF_ASSOCIATION_HPP
#define PPF_ASSOCIATION_HPP

#include <optional>

#include "poly.hpp"

// The beta-associated relation between equal-degree polynomials L, M over
// F_{q^2}: L(x)^q = beta * x^(-deg L) * M(x) for every x in mu_{q+1}, and its
// single-polynomial variant L(x)^q = beta * x^(-t) * L(x). Identities "for
// every x in mu" are decided by reduction modulo x^(q+1) - 1, which is exact:
// distinct reduced polynomials of degree <= q cannot agree on all q+1 points.
// The same code serves the F_{q^3} tower with mu of order q^2 + q + 1.

namespace ppf {

struct AssociationCertificate {
    enum class Kind { pair, self };
    Kind kind;
    Element beta;       // in mu
    std::uint64_t t;    // self kind; for pair kind this is deg(L)
};

inline bool in_mu(const Element& b)
{
    return !b.is_zero() && b.pow(std::int64_t(b.field().mu_order())).is_one();
}

inline void require_beta_in_mu(const Element& beta)
{
    if (!in_mu(beta)) fail("BetaNotInMu", "beta must satisfy beta^(q+1) = 1");
}

/// L ~_beta M per Definition of the pair relation: requires deg L = deg M,
/// L != M, beta in mu.
inline bool is_beta_associated(const Polynomial& l, const Polynomial& m, const Element& beta)
{
    if (l.field() != m.field()) fail("MixedFields", "polynomials over different fields");
    if (l.degree() != m.degree()) fail("DegreeMismatch", "associated polynomials must have equal degree");
    if (l == m) fail("EqualPolynomials", "the pair relation requires L != M; use the self relation");
    require_beta_in_mu(beta);
    if (l.is_zero()) return false;
    const std::uint64_t s = l.field().mu_order();
    return mu_reverse(l, std::uint64_t(l.degree())) == reduce_mod_mu(m * beta, s);
}

/// L ~_{beta,t} L.
inline bool is_self_associated(const Polynomial& l, const Element& beta, std::uint64_t t)
{
    if (l.field() != beta.field()) fail("MixedFields", "beta from a different field");
    require_beta_in_mu(beta);
    const std::uint64_t s = l.field().mu_order();
    return mu_reverse(l, t) == reduce_mod_mu(l * beta, s);
}

/// The unique M of degree < mu_order with L ~_beta M, i.e.
/// M = beta^(-1) * mu_reverse(L, deg L). Degree drop (constant term of L
/// zero) leaves deg M < deg L; the relation recheck then reports
/// DegreeMismatch, since the relation is stated at a fixed nominal degree.
inline Polynomial associate_of(const Polynomial& l, const Element& beta)
{
    require_beta_in_mu(beta);
    if (l.is_zero()) fail("ZeroPolynomial", "the zero polynomial has no associate");
    if (std::uint64_t(l.degree()) >= l.field().mu_order())
        fail("DegreeMismatch", "deg(L) must be below the mu order");
    Polynomial m = mu_reverse(l, std::uint64_t(l.degree())) * beta.inv();
    if (m == l)
        fail("SelfAssociatedResult", "L is (beta, deg L)-self-associated; use the self relation");
    return m;
}

/// Search all beta in mu for L ~_beta M; the ratio of two fixed nonzero
/// values, hence unique when it exists.
inline std::optional<Element> find_association(const Polynomial& l, const Polynomial& m)
{
    if (l.field() != m.field()) fail("MixedFields", "polynomials over different fields");
    if (l.degree() != m.degree()) fail("DegreeMismatch", "associated polynomials must have equal degree");
    if (l == m || l.is_zero()) return std::nullopt;
    for (const auto& beta : l.field().mu()) {
        if (is_beta_associated(l, m, beta)) return beta;
    }
    return std::nullopt;
}

/// Self variant: the (beta, t) certificate for given t, if any.
inline std::optional<Element> find_self_association(const Polynomial& l, std::uint64_t t)
{
    for (const auto& beta : l.field().mu()) {
        if (is_self_associated(l, beta, t)) return beta;
    }
    return std::nullopt;
}

}  // namespace ppf

#endif
