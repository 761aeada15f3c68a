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

#ifndef PPF_FAMILIES_HPP
#define PPF_FAMILIES_HPP

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "association.hpp"
#include "mu_maps.hpp"
#include "verify.hpp"

// Constructors for every permutation-polynomial family: each returns the
// expanded polynomial over the top field together with the predicted verdict
// (cheap gcd/membership conditions) and, on request, the exhaustive-check
// verdict. The two must agree whenever the underlying statement is an iff;
// callers treat a mismatch as a hard failure.

namespace ppf {

struct Condition {
    std::string name;
    bool holds;
};

struct ConstructionReport {
    std::string family;
    Field field;
    Polynomial poly;
    bool predicted = false;
    std::optional<bool> verified;
    std::vector<Condition> conditions;
    std::vector<std::pair<std::string, std::string>> meta;  // echoed parameters

    bool mismatch() const { return verified.has_value() && *verified != predicted; }
};

struct GoodPair {
    Polynomial l;
    Polynomial m;
    Element beta;
};

struct ExplicitPair {
    Polynomial l;
    Polynomial m;
    AssociationCertificate cert;
};

namespace detail {

inline bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

/// gcd(a - b, n) for possibly a < b.
inline std::uint64_t gcd_diff(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    const std::uint64_t d = a >= b ? (a - b) % n : (b - a) % n;
    return std::gcd(d, n);
}

inline ConstructionReport finish(ConstructionReport rep, bool verify, unsigned jobs)
{
    if (verify) rep.verified = is_permutation_of_field(rep.poly, rep.field, jobs).is_permutation;
    return rep;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Degree-one seeded families (Zieve's two classes), built directly.

/// x^(n+k(q+1)) ((gamma x^(q-1) - beta)^n - gamma (x^(q-1) - gamma^q beta)^n),
/// a permutation of F_{q^2} iff gcd(n+2k, q-1) = gcd(n, q+1) = 1.
inline ConstructionReport build_zieve11(const Field& f, const Element& beta, const Element& gamma,
                                        std::uint64_t n, std::uint64_t k, bool verify = false,
                                        unsigned jobs = 1)
{
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "zieve11 needs an F_{q^2} tower");
    if (n == 0) fail("BadExponentRange", "n must be positive");
    const std::uint64_t q = f.base_order();
    if (!in_mu(beta)) fail("BadBeta", "beta^(q+1) != 1");
    if (in_mu(gamma)) fail("BadGamma", "gamma must not lie in mu_{q+1}");

    const Polynomial y = Polynomial::x(f);
    const Polynomial g =
        (Polynomial::monomial(gamma, 1) - Polynomial::constant(beta)).pow(n) -
        (y - Polynomial::constant(gamma.frobenius() * beta)).pow(n) * gamma;
    ConstructionReport rep{"zieve11", f, g.compose_monomial(q - 1).shifted(n + k * (q + 1))};
    rep.conditions = {{"gcd(n+2k,q-1)=1", detail::coprime(n + 2 * k, q - 1)},
                      {"gcd(n,q+1)=1", detail::coprime(n, q + 1)}};
    rep.predicted = rep.conditions[0].holds && rep.conditions[1].holds;
    rep.meta = {{"beta", beta.str()}, {"gamma", gamma.str()},
                {"n", std::to_string(n)}, {"k", std::to_string(k)}};
    return detail::finish(std::move(rep), verify, jobs);
}

/// x^(n+k(q+1)) ((delta x^(q-1) - beta delta^q)^n - delta (x^(q-1) - beta)^n),
/// a permutation of F_{q^2} iff gcd(n(n+2k), q-1) = 1.
inline ConstructionReport build_zieve12(const Field& f, const Element& beta, const Element& delta,
                                        std::uint64_t n, std::uint64_t k, bool verify = false,
                                        unsigned jobs = 1)
{
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "zieve12 needs an F_{q^2} tower");
    if (n == 0) fail("BadExponentRange", "n must be positive");
    const std::uint64_t q = f.base_order();
    if (!in_mu(beta)) fail("BadBeta", "beta^(q+1) != 1");
    if (delta.in_base_subfield()) fail("BadDelta", "delta must not lie in F_q");

    const Polynomial y = Polynomial::x(f);
    const Polynomial g =
        (Polynomial::monomial(delta, 1) - Polynomial::constant(beta * delta.frobenius())).pow(n) -
        (y - Polynomial::constant(beta)).pow(n) * delta;
    ConstructionReport rep{"zieve12", f, g.compose_monomial(q - 1).shifted(n + k * (q + 1))};
    rep.conditions = {{"gcd(n(n+2k),q-1)=1",
                       detail::coprime(n, q - 1) && detail::coprime(n + 2 * k, q - 1)}};
    rep.predicted = rep.conditions[0].holds;
    rep.meta = {{"beta", beta.str()}, {"delta", delta.str()},
                {"n", std::to_string(n)}, {"k", std::to_string(k)}};
    return detail::finish(std::move(rep), verify, jobs);
}

// ---------------------------------------------------------------------------
// Associated-pair families.

/// x^(deg L + k(q+1)) M(x^(q-1)) for a beta-associated pair (L, M);
/// permutation iff gcd(deg L + 2k, q-1) = 1 and L/M permutes mu_{q+1}.
inline ConstructionReport build_good_pair(const Polynomial& l, const Polynomial& m,
                                          const Element& beta, std::uint64_t k,
                                          bool verify = false, unsigned jobs = 1)
{
    if (!is_beta_associated(l, m, beta)) fail("NotAssociated", "L and M are not beta-associated");
    const Field f = l.field();
    const std::uint64_t q = f.base_order();
    const std::uint64_t d = std::uint64_t(l.degree());
    ConstructionReport rep{"good-pair", f, m.compose_monomial(q - 1).shifted(d + k * (q + 1))};
    rep.conditions = {{"gcd(deg(L)+2k,q-1)=1", detail::coprime(d + 2 * k, q - 1)},
                      {"L/M permutes mu", permutes_mu(RationalMap(l, m))}};
    rep.predicted = rep.conditions[0].holds && rep.conditions[1].holds;
    rep.meta = {{"L", l.str()}, {"M", m.str()}, {"beta", beta.str()}, {"k", std::to_string(k)}};
    return detail::finish(std::move(rep), verify, jobs);
}

/// x^(n deg L + k(q+1)) (L^n - gamma M^n)(x^(q-1)); permutation iff
/// gcd(n deg L + 2k, q-1) = 1, gcd(n, q+1) = 1 and L/M permutes mu_{q+1}.
/// (The shift exponent n deg L + k(q+1) is congruent to n deg L + 2k mod q-1,
/// and its coprimality to q-1 is what the one-sided criterion needs; the
/// degree-one case n deg L = n recovers the classical statement.)
inline ConstructionReport build_twisted(const Polynomial& l, const Polynomial& m,
                                        const Element& beta, const Element& gamma, std::uint64_t n,
                                        std::uint64_t k, bool verify = false, unsigned jobs = 1)
{
    if (!is_beta_associated(l, m, beta)) fail("NotAssociated", "L and M are not beta-associated");
    if (in_mu(gamma)) fail("BadGamma", "gamma must not lie in mu_{q+1}");
    if (n == 0) fail("BadExponentRange", "n must be positive");
    const Field f = l.field();
    const std::uint64_t q = f.base_order();
    const std::uint64_t d = std::uint64_t(l.degree());
    const Polynomial g = l.pow(n) - m.pow(n) * gamma;
    ConstructionReport rep{"twisted", f, g.compose_monomial(q - 1).shifted(n * d + k * (q + 1))};
    rep.conditions = {{"gcd(n*deg(L)+2k,q-1)=1", detail::coprime(n * d + 2 * k, q - 1)},
                      {"gcd(n,q+1)=1", detail::coprime(n, q + 1)},
                      {"L/M permutes mu", permutes_mu(RationalMap(l, m))}};
    rep.predicted =
        rep.conditions[0].holds && rep.conditions[1].holds && rep.conditions[2].holds;
    rep.meta = {{"L", l.str()},     {"M", m.str()},           {"beta", beta.str()},
                {"gamma", gamma.str()}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
    return detail::finish(std::move(rep), verify, jobs);
}

// ---------------------------------------------------------------------------
// Self-associated families.

namespace detail {

/// Shared core of the x^(s + k*mu) L(x^(q-1)) construction, valid for every
/// tower (mu = q+1 on F_{q^2}, q^2+q+1 on F_{q^3}).
inline ConstructionReport self_assoc_core(std::string family, const Polynomial& l,
                                          const Element& beta, std::uint64_t t, std::uint64_t s,
                                          std::uint64_t k, bool verify, unsigned jobs)
{
    const Field f = l.field();
    const std::uint64_t q = f.base_order();
    const std::uint64_t mu = f.mu_order();
    ConstructionReport rep{std::move(family), f,
                           l.compose_monomial(q - 1).shifted(s + k * mu)};
    rep.conditions = {{"gcd(s-t,mu)=1", gcd_diff(s, t, mu) == 1},
                      {"gcd(s+k*mu,q-1)=1", coprime(s + k * mu, q - 1)},
                      {"L rootfree on mu", l.rootfree_on(f.mu())}};
    rep.predicted =
        rep.conditions[0].holds && rep.conditions[1].holds && rep.conditions[2].holds;
    rep.meta = {{"L", l.str()},
                {"beta", beta.str()},
                {"t", std::to_string(t)},
                {"s", std::to_string(s)},
                {"k", std::to_string(k)}};
    return finish(std::move(rep), verify, jobs);
}

}  // namespace detail

/// x^(s+k(q+1)) L(x^(q-1)) for a (beta, t)-self-associated L; permutation iff
/// gcd(s-t, q+1) = 1, gcd(s+k(q+1), q-1) = 1 and L has no roots in mu_{q+1}.
inline ConstructionReport build_self_assoc(const Polynomial& l, const Element& beta,
                                           std::uint64_t t, std::uint64_t s, std::uint64_t k,
                                           bool verify = false, unsigned jobs = 1)
{
    if (l.field().ext_degree() != 2 * l.field().base_power())
        fail("BadTower", "self-assoc needs an F_{q^2} tower; use ext-self for higher towers");
    if (!is_self_associated(l, beta, t))
        fail("NotSelfAssociated", "L is not (beta,t)-self-associated");
    return detail::self_assoc_core("self-assoc", l, beta, t, s, k, verify, jobs);
}

/// Even q: L = sum_i (a_i x^i + a_i^q x^(q-i)), i <= (q-1)/2, is always
/// (1, q)-self-associated; the permutation construction uses t = q.
inline ConstructionReport build_anydeg(const Polynomial& l, std::uint64_t s, std::uint64_t k,
                                       bool verify = false, unsigned jobs = 1)
{
    const Field f = l.field();
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "anydeg needs an F_{q^2} tower");
    const std::uint64_t q = f.base_order();
    if (q % 2 != 0) fail("BadShape", "the symmetric shape requires even q");
    if (l.degree() > int(q)) fail("BadShape", "degree must be at most q");
    const std::uint64_t half = (q - 1) / 2;
    for (std::uint64_t i = 0; i <= half; ++i)
        if (l.coeff(std::size_t(q - i)) != l.coeff(std::size_t(i)).frobenius())
            fail("BadShape", "coefficient symmetry a_{q-i} = a_i^q violated");
    for (std::uint64_t i = half + 1; i < q - half; ++i)
        if (!l.coeff(std::size_t(i)).is_zero())
            fail("BadShape", "middle coefficients must vanish");
    auto rep = detail::self_assoc_core("anydeg", l, f.one(), q, s, k, verify, jobs);
    return rep;
}

/// Binomial instance h = a x^i + a^q x^(q-i) with (2i+1) | (q+1) and
/// a^((q^2-1)/(2i+1)) != 1; rootfree on mu_{q+1} by construction.
inline ConstructionReport build_ex2(const Field& f, const Element& a, std::uint64_t i,
                                    std::uint64_t s, std::uint64_t k, bool verify = false,
                                    unsigned jobs = 1)
{
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "ex2 needs an F_{q^2} tower");
    const std::uint64_t q = f.base_order();
    if (q % 2 != 0) fail("BadBinomialParams", "requires even q");
    if (a.is_zero() || i > (q - 1) / 2) fail("BadBinomialParams", "need a != 0 and i <= (q-1)/2");
    if ((q + 1) % (2 * i + 1) != 0) fail("BadBinomialParams", "(2i+1) must divide q+1");
    if (a.pow(std::int64_t((f.size() - 1) / (2 * i + 1))).is_one())
        fail("BadBinomialParams", "a^((q^2-1)/(2i+1)) must differ from 1");
    const Polynomial h =
        Polynomial::monomial(a, i) + Polynomial::monomial(a.frobenius(), q - i);
    auto rep = detail::self_assoc_core("ex2", h, f.one(), q, s, k, verify, jobs);
    rep.meta.emplace_back("a", a.str());
    rep.meta.emplace_back("i", std::to_string(i));
    return rep;
}

/// First (s, k) in lexicographic order over [0, q^2)^2 satisfying the two gcd
/// conditions of the self-associated construction.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> find_valid_sk(const Field& f,
                                                                            std::uint64_t t)
{
    const std::uint64_t q = f.base_order();
    const std::uint64_t mu = f.mu_order();
    for (std::uint64_t s = 0; s < q * q; ++s)
        for (std::uint64_t k = 0; k < q * q; ++k)
            if (detail::gcd_diff(s, t, mu) == 1 && detail::coprime(s + k * mu, q - 1))
                return std::make_pair(s, k);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Explicit pairs of degree two and three.

/// Degree-two good pairs (even q): L = (C1+(i+1)C2)x^2 + A1+(i+1)A2,
/// M = (A1+iA2)x^2 + C1+iC2 with i^2 = i + xi, Tr_{F_q|F_2}(xi) = 1.
inline ExplicitPair make_grado2(const Field& f, const Element& xi, const Element& a1,
                                const Element& a2, const Element& c1, const Element& c2)
{
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "grado2 needs an F_{q^2} tower");
    const std::uint64_t q = f.base_order();
    if (q % 2 != 0) fail("ParamConstraintViolated", "q_not_even");
    for (const Element* x : {&xi, &a1, &a2, &c1, &c2})
        if (!x->in_base_subfield()) fail("ParamConstraintViolated", "parameter_not_in_base_field");
    // absolute trace of xi down to F_2
    Element tr = f.zero();
    Element pw = xi;
    for (std::uint64_t b = 1; b < q; b *= 2) {
        tr += pw;
        pw = pw * pw;
    }
    if (!tr.is_one()) fail("ParamConstraintViolated", "trace_not_one");
    // smallest i with i^2 = i + xi
    std::optional<Element> iopt;
    for (std::uint64_t c = 0; c < f.size(); ++c) {
        const Element cand = f.from_code(c);
        if (cand * cand == cand + xi) {
            iopt = cand;
            break;
        }
    }
    if (!iopt) fail("ParamConstraintViolated", "artin_schreier_root_missing");
    const Element i = *iopt;
    const Element one = f.one();
    if (((a1 + i * a2) * (c1 + i * c2)).is_zero()) fail("ParamConstraintViolated", "factor_zero");
    const Element alpha2 = a1 * a1 + a1 * a2 + c1 * c1 + c1 * c2 + xi * (a2 * a2 + c2 * c2);
    if (alpha2.is_zero()) fail("ParamConstraintViolated", "alpha2_zero");

    Polynomial l = Polynomial::monomial(c1 + (i + one) * c2, 2) +
                   Polynomial::constant(a1 + (i + one) * a2);
    Polynomial m = Polynomial::monomial(a1 + i * a2, 2) + Polynomial::constant(c1 + i * c2);
    auto beta = find_association(l, m);
    if (!beta) fail("NotAssociated", "constructed pair failed the association recheck");
    return ExplicitPair{std::move(l), std::move(m),
                        AssociationCertificate{AssociationCertificate::Kind::pair, *beta, 2}};
}

/// Degree-three good pairs (odd q, 3 not dividing q+1) from explicit
/// coefficient formulas; certified (1, k)-good whenever
/// A1(3A1 - 2B1) != 0.
inline ExplicitPair make_grado3(const Field& f, const Element& a1, const Element& b1,
                                const Element& b2)
{
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "grado3 needs an F_{q^2} tower");
    const std::uint64_t q = f.base_order();
    if (q % 2 == 0) fail("ParamConstraintViolated", "q_not_odd");
    if ((q + 1) % 3 == 0) fail("ParamConstraintViolated", "three_divides_qplus1");
    for (const Element* x : {&a1, &b1, &b2})
        if (!x->in_base_subfield()) fail("ParamConstraintViolated", "parameter_not_in_base_field");
    const Element three = f.from_int(3);
    const Element two = f.from_int(2);
    if ((a1 * (three * a1 - two * b1)).is_zero())
        fail("ParamConstraintViolated", "A1(3A1-2B1)_zero");
    // smallest nonzero i with i^q = -i
    std::optional<Element> iopt;
    for (std::uint64_t c = 1; c < f.size(); ++c) {
        const Element cand = f.from_code(c);
        if (cand.frobenius() == -cand) {
            iopt = cand;
            break;
        }
    }
    if (!iopt) fail("ParamConstraintViolated", "antisymmetric_element_missing");
    const Element i = *iopt;

    Polynomial l = Polynomial::monomial(-a1, 3) +
                   Polynomial::monomial(-three * a1 + b1 - i * b2, 2) +
                   Polynomial::monomial(b1 - i * b2, 1) + Polynomial::constant(a1);
    Polynomial m = Polynomial::monomial(a1, 3) + Polynomial::monomial(b1 + i * b2, 2) +
                   Polynomial::monomial(-three * a1 + b1 + i * b2, 1) +
                   Polynomial::constant(-a1);
    if (!is_beta_associated(l, m, f.one()))
        fail("NotAssociated", "constructed pair failed the association recheck");
    return ExplicitPair{std::move(l), std::move(m),
                        AssociationCertificate{AssociationCertificate::Kind::pair, f.one(), 3}};
}

/// The cubic pair L = (x - alpha)(alpha x^2 - 1), M = (alpha x - 1)(x^2 - alpha)
/// with alpha in mu_{q+1}, alpha^2 - 3 alpha + 1 = 0; both polynomials are
/// (alpha^-2, 3)-self-associated and L/M bijects mu_{q+1} onto F_q + infinity.
/// (The inverse root alpha^-1 solves the same quadratic, so the certificate is
/// the square of the companion root.)
inline ExplicitPair make_ex1_cubic(const Field& f)
{
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "ex1 needs an F_{q^2} tower");
    const std::uint64_t p = f.characteristic();
    if (f.base_power() % 2 == 0) fail("ParamConstraintViolated", "base_power_not_odd");
    const std::uint64_t pm = p % 40;
    if (pm != 7 && pm != 17 && pm != 23 && pm != 33)
        fail("ParamConstraintViolated", "bad_characteristic");
    const Element three = f.from_int(3);
    std::optional<Element> alpha;
    for (const auto& x : f.mu()) {
        if ((x * x - three * x + f.one()).is_zero() && (!alpha || x < *alpha)) alpha = x;
    }
    if (!alpha) fail("ParamConstraintViolated", "alpha_not_found");
    const Element a = *alpha;
    const Polynomial x = Polynomial::x(f);
    Polynomial l = (x - Polynomial::constant(a)) *
                   (Polynomial::monomial(a, 2) - Polynomial::constant(f.one()));
    Polynomial m = (Polynomial::monomial(a, 1) - Polynomial::constant(f.one())) *
                   (Polynomial::monomial(f.one(), 2) - Polynomial::constant(a));
    const Element beta = (a * a).inv();
    if (!is_self_associated(l, beta, 3) || !is_self_associated(m, beta, 3))
        fail("NotSelfAssociated", "constructed pair failed the self-association recheck");
    return ExplicitPair{std::move(l), std::move(m),
                        AssociationCertificate{AssociationCertificate::Kind::self, beta, 3}};
}

// ---------------------------------------------------------------------------
// The H-bullet family (generalization through bijections mu -> F_q + inf).

/// x^(dn+k(q+1)) (H bullet L/M)(x^(q-1)) where H is monic of degree n and L,
/// M are each (beta, d)-self-associated; under conditions (i)-(iii) this
/// permutes F_{q^2} iff gcd(dn+k(q+1), q-1) = 1.
inline ConstructionReport build_h_bullet(const Polynomial& h, const Polynomial& l,
                                         const Polynomial& m, const Element& beta, std::uint64_t d,
                                         std::uint64_t k, bool verify = false, unsigned jobs = 1)
{
    const Field f = h.field();
    if (f.ext_degree() != 2 * f.base_power()) fail("BadTower", "h-bullet needs an F_{q^2} tower");
    if (!h.is_monic()) fail("NotMonic", "H must be monic");
    if (l.degree() != int(d) || m.degree() != int(d))
        fail("DegreeMismatch", "L and M must have degree d");
    if (!is_self_associated(l, beta, d) || !is_self_associated(m, beta, d))
        fail("NotSelfAssociated", "L and M must each be (beta,d)-self-associated");
    bool line_bijection = false;
    try {
        line_bijection = bijects_mu_to_line(RationalMap(l, m));
    } catch (const error&) {
        // a shared root of L and M on mu leaves the map undefined there
        line_bijection = false;
    }
    if (!line_bijection)
        fail("ConditionFailed", "(i) L/M is not a bijection from mu to F_q + inf");
    if (!H_offdiagonal_base_points(h).empty())
        fail("ConditionFailed", "(ii) the product curve has off-diagonal F_q points");
    if (!H_sigma_gap_rootfree(h))
        fail("ConditionFailed", "(iii) H^sigma - H has a root in F_q");

    const std::uint64_t q = f.base_order();
    const std::uint64_t n = std::uint64_t(h.degree());
    const Polynomial b = bullet(h, l, m);
    ConstructionReport rep{"h-bullet", f,
                           b.compose_monomial(q - 1).shifted(d * n + k * (q + 1))};
    rep.conditions = {{"gcd(dn+k(q+1),q-1)=1", detail::coprime(d * n + k * (q + 1), q - 1)}};
    rep.predicted = rep.conditions[0].holds;
    rep.meta = {{"H", h.str()}, {"L", l.str()},           {"M", m.str()},
                {"beta", beta.str()}, {"d", std::to_string(d)}, {"k", std::to_string(k)}};
    return detail::finish(std::move(rep), verify, jobs);
}

/// H = g f - gamma f with f monic rootfree over F_q, g monic permuting F_q
/// and gamma^q = -gamma != 0; conditions (ii) and (iii) then hold for free
/// and the construction delegates to build_h_bullet.
inline ConstructionReport build_search_h(const Polynomial& fpoly, const Polynomial& g,
                                         const Element& gamma, const Polynomial& l,
                                         const Polynomial& m, const Element& beta, std::uint64_t d,
                                         std::uint64_t k, bool verify = false, unsigned jobs = 1)
{
    const Field f = fpoly.field();
    if (gamma.is_zero() || gamma.frobenius() != -gamma)
        fail("BadGamma", "gamma must satisfy gamma^q = -gamma, gamma != 0");
    if (!fpoly.is_monic() || !g.is_monic()) fail("NotMonic", "f and g must be monic");
    for (const auto& c : fpoly.coeffs())
        if (!c.in_base_subfield()) fail("ParamConstraintViolated", "f_not_over_base_field");
    for (const auto& c : g.coeffs())
        if (!c.in_base_subfield()) fail("ParamConstraintViolated", "g_not_over_base_field");
    const auto base = f.base_subfield();
    if (!fpoly.rootfree_on(base)) fail("ParamConstraintViolated", "f_has_root_in_base_field");
    {
        std::set<std::uint64_t> image;
        for (const auto& x : base) image.insert(g(x).code());
        if (image.size() != base.size())
            fail("ParamConstraintViolated", "g_not_a_permutation_of_base_field");
    }
    const Polynomial h = (g - Polynomial::constant(gamma)) * fpoly;
    auto rep = build_h_bullet(h, l, m, beta, d, k, verify, jobs);
    rep.family = "search-h";
    rep.meta.emplace_back("f", fpoly.str());
    rep.meta.emplace_back("g", g.str());
    rep.meta.emplace_back("gamma", gamma.str());
    return rep;
}

// ---------------------------------------------------------------------------
// Extension towers F_{q^kappa}, kappa >= 2 (mu of order q^(kappa-1)+...+1).

/// x^(deg L + k*mu) M(x^(q-1)) under the reversed relation
/// M^q = beta x^(-deg L) L on mu; permutation iff gcd(deg L + k*mu, q-1) = 1
/// and L/M permutes mu.
inline ConstructionReport build_ext_general(const Polynomial& l, const Polynomial& m,
                                            const Element& beta, std::uint64_t k,
                                            bool verify = false, unsigned jobs = 1)
{
    const Field f = l.field();
    if (f.tower_degree() < 2) fail("BadTower", "need a proper extension tower");
    require_beta_in_mu(beta);
    if (l.is_zero()) fail("ZeroPolynomial", "L must be nonzero");
    const std::uint64_t mu = f.mu_order();
    const std::uint64_t d = std::uint64_t(l.degree());
    if (mu_reverse(m, d) != reduce_mod_mu(l * beta, mu))
        fail("RelationFailed", "M^q != beta x^(-deg L) L on mu");
    const std::uint64_t q = f.base_order();
    ConstructionReport rep{"ext-general", f, m.compose_monomial(q - 1).shifted(d + k * mu)};
    rep.conditions = {{"gcd(deg(L)+k*mu,q-1)=1", detail::coprime(d + k * mu, q - 1)},
                      {"L/M permutes mu", permutes_mu(RationalMap(l, m))}};
    rep.predicted = rep.conditions[0].holds && rep.conditions[1].holds;
    rep.meta = {{"L", l.str()}, {"M", m.str()}, {"beta", beta.str()}, {"k", std::to_string(k)}};
    return detail::finish(std::move(rep), verify, jobs);
}

/// x^(s + k*mu) L(x^(q-1)) under L^q = beta x^(-t) L on mu; permutation iff
/// gcd(s-t, mu) = 1, gcd(s + k*mu, q-1) = 1 and L is rootfree on mu.
inline ConstructionReport build_ext_self(const Polynomial& l, const Element& beta, std::uint64_t t,
                                         std::uint64_t s, std::uint64_t k, bool verify = false,
                                         unsigned jobs = 1)
{
    const Field f = l.field();
    if (f.tower_degree() < 2) fail("BadTower", "need a proper extension tower");
    if (!is_self_associated(l, beta, t)) fail("RelationFailed", "L^q != beta x^(-t) L on mu");
    auto rep = detail::self_assoc_core("ext-self", l, beta, t, s, k, verify, jobs);
    return rep;
}

/// L_{A,B} = A x^(3kq+3j) + B x^((k+j)q+2j-k) + A^q x^(3jq+3j-3k) + A^(q^2)
/// on the F_{q^3} tower, (1, 3kq+3j)-self-associated on mu_{q^2+q+1}.
inline Polynomial make_lab_k3(const Field& f, std::uint64_t j, std::uint64_t kpar,
                              const Element& a, const Element& b)
{
    if (f.tower_degree() != 3) fail("BadTower", "L_{A,B} lives on an F_{q^3} tower");
    const std::uint64_t q = f.base_order();
    if (j == 0 || j > kpar || 3 * kpar > q) fail("BadExponentRange", "need 0 < j <= k <= q/3");
    if (!b.in_base_subfield()) fail("ParamConstraintViolated", "B_not_in_base_field");
    if (a.is_zero()) fail("ParamConstraintViolated", "A_zero");
    const std::uint64_t e3 = 3 * kpar * q + 3 * j;
    const std::uint64_t e2 = (kpar + j) * q + 2 * j - kpar;
    const std::uint64_t e1 = 3 * j * q + 3 * j - 3 * kpar;
    Polynomial l = Polynomial::monomial(a, e3) + Polynomial::monomial(b, e2) +
                   Polynomial::monomial(a.frobenius(), e1) +
                   Polynomial::constant(a.frobenius().frobenius());
    if (!is_self_associated(l, f.one(), e3))
        fail("RelationFailed", "L_{A,B}^q != x^(-3kq-3j) L_{A,B} on mu");
    return l;
}

inline ConstructionReport build_lab_k3(const Field& f, std::uint64_t j, std::uint64_t kpar,
                                       const Element& a, const Element& b, std::uint64_t s,
                                       std::uint64_t k, bool verify = false, unsigned jobs = 1)
{
    const Polynomial l = make_lab_k3(f, j, kpar, a, b);
    auto rep = build_ext_self(l, f.one(), 3 * kpar * f.base_order() + 3 * j, s, k, verify, jobs);
    rep.family = "lab-k3";
    rep.meta.emplace_back("j", std::to_string(j));
    rep.meta.emplace_back("kpar", std::to_string(kpar));
    rep.meta.emplace_back("A", a.str());
    rep.meta.emplace_back("B", b.str());
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive good-pair search.

/// All (beta, k)-good pairs of the given degree over an F_{q^2} tower, one
/// representative per scalar class: L runs over monic polynomials with
/// nonzero constant term (scaling (L, M) -> (cL, c^q M) preserves goodness
/// and beta), M is derived as beta^(-1) mu_reverse(L, deg L).
inline std::vector<GoodPair> enumerate_good_pairs(const Field& f, std::uint64_t degree,
                                                  std::uint64_t k)
{
    if (f.ext_degree() != 2 * f.base_power())
        fail("BadTower", "good pairs live on an F_{q^2} tower");
    if (degree == 0) fail("BadExponentRange", "degree must be positive");
    const std::uint64_t q = f.base_order();
    const std::uint64_t n = f.size();
    {
        std::uint64_t count = 1;
        for (std::uint64_t i = 0; i < degree; ++i) {
            count *= n;
            if (count > (std::uint64_t(1) << 24)) fail("TooLarge", "good-pair search space too large");
        }
    }
    const bool gcd_ok = detail::coprime(degree + 2 * k, q - 1);
    std::vector<GoodPair> out;
    if (!gcd_ok) return out;  // first goodness condition fails for every pair

    const auto mu = f.mu();
    std::vector<std::uint64_t> codes(degree, 0);  // c_0 .. c_{degree-1}, lex order
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (std::uint64_t i = 0; i < degree; ++i) t *= n;
        return t;
    }();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::uint64_t i = degree; i-- > 0;) {  // c_0 varies slowest
            codes[i] = x % n;
            x /= n;
        }
        if (codes[0] == 0) continue;  // constant term must be nonzero
        std::vector<Element> cs;
        cs.reserve(degree + 1);
        for (auto c : codes) cs.push_back(f.from_code(c));
        cs.push_back(f.one());  // monic
        const Polynomial l(f, std::move(cs));
        if (!l.rootfree_on(mu)) continue;  // a mu-root is shared with M; L/M undefined there
        for (const auto& beta : mu) {
            Polynomial m = mu_reverse(l, degree) * beta.inv();
            if (m.degree() != int(degree) || m == l) continue;
            if (permutes_mu(RationalMap(l, m))) out.push_back(GoodPair{l, m, beta});
        }
    }
    return out;
}

}  // namespace ppf

#endif
