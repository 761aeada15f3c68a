#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ppf/ppf.hpp"

#include <set>

using namespace ppf;
using testutil::fails_with;

TEST_CASE("permutes_mu examples")
{
    Field f9(3, 2, 1);
    const Element u = f9.from_coords({0, 1});
    // beta/x permutes mu for beta in mu
    for (const auto& beta : f9.mu())
        CHECK(permutes_mu(RationalMap(Polynomial::constant(beta), Polynomial::x(f9))));
    // x + u sends 2u to 0: image leaves mu (and in fact hits 0)
    CHECK(!permutes_mu(RationalMap(Polynomial(f9, {u, f9.one()}),
                                   Polynomial::constant(f9.one()))));
    // a pole on mu forces false: denominator x - 1
    CHECK(!permutes_mu(RationalMap(Polynomial::constant(f9.one()),
                                   Polynomial(f9, {-f9.one(), f9.one()}))));
}

TEST_CASE("the standard degree-one family permutes mu")
{
    for (auto spec : {"3^2/1", "2^4/2", "5^2/1"}) {
        Field f = Field::from_spec(spec);
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 40; ++trial) {
            const Element beta = oracles::random_mu(f, rng);
            Element gamma = oracles::random_element(f, rng);
            while (in_mu(gamma)) gamma = oracles::random_element(f, rng);
            RationalMap r(Polynomial::x(f) - Polynomial::constant(gamma.frobenius() * beta),
                          Polynomial::monomial(gamma, 1) - Polynomial::constant(beta));
            CHECK(permutes_mu(r));
        }
    }
}

TEST_CASE("bijects_mu_to_line on the worked F_9 map")
{
    Field f9(3, 2, 1);
    const Element u = f9.from_coords({0, 1});
    // (ux + u)/(x - 1) sends mu_4 = {1, 2, u, 2u} to {inf, 0, 1, 2}
    RationalMap r(Polynomial(f9, {u, u}), Polynomial(f9, {-f9.one(), f9.one()}));
    CHECK(bijects_mu_to_line(r));
    CHECK(r(f9.one()).is_infinity());
    CHECK(r(f9.from_int(2)) == LineValue::finite(f9.zero()));
    CHECK(r(u) == LineValue::finite(f9.one()));
    CHECK(r(-u) == LineValue::finite(f9.from_int(2)));

    // x/1 keeps mu inside mu, which is not contained in the base line
    CHECK(!bijects_mu_to_line(RationalMap(Polynomial::x(f9), Polynomial::constant(f9.one()))));
    // a constant map collapses everything
    CHECK(!bijects_mu_to_line(
        RationalMap(Polynomial::constant(f9.one()), Polynomial::constant(f9.one()))));
}

TEST_CASE("offdiagonal_mu_points is empty exactly for projective injections")
{
    std::mt19937_64 rng(73);
    for (auto spec : {"3^2/1", "2^4/2", "5^2/1"}) {
        Field f = Field::from_spec(spec);
        for (int trial = 0; trial < 40; ++trial) {
            Polynomial l = oracles::random_poly(f, 1 + rng() % 2, rng);
            Polynomial m = oracles::random_poly(f, 1 + rng() % 2, rng);
            RationalMap r(l, m);
            // oracle: projective values at mu, counting multiplicity of each
            bool indeterminate = false;
            std::set<std::string> values;
            std::size_t total = 0;
            for (const auto& x : f.mu()) {
                if (l(x).is_zero() && m(x).is_zero()) {
                    indeterminate = true;
                    break;
                }
                values.insert(r(x).str());
                ++total;
            }
            if (indeterminate) continue;
            CHECK(offdiagonal_mu_points(r).empty() == (values.size() == total));
        }
    }

    // the listed points really lie on the curve, in sorted deterministic order
    Field f9(3, 2, 1);
    RationalMap sq(Polynomial::monomial(f9.one(), 2), Polynomial::constant(f9.one()));
    auto pts = offdiagonal_mu_points(sq);  // x^2 collapses x and -x on mu_4
    CHECK(pts.size() == 4);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        CHECK(pts[i].first.code() <= pts[i + 1].first.code());
    }
    for (const auto& [x, y] : pts) {
        CHECK(x != y);
        CHECK(x.pow(2) == y.pow(2));
    }
}

TEST_CASE("degree-one classification is complete at q = 3")
{
    Field f9(3, 2, 1);
    auto maps = enumerate_degree_one_mu_bijections(f9);
    // the stabilizer of mu among degree-one maps has order q^3 - q = 24
    CHECK(maps.size() == 24);

    auto key_of = [&](auto&& value_at) {
        std::vector<std::uint64_t> key;
        for (const auto& x : f9.mu()) key.push_back(value_at(x));
        return key;
    };
    std::set<std::vector<std::uint64_t>> classified;
    for (const auto& r : maps) {
        CHECK(permutes_mu(r));
        classified.insert(key_of([&](const Element& x) { return r(x).value().code(); }));
    }
    CHECK(classified.size() == maps.size());  // pairwise distinct as functions

    // brute force every (ax+b)/(cx+d) with ad - bc != 0 that permutes mu
    std::set<std::vector<std::uint64_t>> brute;
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; ++b)
            for (std::uint64_t c = 0; c < 9; ++c)
                for (std::uint64_t d = 0; d < 9; ++d) {
                    const Element A = f9.from_code(a), B = f9.from_code(b);
                    const Element C = f9.from_code(c), D = f9.from_code(d);
                    if ((A * D - B * C).is_zero()) continue;
                    RationalMap r(Polynomial(f9, {B, A}), Polynomial(f9, {D, C}));
                    if (permutes_mu(r))
                        brute.insert(key_of([&](const Element& x) { return r(x).value().code(); }));
                }
    CHECK(brute == classified);
}

TEST_CASE("degree-one classification rejects cubic towers")
{
    Field f27 = Field::from_spec("3^3/1");
    CHECK(fails_with("BadTower", [&] { enumerate_degree_one_mu_bijections(f27); }));
}

TEST_CASE("H_offdiagonal_base_points matches the product-over-xi definition")
{
    std::mt19937_64 rng(79);
    for (auto spec : {"3^2/1", "5^2/1", "2^4/2"}) {
        Field f = Field::from_spec(spec);
        for (int trial = 0; trial < 40; ++trial) {
            Polynomial h = oracles::random_poly(f, 1 + rng() % 3, rng);
            auto pts = H_offdiagonal_base_points(h);
            std::set<std::pair<std::uint64_t, std::uint64_t>> got;
            for (const auto& [x, y] : pts) got.insert({x.code(), y.code()});
            // oracle: (x, y) with x != y and H(x) = xi H(y) for some xi in F_q
            std::set<std::pair<std::uint64_t, std::uint64_t>> want;
            for (const auto& x : f.base_subfield())
                for (const auto& y : f.base_subfield()) {
                    if (x == y) continue;
                    for (const auto& xi : f.base_subfield())
                        if (h(x) == xi * h(y)) {
                            want.insert({x.code(), y.code()});
                            break;
                        }
                }
            CHECK(got == want);
        }
    }
}

TEST_CASE("H_sigma_gap_rootfree examples")
{
    Field f9(3, 2, 1);
    const Element u = f9.from_coords({0, 1});
    // H = x + u: H^sigma - H = u^3 - u = u, a nonzero constant
    CHECK(H_sigma_gap_rootfree(Polynomial(f9, {u, f9.one()})));
    // H = ux: the gap ux^3 - ux ... here sigma acts on coefficients only, so
    // gap = (u^3 - u)x = ux, which vanishes at 0
    CHECK(!H_sigma_gap_rootfree(Polynomial(f9, {f9.zero(), u})));
    // base-field coefficients give an identically-zero gap
    CHECK(!H_sigma_gap_rootfree(Polynomial::from_ints(f9, {1, 2, 1})));
}
