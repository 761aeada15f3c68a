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

#ifndef PPF_POLY_HPP
#define PPF_POLY_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace ppf {

/// Dense univariate polynomial over a Field. Coefficient index = exponent,
/// no trailing zeros; the zero polynomial has an empty coefficient vector and
/// degree() = -1 (sentinel).
class Polynomial {
public:
    explicit Polynomial(Field f) : field_(f) {}

    Polynomial(Field f, std::vector<Element> coeffs) : field_(f), cs_(std::move(coeffs))
    {
        for (const auto& c : cs_)
            if (c.field() != field_) fail("MixedFields", "coefficient from a different field");
        trim();
    }

    static Polynomial zero(Field f) { return Polynomial(f); }

    static Polynomial constant(const Element& c)
    {
        Polynomial p(c.field());
        p.cs_ = {c};
        p.trim();
        return p;
    }

    static Polynomial monomial(const Element& c, std::uint64_t exp)
    {
        Polynomial p(c.field());
        if (!c.is_zero()) {
            p.cs_.assign(exp + 1, c.field().zero());
            p.cs_[exp] = c;
        }
        return p;
    }

    /// x
    static Polynomial x(Field f) { return monomial(f.one(), 1); }

    /// Coefficients given as small integers mod p (prime subfield values),
    /// low-to-high.
    static Polynomial from_ints(Field f, const std::vector<std::int64_t>& cs)
    {
        std::vector<Element> v;
        v.reserve(cs.size());
        for (auto c : cs) v.push_back(f.from_int(c));
        return Polynomial(f, std::move(v));
    }

    Field field() const { return field_; }

    bool is_zero() const { return cs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const { return int(cs_.size()) - 1; }

    Element coeff(std::size_t i) const { return i < cs_.size() ? cs_[i] : field_.zero(); }

    Element leading() const
    {
        if (cs_.empty()) fail("ZeroPolynomial", "zero polynomial has no leading coefficient");
        return cs_.back();
    }

    const std::vector<Element>& coeffs() const { return cs_; }

    bool is_monic() const { return !cs_.empty() && cs_.back().is_one(); }

    /// Horner evaluation; sparse fast path through the exp/log tables when the
    /// polynomial has few nonzero terms.
    Element operator()(const Element& x) const
    {
        if (x.field() != field_) fail("MixedFields", "evaluation point from a different field");
        if (cs_.empty()) return field_.zero();
        if (x.is_zero()) return cs_[0];
        std::size_t nonzero = 0;
        for (const auto& c : cs_)
            if (!c.is_zero()) ++nonzero;
        if (nonzero * 4 < cs_.size()) {
            Element acc = field_.zero();
            for (std::size_t i = 0; i < cs_.size(); ++i)
                if (!cs_[i].is_zero()) acc += cs_[i] * x.pow(std::int64_t(i));
            return acc;
        }
        Element acc = cs_.back();
        for (std::size_t i = cs_.size() - 1; i-- > 0;) acc = acc * x + cs_[i];
        return acc;
    }

    Polynomial operator+(const Polynomial& o) const
    {
        same(o);
        std::vector<Element> v(std::max(cs_.size(), o.cs_.size()), field_.zero());
        for (std::size_t i = 0; i < cs_.size(); ++i) v[i] = cs_[i];
        for (std::size_t i = 0; i < o.cs_.size(); ++i) v[i] += o.cs_[i];
        return Polynomial(field_, std::move(v));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator-() const
    {
        Polynomial r(field_);
        r.cs_.reserve(cs_.size());
        for (const auto& c : cs_) r.cs_.push_back(-c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const
    {
        same(o);
        if (cs_.empty() || o.cs_.empty()) return Polynomial(field_);
        std::vector<Element> v(cs_.size() + o.cs_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < cs_.size(); ++i) {
            if (cs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.cs_.size(); ++j) v[i + j] += cs_[i] * o.cs_[j];
        }
        return Polynomial(field_, std::move(v));
    }

    Polynomial operator*(const Element& c) const { return *this * constant(c); }

    Polynomial pow(std::uint64_t n) const
    {
        Polynomial r = constant(field_.one());
        Polynomial b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    /// P(Q(x)).
    Polynomial compose(const Polynomial& q) const
    {
        same(q);
        Polynomial acc(field_);
        for (std::size_t i = cs_.size(); i-- > 0;) acc = acc * q + constant(cs_[i]);
        return acc;
    }

    /// P(x^e); cheaper than compose for monomial substitution.
    Polynomial compose_monomial(std::uint64_t e) const
    {
        if (cs_.empty() || e == 0) {
            // P(1) as a constant when e == 0
            if (e == 0 && !cs_.empty()) return constant((*this)(field_.one()));
            return Polynomial(field_);
        }
        std::vector<Element> v((cs_.size() - 1) * e + 1, field_.zero());
        for (std::size_t i = 0; i < cs_.size(); ++i) v[i * e] = cs_[i];
        return Polynomial(field_, std::move(v));
    }

    /// x^e * P.
    Polynomial shifted(std::uint64_t e) const
    {
        if (cs_.empty()) return Polynomial(field_);
        std::vector<Element> v(cs_.size() + e, field_.zero());
        for (std::size_t i = 0; i < cs_.size(); ++i) v[i + e] = cs_[i];
        return Polynomial(field_, std::move(v));
    }

    /// Remainder of *this by q.
    Polynomial mod(const Polynomial& q) const
    {
        same(q);
        if (q.is_zero()) fail("ModByZero", "division by the zero polynomial");
        Polynomial r = *this;
        const Element lead_inv = q.leading().inv();
        while (r.degree() >= q.degree()) {
            const Element c = r.leading() * lead_inv;
            const std::size_t shift = std::size_t(r.degree() - q.degree());
            for (std::size_t j = 0; j < q.cs_.size(); ++j) r.cs_[shift + j] -= c * q.cs_[j];
            r.trim();
        }
        return r;
    }

    /// Coefficientwise Frobenius a_i -> a_i^q (written H^sigma).
    Polynomial sigma() const
    {
        Polynomial r(field_);
        r.cs_.reserve(cs_.size());
        for (const auto& c : cs_) r.cs_.push_back(c.frobenius());
        return r;
    }

    bool operator==(const Polynomial& o) const { return field_ == o.field_ && cs_ == o.cs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    bool operator<(const Polynomial& o) const
    {
        if (cs_.size() != o.cs_.size()) return cs_.size() < o.cs_.size();
        for (std::size_t i = cs_.size(); i-- > 0;) {
            if (cs_[i].code() != o.cs_[i].code()) return cs_[i].code() < o.cs_[i].code();
        }
        return false;
    }

    std::vector<Element> roots_in(const std::vector<Element>& domain) const
    {
        std::vector<Element> r;
        for (const auto& x : domain)
            if ((*this)(x).is_zero()) r.push_back(x);
        return r;
    }

    bool rootfree_on(const std::vector<Element>& domain) const
    {
        for (const auto& x : domain)
            if ((*this)(x).is_zero()) return false;
        return true;
    }

    /// "c0,c1,...,cn" where each c is an element string (m coordinates), so
    /// the flat list has (deg+1)*m comma-separated numbers.
    std::string str() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < cs_.size(); ++i) {
            if (i) os << ',';
            os << cs_[i].str();
        }
        if (cs_.empty()) os << field_.zero().str();
        return os.str();
    }

    /// Dense "c0,c1,..." (groups of m numbers) or sparse "e:c0,c1,...;e:...".
    static Polynomial parse(Field f, std::string_view s);

private:
    void trim()
    {
        while (!cs_.empty() && cs_.back().is_zero()) cs_.pop_back();
    }

    void same(const Polynomial& o) const
    {
        if (field_ != o.field_) fail("MixedFields", "polynomials over different fields");
    }

    Field field_;
    std::vector<Element> cs_;
};

inline Polynomial operator*(const Element& c, const Polynomial& p) { return p * c; }

inline Polynomial Polynomial::parse(Field f, std::string_view s)
{
    const std::uint64_t m = f.ext_degree();
    std::vector<Element> cs;
    if (s.find(':') != std::string_view::npos) {
        // sparse form e:coeff;e:coeff
        std::vector<std::pair<std::uint64_t, Element>> terms;
        std::uint64_t maxe = 0;
        while (!s.empty()) {
            auto semi = s.find(';');
            std::string_view term = s.substr(0, semi);
            auto colon = term.find(':');
            if (colon == std::string_view::npos) fail("BadPolynomial", "sparse term missing ':'");
            std::uint64_t e = 0;
            for (char c : term.substr(0, colon)) {
                if (c < '0' || c > '9') fail("BadPolynomial", "malformed exponent");
                e = e * 10 + std::uint64_t(c - '0');
            }
            terms.emplace_back(e, f.parse_element(term.substr(colon + 1)));
            maxe = std::max(maxe, e);
            if (semi == std::string_view::npos) break;
            s.remove_prefix(semi + 1);
        }
        std::vector<Element> v(maxe + 1, f.zero());
        for (auto& [e, c] : terms) v[e] += c;
        return Polynomial(f, std::move(v));
    }
    // dense: flat comma list in groups of m
    std::vector<std::uint64_t> nums;
    while (!s.empty()) {
        auto comma = s.find(',');
        std::string_view tok = s.substr(0, comma);
        std::uint64_t v = 0;
        if (tok.empty()) fail("BadPolynomial", "empty coordinate");
        for (char c : tok) {
            if (c < '0' || c > '9') fail("BadPolynomial", "malformed coordinate");
            v = v * 10 + std::uint64_t(c - '0');
        }
        nums.push_back(v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (nums.empty() || nums.size() % m != 0)
        fail("BadPolynomial", "coordinate count must be a multiple of the extension degree");
    std::vector<Element> ecs;
    for (std::size_t i = 0; i < nums.size(); i += m) {
        std::vector<std::uint64_t> coord(nums.begin() + std::ptrdiff_t(i),
                                         nums.begin() + std::ptrdiff_t(i + m));
        ecs.push_back(f.from_coords(coord));
    }
    return Polynomial(f, std::move(ecs));
}

/// Reduce P modulo x^s - 1 (fold exponents mod s). Functions on mu_s are in
/// bijection with reduced polynomials of degree < s.
inline Polynomial reduce_mod_mu(const Polynomial& p, std::uint64_t s)
{
    std::vector<Element> v(s, p.field().zero());
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) v[i % s] += cs[i];
    return Polynomial(p.field(), std::move(v));
}

/// The unique polynomial R of degree < s with R(x) = L(x)^q * x^t for all
/// x in mu_s, where s = field.mu_order(). On mu_s one has x^q = x^(q mod s),
/// so L(x)^q = sum a_i^q x^(q i mod s); for the main tower F_{q^2} this is the
/// sigma-reversal of L (x^q = 1/x on mu_{q+1}).
inline Polynomial mu_reverse(const Polynomial& l, std::uint64_t t)
{
    const Field f = l.field();
    const std::uint64_t s = f.mu_order();
    const std::uint64_t q = f.base_order();
    std::vector<Element> v(s, f.zero());
    const auto& cs = l.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        const std::uint64_t e = (t % s + q % s * (i % s)) % s;
        v[e] += cs[i].frobenius();
    }
    return Polynomial(f, std::move(v));
}

/// N bullet L/M = M^deg(N) * N(L/M) = sum n_i L^i M^(deg N - i).
/// Requires deg(L) = deg(M) and N nonzero.
inline Polynomial bullet(const Polynomial& n, const Polynomial& l, const Polynomial& m)
{
    if (n.field() != l.field() || n.field() != m.field())
        fail("MixedFields", "bullet operands over different fields");
    if (n.is_zero()) fail("ZeroPolynomial", "bullet is undefined for N = 0");
    if (l.degree() != m.degree()) fail("DegreeMismatch", "bullet requires deg(L) = deg(M)");
    const std::size_t dn = std::size_t(n.degree());
    // running powers: L^i * M^(dn-i)
    std::vector<Polynomial> lp{Polynomial::constant(l.field().one())};
    for (std::size_t i = 1; i <= dn; ++i) lp.push_back(lp.back() * l);
    Polynomial acc(n.field());
    Polynomial mp = Polynomial::constant(m.field().one());
    for (std::size_t i = dn + 1; i-- > 0;) {
        if (!n.coeff(i).is_zero()) acc = acc + lp[i] * mp * n.coeff(i);
        if (i > 0) mp = mp * m;
    }
    return acc;
}

/// A value in F_q union {infinity}; infinity is a distinguished symbol, never
/// equal to a field element.
class LineValue {
public:
    static LineValue infinity() { return LineValue(); }
    static LineValue finite(const Element& v) { return LineValue(v); }

    bool is_infinity() const { return !v_.has_value(); }
    const Element& value() const
    {
        if (!v_) fail("BadElement", "infinity has no field value");
        return *v_;
    }

    bool operator==(const LineValue& o) const { return v_ == o.v_; }
    bool operator!=(const LineValue& o) const { return !(*this == o); }
    bool operator<(const LineValue& o) const
    {
        if (is_infinity() != o.is_infinity()) return o.is_infinity();  // finite < infinity
        if (is_infinity()) return false;
        return v_->code() < o.v_->code();
    }

    std::string str() const { return v_ ? v_->str() : std::string("inf"); }

private:
    LineValue() = default;
    explicit LineValue(const Element& v) : v_(v) {}
    std::optional<Element> v_;
};

/// A rational map L/M given by a numerator/denominator pair.
struct RationalMap {
    Polynomial num;
    Polynomial den;

    RationalMap(Polynomial l, Polynomial m) : num(std::move(l)), den(std::move(m))
    {
        if (num.field() != den.field()) fail("MixedFields", "rational map over different fields");
        if (den.is_zero()) fail("ZeroPolynomial", "rational map denominator is zero");
    }

    Field field() const { return num.field(); }

    /// Projective evaluation: L(x)/M(x), infinity at poles; common roots of
    /// L and M are indeterminate.
    LineValue operator()(const Element& x) const
    {
        const Element lv = num(x);
        const Element mv = den(x);
        if (mv.is_zero()) {
            if (lv.is_zero()) fail("IndeterminatePoint", "numerator and denominator both vanish");
            return LineValue::infinity();
        }
        return LineValue::finite(lv / mv);
    }
};

}  // namespace ppf

#endif
