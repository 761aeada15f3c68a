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

#ifndef PPF_FIELD_HPP
#define PPF_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace ppf {

class Field;
class Element;

namespace detail {

/// Hard ceiling on |F| = p^m. Everything downstream is exhaustive over the
/// field (or over mu x mu), so desk scale only.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t(1) << 20;

inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// --- dense polynomial helpers over F_p, used only while building a field ---

using PVec = std::vector<std::uint64_t>;  // coefficients, low-to-high

inline void p_trim(PVec& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PVec p_mulmod(const PVec& a, const PVec& b, const PVec& f, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce by monic f
    const std::size_t m = f.size() - 1;
    for (std::size_t i = r.size(); i-- > m;) {
        const std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            r[i - m + j] = (r[i - m + j] + c * (p - f[j]) % p) % p;
    }
    r.resize(std::min(r.size(), m));
    p_trim(r);
    return r;
}

inline PVec p_powmod(PVec base, std::uint64_t e, const PVec& f, std::uint64_t p)
{
    PVec r{1};
    while (e) {
        if (e & 1) r = p_mulmod(r, base, f, p);
        base = p_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline PVec p_gcd(PVec a, PVec b, std::uint64_t p)
{
    p_trim(a);
    p_trim(b);
    while (!b.empty()) {
        // a mod b, b monic-ified on the fly
        const std::uint64_t lead = b.back();
        std::uint64_t inv = 1;  // lead^(p-2)
        {
            std::uint64_t x = lead, e = p - 2, r = 1;
            while (e) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            inv = r;
        }
        while (a.size() >= b.size()) {
            const std::uint64_t c = a.back() * inv % p;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + c * (p - b[j]) % p) % p;
            p_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

/// Monic f of degree m is irreducible over F_p iff x^(p^m) = x mod f and
/// gcd(x^(p^(m/r)) - x, f) is constant for every prime r | m.
inline PVec p_sub(PVec a, const PVec& b, std::uint64_t p)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    p_trim(a);
    return a;
}

/// Monic f of degree m is irreducible over F_p iff x^(p^m) = x mod f and
/// gcd(x^(p^(m/r)) - x, f) is constant for every prime r | m.
inline bool is_irreducible(const PVec& f, std::uint64_t p)
{
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    auto frob_power = [&](std::uint64_t k) {
        PVec r{0, 1};  // x^(p^k) mod f
        for (std::uint64_t i = 0; i < k; ++i) r = p_powmod(r, p, f, p);
        return r;
    };
    const PVec x_red = p_mulmod({0, 1}, {1}, f, p);  // x reduced mod f
    if (frob_power(m) != x_red) return false;
    for (std::uint64_t r : prime_factors(m)) {
        PVec g = p_sub(frob_power(m / r), x_red, p);
        if (p_gcd(g, f, p).size() > 1) return false;
    }
    return true;
}

struct FieldImpl {
    std::uint64_t p = 0;          // characteristic
    std::uint64_t m = 0;          // extension degree over F_p
    std::uint64_t e = 0;          // base_power: base subfield is F_q, q = p^e
    std::uint64_t n = 0;          // p^m
    std::uint64_t q = 0;          // p^e
    std::vector<std::uint64_t> modulus;  // monic, size m+1
    std::uint64_t gen = 0;               // smallest primitive element (code)
    std::vector<std::uint32_t> logt;     // logt[code], code != 0
    std::vector<std::uint32_t> expt;     // expt[k] = gen^k, k in [0, n-1)

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        if (p == 2) return a ^ b;
        std::uint64_t r = 0, pw = 1;
        while (a || b) {
            r += (a % p + b % p) % p * pw;
            a /= p;
            b /= p;
            pw *= p;
        }
        return r;
    }

    std::uint64_t neg(std::uint64_t a) const
    {
        if (p == 2) return a;
        std::uint64_t r = 0, pw = 1;
        while (a) {
            const std::uint64_t d = a % p;
            if (d) r += (p - d) * pw;
            a /= p;
            pw *= p;
        }
        return r;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        if (a == 0 || b == 0) return 0;
        std::uint64_t k = std::uint64_t(logt[a]) + logt[b];
        if (k >= n - 1) k -= n - 1;
        return expt[k];
    }

    std::uint64_t inv(std::uint64_t a) const
    {
        if (a == 0) fail("DivisionByZero", "inverse of zero");
        const std::uint64_t k = logt[a];
        return expt[k == 0 ? 0 : n - 1 - k];
    }

    std::uint64_t pow(std::uint64_t a, std::int64_t x) const
    {
        if (a == 0) {
            if (x < 0) fail("DivisionByZero", "negative power of zero");
            return x == 0 ? 1 : 0;
        }
        const std::int64_t ord = std::int64_t(n) - 1;
        std::int64_t k = std::int64_t(logt[a]) % ord * (x % ord) % ord;
        k %= ord;
        if (k < 0) k += ord;
        return expt[k];
    }

    std::uint64_t frob(std::uint64_t a) const { return pow(a, std::int64_t(q)); }

    // schoolbook product in F_p[x]/(modulus); only used to bootstrap the tables
    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const
    {
        PVec va, vb;
        for (std::uint64_t x = a; x; x /= p) va.push_back(x % p);
        for (std::uint64_t x = b; x; x /= p) vb.push_back(x % p);
        PVec r = p_mulmod(va, vb, modulus, p);
        std::uint64_t c = 0, pw = 1;
        for (std::uint64_t d : r) {
            c += d * pw;
            pw *= p;
        }
        return c;
    }
};

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

const FieldImpl* intern_field(std::uint64_t p, std::uint64_t m, std::uint64_t e,
                              std::optional<std::vector<std::uint64_t>> modulus);

}  // namespace detail

/// An element of a finite field, identified by its coordinate vector with
/// respect to the power basis of the field modulus (encoded as a base-p
/// integer, low digit = constant coordinate). Immutable value type.
class Element {
public:
    Element() = default;

    std::uint64_t code() const { return code_; }

    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    std::vector<std::uint64_t> coords() const
    {
        std::vector<std::uint64_t> c(f_->m, 0);
        std::uint64_t x = code_;
        for (std::size_t i = 0; i < f_->m && x; ++i) {
            c[i] = x % f_->p;
            x /= f_->p;
        }
        return c;
    }

    Element operator+(const Element& o) const { return make(same(o), f_->add(code_, o.code_)); }
    Element operator-(const Element& o) const { return make(same(o), f_->sub(code_, o.code_)); }
    Element operator*(const Element& o) const { return make(same(o), f_->mul(code_, o.code_)); }
    Element operator/(const Element& o) const
    {
        same(o);
        if (o.code_ == 0) fail("DivisionByZero", "division by zero");
        return make(f_, f_->mul(code_, f_->inv(o.code_)));
    }
    Element operator-() const { return make(f_, f_->neg(code_)); }

    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }
    Element& operator/=(const Element& o) { return *this = *this / o; }

    Element pow(std::int64_t x) const { return make(f_, f_->pow(code_, x)); }
    Element inv() const { return make(f_, f_->inv(code_)); }

    /// a^q, q the order of the designated base subfield.
    Element frobenius() const { return make(f_, f_->frob(code_)); }

    /// a lies in F_q iff a^q = a.
    bool in_base_subfield() const { return f_->frob(code_) == code_; }

    bool operator==(const Element& o) const { return f_ == o.f_ && code_ == o.code_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Canonical element order (by code). Only meaningful within one field.
    bool operator<(const Element& o) const { return code_ < o.code_; }

    /// Comma-joined base-p coordinates, low-to-high, e.g. "0,1" for the
    /// power-basis generator of F_9.
    std::string str() const
    {
        std::ostringstream os;
        auto c = coords();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        return os.str();
    }

    Field field() const;

private:
    friend class Field;
    friend struct ElementAccess;

    static Element make(const detail::FieldImpl* f, std::uint64_t code)
    {
        Element x;
        x.f_ = f;
        x.code_ = code;
        return x;
    }

    const detail::FieldImpl* same(const Element& o) const
    {
        if (f_ != o.f_) fail("MixedFields", "operands belong to different fields");
        return f_;
    }

    const detail::FieldImpl* f_ = nullptr;
    std::uint64_t code_ = 0;
};

/// A finite field F_{p^m} with a designated base subfield F_q, q = p^e, e | m.
/// The intended setting is the tower F_q inside F_{q^2} (m = 2e) or F_{q^3}
/// (m = 3e). Fields are interned: equal parameters yield the same identity.
class Field {
public:
    Field(std::uint64_t p, std::uint64_t m, std::uint64_t base_power,
          std::optional<std::vector<std::uint64_t>> modulus = std::nullopt)
        : f_(detail::intern_field(p, m, base_power, std::move(modulus)))
    {
    }

    /// Parse "p^m/e[:c0,c1,...,cm]" (modulus coefficients low-to-high).
    static Field from_spec(std::string_view spec);

    std::uint64_t characteristic() const { return f_->p; }
    std::uint64_t ext_degree() const { return f_->m; }
    std::uint64_t base_power() const { return f_->e; }
    std::uint64_t size() const { return f_->n; }
    std::uint64_t base_order() const { return f_->q; }                 // q
    std::uint64_t tower_degree() const { return f_->m / f_->e; }      // kappa
    const std::vector<std::uint64_t>& modulus() const { return f_->modulus; }

    /// Order of the norm-one subgroup mu = {x : x^((n-1)/(q-1)) = 1}; this is
    /// q+1 for F_{q^2} and q^2+q+1 for F_{q^3}.
    std::uint64_t mu_order() const { return (f_->n - 1) / (f_->q - 1); }

    Element zero() const { return Element::make(f_, 0); }
    Element one() const { return Element::make(f_, 1); }

    Element from_code(std::uint64_t code) const
    {
        if (code >= f_->n) fail("BadElement", "element code out of range");
        return Element::make(f_, code);
    }

    Element from_coords(const std::vector<std::uint64_t>& c) const
    {
        if (c.size() > f_->m) fail("BadElement", "too many coordinates");
        std::uint64_t code = 0, pw = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= f_->p) fail("BadElement", "coordinate not reduced mod p");
            code += c[i] * pw;
            pw *= f_->p;
        }
        return Element::make(f_, code);
    }

    /// Integer embedding of the prime subfield.
    Element from_int(std::int64_t v) const
    {
        std::int64_t r = v % std::int64_t(f_->p);
        if (r < 0) r += std::int64_t(f_->p);
        return Element::make(f_, std::uint64_t(r));
    }

    Element parse_element(std::string_view s) const;

    /// Smallest primitive element in canonical element order.
    Element generator() const { return Element::make(f_, f_->gen); }

    std::vector<Element> elements() const
    {
        std::vector<Element> v;
        v.reserve(f_->n);
        for (std::uint64_t c = 0; c < f_->n; ++c) v.push_back(Element::make(f_, c));
        return v;
    }

    /// The d elements x with x^d = 1, enumerated as g^(k*(n-1)/d), k = 0..d-1.
    std::vector<Element> mu_subgroup(std::uint64_t d) const
    {
        if (d == 0 || (f_->n - 1) % d != 0)
            fail("NotADivisor", "subgroup order must divide the multiplicative group order");
        const std::uint64_t step = (f_->n - 1) / d;
        std::vector<Element> v;
        v.reserve(d);
        std::uint64_t cur = 1;
        const std::uint64_t gstep = f_->expt[step % (f_->n - 1)];
        for (std::uint64_t k = 0; k < d; ++k) {
            v.push_back(Element::make(f_, cur));
            cur = f_->mul(cur, gstep);
        }
        return v;
    }

    std::vector<Element> mu() const { return mu_subgroup(mu_order()); }

    /// The base subfield F_q, sorted in canonical element order.
    std::vector<Element> base_subfield() const
    {
        std::vector<Element> v;
        v.push_back(zero());
        auto nz = mu_subgroup(f_->q - 1);
        v.insert(v.end(), nz.begin(), nz.end());
        std::sort(v.begin() + 1, v.end());
        return v;
    }

    bool operator==(const Field& o) const { return f_ == o.f_; }
    bool operator!=(const Field& o) const { return f_ != o.f_; }

    std::string spec() const
    {
        std::ostringstream os;
        os << f_->p << '^' << f_->m << '/' << f_->e << ':';
        for (std::size_t i = 0; i < f_->modulus.size(); ++i) {
            if (i) os << ',';
            os << f_->modulus[i];
        }
        return os.str();
    }

    const detail::FieldImpl* impl() const { return f_; }

private:
    friend class Element;
    explicit Field(const detail::FieldImpl* f) : f_(f) {}
    const detail::FieldImpl* f_;
};

inline Field Element::field() const { return Field(f_); }

namespace detail {

inline std::unique_ptr<FieldImpl> build_field(std::uint64_t p, std::uint64_t m, std::uint64_t e,
                                              std::optional<std::vector<std::uint64_t>> modulus)
{
    if (!is_prime_u64(p)) fail("NonPrime", "characteristic must be prime");
    if (m == 0) fail("BadTower", "extension degree must be positive");
    if (e == 0 || m % e != 0) fail("BadTower", "base_power must divide the extension degree");
    {
        std::uint64_t n = 1;
        for (std::uint64_t i = 0; i < m; ++i) {
            n *= p;
            if (n > kMaxFieldSize) fail("TooLarge", "p^m exceeds the supported ceiling 2^20");
        }
    }
    auto impl = std::make_unique<FieldImpl>();
    impl->p = p;
    impl->m = m;
    impl->e = e;
    impl->n = ipow(p, m);
    impl->q = ipow(p, e);

    if (modulus) {
        auto& f = *modulus;
        if (f.size() != m + 1 || f.back() != 1)
            fail("ReducibleModulus", "modulus must be monic of degree m");
        for (auto c : f)
            if (c >= p) fail("ReducibleModulus", "modulus coefficients must be reduced mod p");
        if (!is_irreducible(f, p)) fail("ReducibleModulus", "modulus is reducible over F_p");
        impl->modulus = f;
    } else {
        // smallest monic irreducible in lexicographic coefficient order
        // (c0, c1, ..., c_{m-1})
        std::vector<std::uint64_t> f(m + 1, 0);
        f[m] = 1;
        bool found = false;
        const std::uint64_t total = ipow(p, m);
        for (std::uint64_t t = 0; t < total && !found; ++t) {
            std::uint64_t x = t;
            for (std::size_t i = 0; i < m; ++i) {
                f[m - 1 - i] = x % p;  // c0 varies slowest
                x /= p;
            }
            if (is_irreducible(f, p)) found = true;
        }
        if (!found) fail("ReducibleModulus", "no irreducible modulus found");  // cannot happen
        impl->modulus = f;
    }

    // smallest primitive element, then log/exp tables
    const std::uint64_t ord = impl->n - 1;
    auto factors = prime_factors(ord);
    auto pow_raw = [&](std::uint64_t a, std::uint64_t x) {
        std::uint64_t r = 1;
        while (x) {
            if (x & 1) r = impl->mul_raw(r, a);
            a = impl->mul_raw(a, a);
            x >>= 1;
        }
        return r;
    };
    std::uint64_t g = 0;
    for (std::uint64_t c = 1; c < impl->n; ++c) {
        bool prim = true;
        for (auto r : factors)
            if (pow_raw(c, ord / r) == 1) {
                prim = false;
                break;
            }
        if (prim) {
            g = c;
            break;
        }
    }
    impl->gen = g;
    impl->expt.assign(ord, 0);
    impl->logt.assign(impl->n, 0);
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < ord; ++k) {
        impl->expt[k] = std::uint32_t(cur);
        impl->logt[cur] = std::uint32_t(k);
        cur = impl->mul_raw(cur, g);
    }
    return impl;
}

inline const FieldImpl* intern_field(std::uint64_t p, std::uint64_t m, std::uint64_t e,
                                     std::optional<std::vector<std::uint64_t>> modulus)
{
    using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::vector<std::uint64_t>>;
    static std::mutex mu;
    static std::vector<std::pair<Key, std::unique_ptr<FieldImpl>>> cache;

    auto built = build_field(p, m, e, std::move(modulus));
    Key key{p, m, e, built->modulus};
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [k, v] : cache)
        if (k == key) return v.get();
    cache.emplace_back(std::move(key), std::move(built));
    return cache.back().second.get();
}

}  // namespace detail

inline Field Field::from_spec(std::string_view spec)
{
    // "p^m/e[:c0,c1,...,cm]"
    auto caret = spec.find('^');
    auto slash = spec.find('/');
    if (caret == std::string_view::npos || slash == std::string_view::npos || slash < caret)
        fail("BadFieldSpec", "expected p^m/e[:c0,c1,...]");
    auto colon = spec.find(':');
    auto to_u64 = [](std::string_view s) -> std::uint64_t {
        if (s.empty()) fail("BadFieldSpec", "empty number in field spec");
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') fail("BadFieldSpec", "malformed number in field spec");
            v = v * 10 + std::uint64_t(c - '0');
        }
        return v;
    };
    std::uint64_t p = to_u64(spec.substr(0, caret));
    std::uint64_t m = to_u64(spec.substr(caret + 1, slash - caret - 1));
    std::uint64_t e;
    std::optional<std::vector<std::uint64_t>> mod;
    if (colon == std::string_view::npos) {
        e = to_u64(spec.substr(slash + 1));
    } else {
        e = to_u64(spec.substr(slash + 1, colon - slash - 1));
        std::vector<std::uint64_t> cs;
        std::string_view rest = spec.substr(colon + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            cs.push_back(to_u64(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        mod = std::move(cs);
    }
    return Field(p, m, e, std::move(mod));
}

inline Element Field::parse_element(std::string_view s) const
{
    std::vector<std::uint64_t> cs;
    while (!s.empty()) {
        auto comma = s.find(',');
        std::string_view tok = s.substr(0, comma);
        std::uint64_t v = 0;
        if (tok.empty()) fail("BadElement", "empty coordinate");
        for (char c : tok) {
            if (c < '0' || c > '9') fail("BadElement", "malformed coordinate");
            v = v * 10 + std::uint64_t(c - '0');
        }
        cs.push_back(v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return from_coords(cs);
}

}  // namespace ppf

#endif
