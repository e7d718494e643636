#include "mincode/gf.hpp"

#include <cstdint>
#include <string>

namespace mincode::gf {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p): coefficient vectors, low degree first, no trailing
// zeros except the zero polynomial which is {}.
using Poly = std::vector<Elem>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a mod b, b nonzero with invertible leading coefficient.
Poly poly_mod(std::uint32_t p, Poly a, const Poly& b) {
    a = trim(std::move(a));
    const std::size_t db = b.size() - 1;
    // leading coefficient inverse via Fermat in GF(p)
    std::uint64_t lead = b[db], lead_inv = 1, base = lead, e = p - 2;
    while (e) {
        if (e & 1) lead_inv = lead_inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    while (a.size() > db) {
        std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint64_t sub = c * b[i] % p;
            a[shift + i] = Elem((a[shift + i] + p - sub) % p);
        }
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mul(std::uint32_t p, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = Elem((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return trim(std::move(r));
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<Elem>& poly) {
    Poly f = poly;
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    // Trial division by every monic polynomial of degree 1 .. deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = Elem(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(p, f, g).empty()) return false;
        }
    }
    return true;
}

std::vector<Elem> smallest_irreducible(std::uint32_t p, std::uint32_t h) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < h; ++i) count *= p;
    // Increasing integer code = increasing lex order on (c_0, c_1, ...).
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Elem> g(h + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < h; ++i) {
            g[i] = Elem(c % p);
            c /= p;
        }
        g[h] = 1;
        if (is_irreducible(p, g)) return g;
    }
    throw Error("no irreducible polynomial found (unreachable)");
}

FieldContext FieldContext::make(std::uint32_t p, std::uint32_t h,
                                std::optional<std::vector<Elem>> irreducible) {
    if (p == 2) throw EvenP("p = 2 is outside scope; q must be odd");
    if (!is_prime(p)) throw CompositeP("p = " + std::to_string(p) + " is not prime");
    if (h < 1) throw Error("extension degree h must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        q *= p;
        if (q > (1u << 16)) throw CapExceeded("q = p^h exceeds 2^16");
    }

    FieldContext ctx;
    ctx.p_ = p;
    ctx.h_ = h;
    ctx.q_ = std::uint32_t(q);
    if (h > 1) {
        if (irreducible) {
            std::vector<Elem> f = *irreducible;
            if (f.size() != h + 1 || f[h] != 1)
                throw Reducible("modulus must be monic of degree h");
            for (Elem c : f)
                if (c >= p) throw Reducible("modulus coefficient out of range");
            if (!is_irreducible(p, f)) throw Reducible("supplied polynomial is reducible");
            ctx.irr_ = std::move(f);
        } else {
            ctx.irr_ = smallest_irreducible(p, h);
        }
    } else if (irreducible && !irreducible->empty()) {
        throw Reducible("prime field takes no modulus");
    }
    return ctx;
}

std::vector<Elem> FieldContext::decompose(Elem a) const {
    std::vector<Elem> c(h_, 0);
    for (std::uint32_t i = 0; i < h_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem FieldContext::compose(const std::vector<Elem>& coeffs) const {
    Elem a = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) a = a * p_ + coeffs[i] % p_;
    return a;
}

Elem FieldContext::add(Elem a, Elem b) const {
    if (h_ == 1) return (a + b) % p_;
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < h_; ++i) {
        r += (a % p_ + b % p_) % p_ * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem FieldContext::neg(Elem a) const {
    if (h_ == 1) return (p_ - a) % p_;
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < h_; ++i) {
        r += (p_ - a % p_) % p_ * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem FieldContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldContext::mul(Elem a, Elem b) const {
    if (h_ == 1) return Elem(std::uint64_t(a) * b % p_);
    Poly pa = trim(decompose(a));
    Poly pb = trim(decompose(b));
    Poly r = poly_mod(p_, poly_mul(p_, pa, pb), irr_);
    r.resize(h_, 0);
    return compose(r);
}

Elem FieldContext::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem FieldContext::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of 0");
    return pow(a, q_ - 2);
}

}  // namespace mincode::gf
