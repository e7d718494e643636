#include <doctest.h>

#include <random>
#include <set>

#include "mincode/code_core.hpp"
#include "mincode/construction.hpp"

using namespace mincode;
using namespace mincode::code_core;
using gf::FieldContext;
using linalg::Matrix;
using linalg::Vec;

namespace {

// Non-minimal control code: (1,1,1,1) covers (0,1,0,0). Every column is
// nonzero, so it also passes the generator-matrix invariant.
LinearCode control_code() {
    auto F = FieldContext::make(3, 1);
    Matrix G(2, 4);
    for (std::uint32_t c = 0; c < 4; ++c) G.at(0, c) = 1;
    G.at(1, 1) = 1;
    return make_code(F, G);
}

Matrix random_generator(std::mt19937_64& rng, const FieldContext& F, std::uint32_t rows,
                        std::uint32_t cols) {
    while (true) {
        Matrix G(rows, cols);
        for (auto& e : G.a) e = gf::Elem(rng() % F.q());
        bool ok = true;
        for (std::uint32_t c = 0; c < cols && ok; ++c) {
            bool nz = false;
            for (std::uint32_t r = 0; r < rows; ++r) nz |= G.at(r, c) != 0;
            ok = nz;
        }
        if (ok) return G;
    }
}

LinearCode cf_code(std::uint32_t q, std::uint32_t m, std::uint32_t k,
                   std::vector<gf::Elem> alpha = {}) {
    construction::CodeDescriptor d;
    d.p = q;  // prime instances only in these tests
    d.h = 1;
    d.m = m;
    d.k = k;
    d.alpha = std::move(alpha);
    construction::validate(d);
    auto F = construction::field_of(d);
    return construction::build_code(F, d);
}

std::set<Vec> codeword_set(const LinearCode& c) {
    std::set<Vec> s;
    for_each_codeword(c, [&](const Vec&, const Vec& w) { s.insert(w); });
    return s;
}

}  // namespace

TEST_CASE("make_code rejects zero columns") {
    auto F = FieldContext::make(3, 1);
    Matrix G(2, 3);
    G.at(0, 0) = 1;
    G.at(1, 1) = 1;
    CHECK_THROWS_AS(make_code(F, G), ZeroColumn);
}

TEST_CASE("codeword enumeration") {
    auto code = cf_code(3, 4, 2);
    std::uint64_t count = 0;
    bool zero_first = false;
    for_each_codeword(code, [&](const Vec& msg, const Vec& w) {
        if (count == 0) zero_first = (linalg::weight(msg) == 0 && linalg::weight(w) == 0);
        ++count;
    });
    CHECK(count == 243);  // q^(m+1)
    CHECK(zero_first);

    CHECK(codeword_set(cf_code(5, 4, 2)).size() == 3125);
}

TEST_CASE("weight distribution") {
    auto code = cf_code(3, 4, 2);
    auto dist = weight_distribution(code);
    std::uint64_t mass = 0;
    for (auto& [w, c] : dist) mass += c;
    CHECK(mass == 243);
    CHECK(dist.at(0) == 1);
    CHECK(dist.begin()->first == 0);
    CHECK((++dist.begin())->first == 32);  // min nonzero weight
    CHECK(dist.at(54) >= 80);              // all c(0,v), v != 0, live here

    // multithreaded path agrees
    CHECK(weight_distribution(code, linalg::kDefaultCap, 4) == dist);

    // zero-dimensional code
    auto full = make_code(code.ctx, [] {
        Matrix I(4, 4);
        for (std::uint32_t i = 0; i < 4; ++i) I.at(i, i) = 1;
        return I;
    }());
    CHECK(weight_distribution(dual(full)) ==
          std::map<std::uint32_t, std::uint64_t>{{0, 1}});
}

TEST_CASE("covers") {
    Vec c{1, 0, 2, 0};
    CHECK(covers(c, c));
    CHECK(covers(c, Vec{0, 0, 0, 0}));
    CHECK(covers(c, Vec{2, 0, 1, 0}));  // lambda * c
    CHECK_FALSE(covers(c, Vec{0, 1, 0, 0}));
}

TEST_CASE("minimality oracle: control code has a cover") {
    auto code = control_code();
    auto verdict = is_minimal_code(code);
    REQUIRE_FALSE(verdict.minimal);
    REQUIRE(verdict.counterexample.has_value());
    auto& [covering, covered] = *verdict.counterexample;
    CHECK(covers(covering, covered));
    CHECK(covering != covered);

    auto naive = is_minimal_code_naive(code);
    CHECK_FALSE(naive.minimal);
}

TEST_CASE("minimality oracle: constructed codes are minimal") {
    CHECK(is_minimal_code(cf_code(3, 4, 2)).minimal);
    CHECK(is_minimal_code(cf_code(3, 4, 2, {1, 2})).minimal);
    CHECK(is_minimal_code_naive(cf_code(3, 4, 2)).minimal);
}

TEST_CASE("projective oracle agrees with the naive one") {
    std::mt19937_64 rng(19);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        std::uint32_t q = (t % 2) ? 5 : 3;
        auto F = FieldContext::make(q, 1);
        std::uint32_t rows = 1 + rng() % 3, cols = 4 + rng() % 5;
        auto code = make_code(F, random_generator(rng, F, rows, cols));
        if (linalg::pow_checked(q, code.dim, 1u << 20) > 243) continue;
        CHECK(is_minimal_code(code).minimal == is_minimal_code_naive(code).minimal);
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("ab_sufficient") {
    auto F = FieldContext::make(3, 1);
    Matrix rep(1, 6);
    for (std::uint32_t c = 0; c < 6; ++c) rep.at(0, c) = 1;
    auto r = ab_sufficient(make_code(F, rep));
    CHECK(r.ratio_num == 1);
    CHECK(r.ratio_den == 1);
    CHECK(r.holds);

    auto ab = ab_sufficient(cf_code(3, 4, 2));
    CHECK_FALSE(ab.holds);
    CHECK(ab.w_min == 32);
    CHECK(ab.ratio_num * ab.w_max == ab.ratio_den * ab.w_min);  // reduced form
}

TEST_CASE("ab condition implies minimality on a random battery") {
    std::mt19937_64 rng(23);
    int ab_hits = 0;
    for (int t = 0; t < 120; ++t) {
        std::uint32_t q = (t % 2) ? 5 : 3;
        auto F = FieldContext::make(q, 1);
        std::uint32_t rows = 1 + rng() % 2, cols = 4 + rng() % 6;
        auto code = make_code(F, random_generator(rng, F, rows, cols));
        auto ab = ab_sufficient(code);
        if (ab.holds) {
            ++ab_hits;
            CHECK(is_minimal_code(code).minimal);
        }
    }
    CHECK(ab_hits > 0);
}

TEST_CASE("dual code") {
    auto code = cf_code(3, 4, 2);
    auto D = dual(code);
    CHECK(D.n == 80);
    CHECK(D.dim == 75);
    for (std::uint32_t r = 0; r < code.basis.rows; ++r)
        for (std::uint32_t s = 0; s < D.basis.rows; ++s)
            CHECK(linalg::dot(code.ctx, code.basis.row(r), D.basis.row(s)) == 0);

    // involution on a small code: same codeword set
    auto F = FieldContext::make(3, 1);
    std::mt19937_64 rng(5);
    auto small = make_code(F, random_generator(rng, F, 2, 5));
    CHECK(codeword_set(dual(dual(small))) == codeword_set(small));
}

TEST_CASE("linearity and scalar classes") {
    auto code = cf_code(3, 4, 2);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; ++t) {
        Vec a(code.dim), b(code.dim), sum(code.dim);
        for (std::uint32_t i = 0; i < code.dim; ++i) {
            a[i] = gf::Elem(rng() % 3);
            b[i] = gf::Elem(rng() % 3);
            sum[i] = code.ctx.add(a[i], b[i]);
        }
        Vec wa = codeword(code, a), wb = codeword(code, b), ws = codeword(code, sum);
        for (std::uint32_t j = 0; j < code.n; ++j)
            CHECK(ws[j] == code.ctx.add(wa[j], wb[j]));
    }

    // supports of c and lambda*c agree
    for_each_codeword(control_code(), [&](const Vec&, const Vec& w) {
        for (gf::Elem lam = 1; lam < 3; ++lam) {
            Vec scaled(w.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                scaled[i] = control_code().ctx.mul(lam, w[i]);
            CHECK(support(scaled) == support(w));
        }
    });
}
