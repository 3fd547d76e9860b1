// Copyright 2026 The cyclofield Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>

#include "cff/carlitz.hpp"
#include "cff/parse.hpp"
#include "doctest.h"

using namespace cff;

namespace {

Poly X(const FieldCtx& k, const char* s) { return parse_poly(k, s); }

Poly random_poly(const FieldCtx& k, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elt> d(0, k.size() - 1);
    std::vector<Elt> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& e : c) e = d(rng);
    return Poly(k, c);
}

std::vector<Modulus> all_moduli(const FieldCtx& k) {
    std::vector<Modulus> out;
    for (Elt b = 0; b < k.size(); ++b)
        for (Elt a = 0; a < k.size(); ++a)
            if (is_irreducible(Poly(k, {b, a, 1}))) out.push_back(Modulus{k, a, b});
    return out;
}

}  // namespace

TEST_CASE("carlitz_of examples") {
    for (std::uint64_t q : {3u, 4u, 5u}) {
        const FieldCtx k = field_of_order(q);
        const CarlitzPoly cx = carlitz_of(Poly::var(k));
        REQUIRE(cx.coeffs().size() == 2);
        CHECK(cx.coeffs()[0] == Poly::var(k));
        CHECK(cx.coeffs()[1].is_one());

        const CarlitzPoly cc = carlitz_of(Poly::constant(k, k.size() - 1));
        REQUIRE(cc.coeffs().size() == 1);
        CHECK(cc.coeffs()[0] == Poly::constant(k, k.size() - 1));

        // phi(phi(z)) + a phi(z) + b z expanded by hand:
        // z^{q^2} + (x^q + x + a) z^q + (x^2 + a x + b) z
        for (Elt a = 0; a < k.size(); ++a)
            for (Elt b = 0; b < k.size(); ++b) {
                const CarlitzPoly c = carlitz_of(Poly(k, {b, a, 1}));
                REQUIRE(c.coeffs().size() == 3);
                CHECK(c.coeffs()[0] == Poly(k, {b, a, 1}));
                CHECK(c.coeffs()[1] == Poly::monomial(k, 1, static_cast<int>(q)) + Poly(k, {a, 1}));
                CHECK(c.coeffs()[2].is_one());
                CHECK(c.z_degree() == q * q);
            }
    }
    CHECK_THROWS_AS(carlitz_of(Poly(create_field(3, 1))), Error);
}

TEST_CASE("torsion_minpoly for q=3, M=T^2+1") {
    const FieldCtx k = create_field(3, 1);
    const CycModel m = torsion_minpoly(Modulus::parse(k, "T^2+1"));
    CHECK(m.minpoly_str() == "y^8 + (x^3+x)*y^2 + (x^2+1)");
    CHECK(m.ring->dim() == 8);
    CHECK(m.cm.z_degree() == 9);
    CHECK_FALSE(m.cm.coeffs()[0].is_zero());  // separable
    try {
        Modulus::parse(create_field(5, 1), "T^2+4");
        FAIL("expected ReducibleModulus");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReducibleModulus);
    }
}

TEST_CASE("Carlitz action is a ring homomorphism into additive polynomials") {
    std::mt19937_64 rng(5);
    for (std::uint64_t q : {3u, 4u, 5u}) {
        const FieldCtx k = field_of_order(q);
        for (int i = 0; i < 15; ++i) {
            const Poly f = random_poly(k, 3, rng), g = random_poly(k, 3, rng);
            if (f.is_zero() || g.is_zero()) continue;
            const CarlitzPoly cf = carlitz_of(f), cg = carlitz_of(g);
            if (!(f + g).is_zero()) CHECK(carlitz_of(f + g) == cf + cg);
            const CarlitzPoly cfg = carlitz_of(f * g);
            CHECK(cfg == cf.compose(cg));
            CHECK(cfg == cg.compose(cf));
            CHECK(cf.z_degree() == static_cast<std::uint64_t>(std::pow(q, f.degree())));
        }
    }
}

TEST_CASE("Carlitz polynomials are additive and GF(q)-linear pointwise") {
    std::mt19937_64 rng(9);
    for (std::uint64_t q : {3u, 4u, 5u}) {
        const FieldCtx k = field_of_order(q);
        const FieldCtx big = field_of_order(q * q * q * q);
        std::uniform_int_distribution<Elt> d(0, big.size() - 1);
        for (int i = 0; i < 10; ++i) {
            const Poly f = random_poly(k, 2, rng);
            if (f.is_zero()) continue;
            const CarlitzPoly cf = carlitz_of(f);
            const FieldElem x(big, d(rng)), z1(big, d(rng)), z2(big, d(rng));
            CHECK(cf.eval(z1 + z2, x) == cf.eval(z1, x) + cf.eval(z2, x));
            for (Elt l = 0; l < q; ++l) {
                const FieldElem lam = embed(FieldElem(k, l), big);
                CHECK(cf.eval(lam * z1, x) == lam * cf.eval(z1, x));
            }
        }
    }
}

TEST_CASE("torsion points: C_M kills every root of the minimal polynomial") {
    // Specialise x to a value in a finite field and check that roots of the
    // specialised minimal polynomial are M-torsion.
    const FieldCtx k = create_field(3, 1);
    const Modulus M = Modulus::parse(k, "T^2+1");
    const CycModel m = torsion_minpoly(M);
    const FieldCtx big = create_field(3, 8);
    const FieldElem x0 = embed(FieldElem(k, 1), big);
    std::vector<Elt> vals;
    for (const Poly& c : m.minpoly()) vals.push_back(c.eval(x0).raw());
    const Poly sp(big, vals);
    const auto roots = roots_in(sp, big);
    for (const auto& r : roots) CHECK(m.cm.eval(r, x0).is_zero());
    CHECK(roots.size() <= 8);
}

TEST_CASE("cyc_arith") {
    const FieldCtx k = create_field(3, 1);
    const Modulus M = Modulus::parse(k, "T^2+1");
    const CycModel m = torsion_minpoly(M);
    const AlgElem y = m.y();
    const AlgElem top = y * y.pow(7);
    const AlgElem expect = -(RatFunc(X(k, "x^3+x")) * y.pow(2)) - m.ring->scalar(RatFunc(X(k, "x^2+1")));
    CHECK(top == expect);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 5; ++i) {
        std::vector<RatFunc> c;
        for (int j = 0; j < 8; ++j) c.emplace_back(random_poly(k, 1, rng));
        const AlgElem u = m.ring->from_coords(c);
        CHECK(u * m.ring->one() == u);
        if (u.is_zero()) continue;
        CHECK((u * u.inv()).is_one());
    }
    CHECK_THROWS_AS(m.ring->zero().inv(), Error);
}

TEST_CASE("galois_map examples") {
    const FieldCtx k = create_field(3, 1);
    const Modulus M = Modulus::parse(k, "T^2+1");
    const CycModel m = torsion_minpoly(M);
    CHECK(galois_map(Poly::one(k), m).image == m.y());
    const GaloisMap sx = galois_map(X(k, "x"), m), sx1 = galois_map(X(k, "x+1"), m);
    const GaloisMap comp = compose(sx, sx1);
    CHECK(comp.u == X(k, "x+2"));
    CHECK(comp.image == galois_map(X(k, "x-1"), m).image);
    try {
        galois_map(X(k, "x^2+1"), m);
        FAIL("expected NotAUnit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAUnit);
    }
}

TEST_CASE("u -> sigma_u is an injective homomorphism (q=3 exhaustive)") {
    const FieldCtx k = create_field(3, 1);
    for (const Modulus& M : all_moduli(k)) {
        const CycModel m = torsion_minpoly(M);
        std::vector<GaloisMap> maps;
        for (const Poly& u : units(M)) maps.push_back(galois_map(u, m));
        REQUIRE(maps.size() == 8);
        std::set<std::vector<RatFunc>> images;
        for (const auto& s : maps) images.insert(s.image.coords());
        CHECK(images.size() == 8);
        for (const auto& s : maps)
            for (const auto& t : maps) {
                const GaloisMap st = compose(s, t);
                CHECK(st.image == galois_map(st.u, m).image);
            }
        const GaloisMap gen = galois_map(unit_generator(M), m);
        CHECK(galois_order(gen, m) == 8);
        CHECK(unit_order(unit_generator(M), M) == 8);
    }
}

TEST_CASE("u -> sigma_u sampled for q=4,5") {
    std::mt19937_64 rng(21);
    for (std::uint64_t q : {4u, 5u}) {
        const FieldCtx k = field_of_order(q);
        const Modulus M = all_moduli(k).front();
        const CycModel m = torsion_minpoly(M);
        const auto us = units(M);
        std::uniform_int_distribution<std::size_t> d(0, us.size() - 1);
        for (int i = 0; i < 20; ++i) {
            const Poly& u = us[d(rng)];
            const Poly& w = us[d(rng)];
            const GaloisMap su = galois_map(u, m), sw = galois_map(w, m);
            const GaloisMap c = compose(su, sw);
            CHECK(c.image == galois_map(c.u, m).image);
            CHECK((su.image == sw.image) == (u == w));
        }
        const Poly g = unit_generator(M);
        CHECK(galois_order(galois_map(g, m), m) == q * q - 1);
    }
}

TEST_CASE("unit_generator is the lex-least unit of full order") {
    const FieldCtx k = create_field(3, 1);
    const Modulus M = Modulus::parse(k, "T^2+1");
    // x has order 4 since x^2 = -1; 1, 2 have order 1, 2; x+1 is next.
    CHECK(unit_order(X(k, "x"), M) == 4);
    const Poly g = unit_generator(M);
    for (const Poly& u : units(M)) {
        if (u == g) break;
        CHECK(unit_order(u, M) != 8);
    }
}
