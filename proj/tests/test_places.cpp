// Copyright 2026 The cyclofield Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "cff/parse.hpp"
#include "cff/places.hpp"
#include "doctest.h"

using namespace cff;

namespace {

std::vector<Modulus> all_moduli(const FieldCtx& k) {
    std::vector<Modulus> out;
    for (Elt b = 0; b < k.size(); ++b)
        for (Elt a = 0; a < k.size(); ++a)
            if (is_irreducible(Poly(k, {b, a, 1}))) out.push_back(Modulus{k, a, b});
    return out;
}

// Affine points (c, y) in GF(q^k)^2 of y^{q-1}(c^q - c) + (gamma c^2 + a c + b/gamma) = 0,
// plus the q+1 places over v in GF(q) and v = infinity.
std::uint64_t brute_count(const KummerCurve& curve, std::uint32_t k) {
    const std::uint32_t q = curve.q();
    std::uint64_t Q = 1;
    for (std::uint32_t i = 0; i < k; ++i) Q *= q;
    const FieldCtx F = field_of_order(Q);
    const Poly quad = map_to(curve.quad(), F);
    std::uint64_t n = 0;
    for (Elt c = 0; c < Q; ++c) {
        Elt cq = 1;
        for (std::uint32_t i = 0; i < q; ++i) cq = F.mul(cq, c);
        const Elt r = F.sub(cq, c);
        const Elt qc = quad.eval(c);
        for (Elt y = 0; y < Q; ++y) {
            Elt yp = 1;
            for (std::uint32_t i = 0; i + 1 < q; ++i) yp = F.mul(yp, y);
            if (F.add(F.mul(yp, r), qc) == 0) ++n;
        }
    }
    return n + q + 1;
}

FFElem random_elem(const KummerCurve& c, std::mt19937_64& rng) {
    const FieldCtx& k = c.k();
    std::uniform_int_distribution<Elt> d(0, k.size() - 1);
    std::vector<RatFunc> co(c.q() - 1, RatFunc(k));
    const int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) {
        const std::size_t i = rng() % co.size();
        Poly num(k, {d(rng), d(rng)});
        Poly den = (rng() % 3 == 0) ? Poly(k, {d(rng), 1}) : Poly::one(k);
        if (num.is_zero()) num = Poly::one(k);
        co[i] = RatFunc(num, den);
    }
    return c.alg->from_coords(co);
}

}  // namespace

TEST_CASE("ramified_places") {
    const KummerCurve c3 = make_curve(Modulus::parse(create_field(3, 1), "T^2+1"));
    const auto r3 = ramified_places(c3);
    CHECK(r3.size() == 6);
    CHECK(r3[3].label == "P_inf");
    CHECK(r3[4].label == "Q_beta");
    CHECK(r3[4].fq_degree == 2);
    CHECK(r3[4].c * r3[4].c == -FieldElem::one(r3[4].c.ctx()));
    const KummerCurve c5 = make_curve(Modulus::parse(create_field(5, 1), "T^2+2"));
    CHECK(ramified_places(c5).size() == 8);
}

TEST_CASE("valuation examples") {
    for (std::uint64_t q : {3u, 4u, 5u, 7u}) {
        const FieldCtx k = field_of_order(q);
        const KummerCurve c = make_curve(all_moduli(k).front(), k.from_int(q == 4 ? 1 : 2));
        const auto ram = ramified_places(c);
        const Place& inf = place_infinity(ram);
        const std::int64_t Q = static_cast<std::int64_t>(q);
        CHECK(valuation(c, c.y(), inf) == Q - 2);
        CHECK(valuation(c, c.v(), inf) == -(Q - 1));
        CHECK(valuation(c, c.v() * c.y().inv(), inf) == -(2 * Q - 3));
        CHECK(valuation(c, c.y(), place_at(ram, "Q_beta")) == 1);
        CHECK(valuation(c, c.y(), place_at(ram, "Q_gamma")) == 1);
        for (const Place& P : ram)
            if (P.kind == PlaceKind::RamFinite) {
                CHECK(valuation(c, c.y(), P) == -1);
                CHECK(valuation(c, c.v() - c.scalar(RatFunc::constant(k, P.c.raw())), P) == Q - 1);
            }
        const Divisor dy = principal_divisor(c, c.y());
        CHECK(dy.degree() == 0);
        CHECK(dy.terms().size() == q + 3);
        CHECK_THROWS_AS(valuation(c, c.alg->zero(), inf), Error);
    }
}

TEST_CASE("principal divisors have degree zero and are additive") {
    for (std::uint64_t q : {3u, 5u}) {
        const FieldCtx k = field_of_order(q);
        const KummerCurve c = make_curve(all_moduli(k)[1]);
        std::mt19937_64 rng(100 + q);
        int done = 0, tries = 0;
        std::vector<std::pair<FFElem, Divisor>> pool;
        while (done < 50 && tries < 400) {
            ++tries;
            const FFElem e = random_elem(c, rng);
            if (e.is_zero()) continue;
            Divisor d;
            try {
                d = principal_divisor(c, e);
            } catch (const Error& err) {
                REQUIRE(err.code() == ErrorCode::TooLarge);
                continue;
            }
            CHECK(d.degree() == 0);
            for (const auto& [P, v] : d.terms()) CHECK(valuation(c, e, P) == v);
            pool.emplace_back(e, d);
            ++done;
        }
        CHECK(done == 50);
        int products = 0;
        for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
            Divisor dfg;
            try {
                dfg = principal_divisor(c, pool[i].first * pool[i + 1].first);
            } catch (const Error& err) {
                REQUIRE(err.code() == ErrorCode::TooLarge);
                continue;
            }
            CHECK(dfg == pool[i].second + pool[i + 1].second);
            CHECK(principal_divisor(c, pool[i].first.inv()) == Divisor() - pool[i].second);
            ++products;
        }
        CHECK(products >= 10);
    }
}

TEST_CASE("generic place with a tie between basis monomials") {
    // 1 + y vanishes where y = -1; the two monomials have equal valuation 0 there.
    const FieldCtx k = create_field(3, 1);
    const KummerCurve c = make_curve(Modulus::parse(k, "T^2+1"));
    const FFElem e = c.one() + c.y();
    const Divisor d = principal_divisor(c, e);
    CHECK(d.degree() == 0);
    bool generic_zero = false;
    for (const auto& [P, v] : d.terms())
        if (!P.ramified() && v > 0) {
            generic_zero = true;
            CHECK(P.y == -FieldElem::one(P.y.ctx()));
        }
    CHECK(generic_zero);
}

TEST_CASE("lspace_check examples") {
    for (std::uint64_t q : {3u, 5u, 7u}) {
        const FieldCtx k = field_of_order(q);
        const KummerCurve c = make_curve(all_moduli(k).front());
        const auto ram = ramified_places(c);
        const Place& inf = place_infinity(ram);
        const Place& qb = place_at(ram, "Q_beta");
        const Place& qg = place_at(ram, "Q_gamma");
        const std::int64_t Q = static_cast<std::int64_t>(q);
        const FFElem one = c.one(), v = c.v(), iy = c.y().inv(), viy = v * iy;

        Divisor d1;
        d1.add(inf, Q - 1);
        const auto r1 = lspace_check(c, {one, v}, d1);
        CHECK(r1.ok());

        Divisor d2;
        d2.add(inf, Q - 2);
        d2.add(qb, 1);
        d2.add(qg, 1);
        CHECK(lspace_check(c, {iy}, d2).ok());

        Divisor d3;
        d3.add(inf, 2 * Q - 3);
        d3.add(qb, 1);
        d3.add(qg, 1);
        const auto r3 = lspace_check(c, {one, v, iy, viy}, d3);
        CHECK(r3.ok());
        CHECK(r3.valuations[3].at("P_inf") == -(2 * Q - 3));

        Divisor d4;
        d4.add(inf, 2 * Q - 3);
        const auto r4 = lspace_check(c, {iy}, d4);
        CHECK_FALSE(r4.member[0]);

        // dependent family
        CHECK_FALSE(lspace_check(c, {v, v + v}, d1).independent);
    }
    const KummerCurve c3 = make_curve(Modulus::parse(create_field(3, 1), "T^2+1"));
    const KummerCurve c3b = make_curve(Modulus::parse(create_field(3, 1), "T^2+T+2"));
    Divisor bad;
    bad.add(place_at(ramified_places(c3b), "Q_beta"), 1);
    try {
        lspace_check(c3, {c3.one()}, bad);
        FAIL("expected UnknownPlace");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownPlace);
    }
}

TEST_CASE("count_degree_one: k=1 gives q+1") {
    for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u})
        for (const Modulus& M : all_moduli(field_of_order(q))) CHECK(count_degree_one(make_curve(M), 1) == q + 1);
    try {
        count_degree_one(make_curve(all_moduli(field_of_order(3)).front()), 14);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("character sum agrees with brute-force enumeration") {
    for (const Modulus& M : all_moduli(field_of_order(3)))
        for (Elt g = 1; g < 3; ++g) {
            const KummerCurve c = make_curve(M, g);
            for (std::uint32_t k = 1; k <= 4; ++k) CHECK(count_degree_one(c, k) == brute_count(c, k));
        }
    for (const Modulus& M : all_moduli(field_of_order(4))) {
        const KummerCurve c = make_curve(M);
        for (std::uint32_t k = 1; k <= 2; ++k) CHECK(count_degree_one(c, k) == brute_count(c, k));
    }
    const KummerCurve c5 = make_curve(all_moduli(field_of_order(5)).front(), 3);
    CHECK(count_degree_one(c5, 2) == brute_count(c5, 2));
}

TEST_CASE("threaded count matches sequential") {
    const KummerCurve c = make_curve(all_moduli(field_of_order(3)).front());
    CHECK(count_degree_one(c, 9, 4) == count_degree_one(c, 9, 1));
}

TEST_CASE("zeta and genus for q=3 and q=4") {
    for (std::uint64_t q : {3u, 4u}) {
        const KummerCurve c = make_curve(all_moduli(field_of_order(q)).front());
        const ZetaData z = zeta(c, 4);
        CHECK(z.genus == genus_formula(static_cast<std::uint32_t>(q)));
        CHECK(genus_from_zeta(z) == z.genus);
        BigInt qg = 1;
        for (int i = 0; i < z.genus; ++i) qg *= q;
        CHECK(z.L.back() == qg);
        for (std::size_t k = 0; k < z.counts.size(); ++k)
            CHECK(weil_bound_ok(static_cast<std::uint32_t>(q), static_cast<int>(k + 1), z.genus, z.counts[k]));
    }
    CHECK(genus_formula(3) == 2);
    CHECK(genus_formula(4) == 5);
    CHECK(genus_formula(5) == 9);
    try {
        zeta(make_curve(all_moduli(field_of_order(7)).front()));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("L-polynomial helpers") {
    // genus 1 toy data: N_1 = q + 1 - t
    const auto L = lpoly_from_counts(5, 1, {8});
    REQUIRE(L.size() == 3);
    CHECK(L[0] == 1);
    CHECK(L[1] == 2);
    CHECK(L[2] == 5);
    CHECK(count_from_lpoly(5, L, 1) == 8);
    // N_2 = q^2 + 1 - (t^2 - 2q) with t = -2
    CHECK(count_from_lpoly(5, L, 2) == 26 - (4 - 10));
}

TEST_CASE("rh_check") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        const RHData r = rh_check(q);
        CHECK(r.ok);
        CHECK(r.genus == genus_formula(q));
        const RHData rc = rh_check(make_curve(all_moduli(field_of_order(q)).front()));
        CHECK(rc.ok);
        CHECK(rc.genus == genus_formula(q));
    }
    CHECK(rh_check(5u).rhs == 16);
    // abelian bound |G| = q^2 - 1 <= 4g + 4
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) CHECK(q * q - 1 <= 4 * static_cast<std::uint32_t>(genus_formula(q)) + 4);
}
