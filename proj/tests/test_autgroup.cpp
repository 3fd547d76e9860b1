// Copyright 2026 The cyclofield Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>
#include <random>
#include <set>

#include "cff/autgroup.hpp"
#include "cff/parse.hpp"
#include "doctest.h"

using namespace cff;

namespace {

Modulus first_modulus(std::uint64_t q) {
    const FieldCtx k = field_of_order(q);
    for (Elt b = 0; b < k.size(); ++b)
        for (Elt a = 0; a < k.size(); ++a)
            if (is_irreducible(Poly(k, {b, a, 1}))) return Modulus{k, a, b};
    return {};
}

struct Setup {
    KummerCurve curve;
    Aut rho;
};

Setup setup(std::uint64_t q, Elt gamma = 1) {
    const Modulus M = first_modulus(q);
    const KummerCurve c = make_curve(M, gamma);
    return {c, make_rho(c, torsion_minpoly(M))};
}

// Pointwise oracle for f^{q-1} h^k = h o m on every point of GF(q^2) where
// all three sides are finite.
bool pointwise_law(const Aut& a) {
    const AutSpace& sp = *a.space();
    const FieldCtx& K = sp.K;
    const std::uint32_t q = sp.curve.q();
    int checked = 0;
    for (Elt c = 0; c < K.size(); ++c) {
        const FieldElem x(K, c);
        const auto mv = a.image_v().eval(x);
        const auto fv = a.f().eval(x);
        const auto hv = sp.h.eval(x);
        if (!mv || !fv || !hv) continue;
        const auto hm = sp.h.eval(*mv);
        if (!hm) continue;
        if (fv->pow(q - 1) * hv->pow(static_cast<std::uint64_t>(a.k())) != *hm) return false;
        ++checked;
    }
    return checked > 0;
}

std::size_t lcm_cycles(const std::array<int, 4>& p) {
    std::array<bool, 4> seen{};
    std::size_t l = 1;
    for (int i = 0; i < 4; ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        l = std::lcm(l, len);
    }
    return l;
}

}  // namespace

TEST_CASE("is_automorphism on basic maps") {
    const Setup s5 = setup(5);
    const SpacePtr sp = s5.rho.space();
    CHECK(is_automorphism(Aut::identity(sp)));
    const Aut mu = make_mu(s5.curve);
    CHECK(is_automorphism(mu));
    CHECK(pointwise_law(mu));
    // y -> 2y is not an automorphism: 2^{4} = 1 is fine, but v -> v+1 with y fixed moves h
    CHECK_FALSE(is_automorphism(Aut(sp, {1, 1, 0, 1}, 1, RatFunc::constant(sp->K, 1))));
    CHECK_FALSE(is_automorphism(Aut(sp, {1, 0, 0, 1}, 2, RatFunc::constant(sp->K, 1))));

    const Setup s4 = setup(4);
    const Aut om = make_omega(s4.curve);
    CHECK(is_automorphism(om));
    CHECK(compose(om, om).is_identity());
    CHECK(pointwise_law(om));

    try {
        make_mu(s4.curve);
        FAIL("expected WrongCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongCharacteristic);
    }
    try {
        make_omega(s5.curve);
        FAIL("expected WrongCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongCharacteristic);
    }
    try {
        make_epsilon(s5.curve);
        FAIL("expected WrongQ");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongQ);
    }
}

TEST_CASE("rho has order q^2-1 and fixes Q_beta, Q_gamma") {
    for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        CAPTURE(q);
        const Setup s = setup(q);
        const std::uint64_t n = q * q - 1;
        CHECK(is_automorphism(s.rho));
        CHECK(pointwise_law(s.rho));
        CHECK(power(s.rho, static_cast<std::int64_t>(n)).is_identity());
        for (std::uint64_t m = 1; m < n; ++m)
            if (n % m == 0) CHECK_FALSE(power(s.rho, static_cast<std::int64_t>(m)).is_identity());
        const auto& ram = s.rho.space()->ram;
        CHECK(act_on_place(s.rho, place_at(ram, "Q_beta")).label == "Q_beta");
        CHECK(act_on_place(s.rho, place_at(ram, "Q_gamma")).label == "Q_gamma");
        const GroupTable G = GroupTable::closure({s.rho});
        CHECK(G.size() == n);
        std::multiset<std::size_t> sizes;
        for (const auto& o : orbits(G)) sizes.insert(o.size());
        CHECK(sizes == std::multiset<std::size_t>{1, 1, q + 1});
    }
}

TEST_CASE("rho image of y is linear in v") {
    const Modulus M = first_modulus(5);
    const KummerCurve c = make_curve(M);
    const RhoData d = make_rho_data(c, torsion_minpoly(M));
    CHECK(d.rho.k() == 1);
    REQUIRE(d.alpha.has_value());
    CHECK(d.coeff != 0);
    CHECK(d.unit == unit_generator(M));
}

TEST_CASE("composition convention: a o b applies b first") {
    const Setup s = setup(5);
    const Aut mu = make_mu(s.curve);
    const Aut ab = compose(s.rho, mu);
    // v-image of a o b is (image of v under b) with v replaced by image under a
    CHECK(ab.image_v() == mu.image_v().compose(s.rho.image_v()));
    CHECK(compose(s.rho, invert(s.rho)).is_identity());
    CHECK(compose(invert(mu), mu).is_identity());
    CHECK(power(s.rho, -1) == invert(s.rho));
}

TEST_CASE("mu^2 generates the Kummer subgroup") {
    for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
        const Setup s = setup(q);
        const Aut mu = make_mu(s.curve);
        const Aut mu2 = compose(mu, mu);
        const GroupTable H = GroupTable::closure({power(s.rho, static_cast<std::int64_t>(q + 1))});
        CHECK(H.size() == q - 1);
        CHECK(H.contains(mu2));
        CHECK(order(mu2) == q - 1);
        CHECK(mu2.mobius() == Mobius{1, 0, 0, 1});
    }
}

TEST_CASE("group orders of the normalizer") {
    for (std::uint64_t q : {5u, 7u, 9u}) {
        const Setup s = setup(q);
        const GroupTable N = GroupTable::closure({s.rho, make_mu(s.curve)});
        CHECK(N.size() == 2 * (q * q - 1));
    }
    for (std::uint64_t q : {4u, 8u}) {
        const Setup s = setup(q);
        const GroupTable N = GroupTable::closure({s.rho, make_omega(s.curve)});
        CHECK(N.size() == 2 * (q * q - 1));
    }
    const Setup s3 = setup(3);
    CHECK(GroupTable::closure({s3.rho, make_mu(s3.curve)}).size() == 16);
    CHECK(GroupTable::closure({s3.rho, make_mu(s3.curve), make_epsilon(s3.curve)}).size() == 48);
    try {
        GroupTable::closure({s3.rho, make_mu(s3.curve), make_epsilon(s3.curve)}, 40);
        FAIL("expected ClosureOverflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ClosureOverflow);
    }
}

TEST_CASE("group axioms, conjugation and stabilizers (q = 5, 7)") {
    for (std::uint64_t q : {5u, 7u}) {
        CAPTURE(q);
        const Setup s = setup(q);
        const Aut mu = make_mu(s.curve);
        const GroupTable N = GroupTable::closure({s.rho, mu});
        const GroupTable G = GroupTable::closure({s.rho});
        for (std::size_t i = 0; i < N.size(); ++i) {
            CHECK(is_automorphism(N.elements()[i]));
            const std::size_t j = N.inverse(i);
            CHECK(N.elements()[N.mul(i, j)].is_identity());
        }
        std::mt19937_64 rng(q);
        std::uniform_int_distribution<std::size_t> d(0, N.size() - 1);
        for (int t = 0; t < 30; ++t) {
            const std::size_t a = d(rng), b = d(rng), c = d(rng);
            CHECK(N.mul(N.mul(a, b), c) == N.mul(a, N.mul(b, c)));
        }
        CHECK(G.contains(compose(compose(mu, s.rho), invert(mu))));
        for (const Aut& g : N.elements()) CHECK(G.contains(compose(compose(g, s.rho), invert(g))));

        const auto& ram = s.rho.space()->ram;
        CHECK(stabilizer(N, place_infinity(ram)).size() == 2 * (q - 1));
        const GroupTable sb = stabilizer(N, place_at(ram, "Q_beta"));
        const GroupTable sg = stabilizer(N, place_at(ram, "Q_gamma"));
        CHECK(sb.size() == q * q - 1);
        for (const Aut& g : sb.elements()) CHECK(G.contains(g));
        CHECK(sg.size() == q * q - 1);
        bool swap = false;
        for (const Aut& g : N.elements()) {
            const std::string l = act_on_place(g, place_at(ram, "Q_beta")).label;
            CHECK((l == "Q_beta" || l == "Q_gamma"));
            if (l == "Q_gamma") swap = true;
        }
        CHECK(swap);
        CHECK(act_on_place(mu, place_at(ram, "Q_beta")).label == "Q_gamma");
    }
}

TEST_CASE("omega normalizes <rho> for p = 2") {
    const Setup s = setup(4);
    const Aut om = make_omega(s.curve);
    const GroupTable G = GroupTable::closure({s.rho});
    CHECK(G.contains(compose(compose(om, s.rho), om)));
}

TEST_CASE("epsilon matches the displayed formula on y^2 = (v^2+1)/(v^3-v)") {
    const FieldCtx k = create_field(3, 1);
    const KummerCurve c = make_curve(Modulus::parse(k, "T^2+1"), 2);
    CHECK(c.h == RatFunc(Poly(k, {1, 0, 1}), Poly(k, {0, 2, 0, 1})));
    const Aut eps = make_epsilon(c);
    const FieldCtx& K = eps.space()->K;
    const FieldElem i = roots_in(Poly(k, {1, 0, 1}), K).front();
    const Poly v = Poly::var(K), ci = Poly::constant(K, i.raw()), one = Poly::one(K);
    const RatFunc mv(-(v + ci), v - ci);
    const RatFunc f((v * v - one).scaled((i * (FieldElem::one(K) - i)).raw()), v + ci);
    const Aut direct(eps.space(), *mobius_of(mv), 1, f);
    CHECK(direct == eps);
    CHECK(is_automorphism(direct));
    CHECK(pointwise_law(direct));
    CHECK(order(direct) == 3);
    // every q = 3 model gets an epsilon through the shift
    for (const char* m : {"T^2+T+2", "T^2+2*T+2"})
        for (Elt g = 1; g < 3; ++g) {
            const KummerCurve cc = make_curve(Modulus::parse(k, m), g);
            CHECK(order(make_epsilon(cc)) == 3);
        }
}

TEST_CASE("q = 3: quotient by rho^4 is PGL(2,3)") {
    const Setup s = setup(3);
    const GroupTable T = GroupTable::closure({s.rho, make_mu(s.curve), make_epsilon(s.curve)});
    REQUIRE(T.size() == 48);
    const Aut iota = power(s.rho, 4);
    for (const Aut& g : T.elements()) CHECK(compose(g, iota) == compose(iota, g));
    const Pgl23Report r = pgl23_report(T, s.rho);
    CHECK(r.central);
    CHECK(r.quotient_order == 24);
    CHECK(r.sylow3_count == 4);
    CHECK(r.faithful);
    CHECK(r.image_order == 24);
    // independent S4 histogram from cycle types
    std::map<std::uint64_t, std::size_t> s4;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const std::array<int, 4> p{a, b, c, d};
                    if (std::set<int>(p.begin(), p.end()).size() == 4) ++s4[lcm_cycles(p)];
                }
    CHECK(s4 == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
    CHECK(r.order_histogram == s4);
    CHECK(r.ok());
    CHECK(quotient_is_pgl23(T));
    CHECK(involution_quotient_genus(iota) == 0);

    try {
        pgl23_report(GroupTable::closure({s.rho}), s.rho);
        FAIL("expected WrongOrder");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongOrder);
    }
}

TEST_CASE("act_on_place rejects generic places") {
    const Setup s = setup(3);
    Place P;
    P.kind = PlaceKind::Generic;
    try {
        act_on_place(s.rho, P);
        FAIL("expected GenericPlaceUnsupported");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GenericPlaceUnsupported);
    }
}
