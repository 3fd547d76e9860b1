// Copyright 2026 The cyclofield Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cff/autgroup.hpp"
#include "cff/parse.hpp"

using namespace cff;

namespace {

std::vector<Modulus> all_moduli(const FieldCtx& k) {
    std::vector<Modulus> out;
    for (Elt b = 0; b < k.size(); ++b)
        for (Elt a = 0; a < k.size(); ++a)
            if (is_irreducible(Poly(k, {b, a, 1}))) out.push_back(Modulus{k, a, b});
    return out;
}

struct Check {
    std::ostringstream why;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

// 1. q+1 rational places for every modulus
void c1(Check& c) {
    for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u})
        for (const Modulus& M : all_moduli(field_of_order(q)))
            c.expect(count_degree_one(make_curve(M), 1) == q + 1, "N_1 != q+1 for q=" + std::to_string(q) + " M=" + M.str());
}

// 2. genus three ways
void c2(Check& c) {
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        const int expected = static_cast<int>((q + 1) * (q - 2) / 2);
        const KummerCurve cv = make_curve(all_moduli(field_of_order(q)).front());
        const RHData r = rh_check(cv);
        c.expect(genus_formula(q) == expected && r.ok && r.genus == expected && rh_check(q).genus == expected,
                 "genus mismatch at q=" + std::to_string(q));
        if (q <= 5) {
            const ZetaData z = zeta(cv, 8);
            c.expect(genus_from_zeta(z) == expected, "zeta genus mismatch at q=" + std::to_string(q));
        }
    }
}

// 3. u -> sigma_u injective homomorphism, generator of order q^2-1
void c3(Check& c) {
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {3u, 4u, 5u}) {
        const FieldCtx k = field_of_order(q);
        const Modulus M = all_moduli(k).front();
        const CycModel m = torsion_minpoly(M);
        const auto us = units(M);
        std::vector<std::pair<Poly, Poly>> pairs;
        if (q == 3) {
            for (const Poly& u : us)
                for (const Poly& w : us) pairs.emplace_back(u, w);
        } else {
            std::uniform_int_distribution<std::size_t> d(0, us.size() - 1);
            for (int i = 0; i < 20; ++i) pairs.emplace_back(us[d(rng)], us[d(rng)]);
        }
        for (const auto& [u, w] : pairs) {
            const GaloisMap su = galois_map(u, m), sw = galois_map(w, m);
            const Poly uw = (u * w) % M.poly();
            c.expect(compose(su, sw).image == galois_map(uw, m).image, "sigma_u sigma_w != sigma_uw");
            c.expect((su.image == sw.image) == (u == w), "u -> sigma_u not injective");
        }
        if (q == 3) {
            std::set<std::vector<RatFunc>> images;
            for (const Poly& u : us) images.insert(galois_map(u, m).image.coords());
            c.expect(images.size() == 8, "q=3 images not distinct");
        }
        c.expect(galois_order(galois_map(unit_generator(M), m), m) == q * q - 1, "generator order");
    }
}

// 4. certificate residual is zero
void c4(Check& c) {
    for (std::uint64_t q : {3u, 5u}) {
        const FieldCtx k = field_of_order(q);
        for (const Modulus& M : all_moduli(k)) {
            const CycModel m = torsion_minpoly(M);
            for (Elt g = 1; g < q; ++g) {
                const auto cert = verify_kummer_model(m, g);
                c.expect(cert.ok && cert.residual.is_zero(), "nonzero residual q=" + std::to_string(q) + " M=" + M.str());
            }
        }
    }
    std::mt19937_64 rng(4);
    const FieldCtx k7 = field_of_order(7);
    const auto mods = all_moduli(k7);
    for (int i = 0; i < 10; ++i) {
        const Modulus& M = mods[rng() % mods.size()];
        const Elt g = static_cast<Elt>(1 + rng() % 6);
        c.expect(verify_kummer_model(M, g).residual.is_zero(), "nonzero residual q=7 M=" + M.str());
    }
}

struct Groups {
    KummerCurve curve;
    Aut rho;
    Aut second;
    GroupTable G;
    GroupTable N;
};

Groups groups(std::uint64_t q) {
    const Modulus M = all_moduli(field_of_order(q)).front();
    const KummerCurve cv = make_curve(M);
    const Aut rho = make_rho(cv, torsion_minpoly(M));
    const Aut second = cv.k().p() == 2 ? make_omega(cv) : make_mu(cv);
    return {cv, rho, second, GroupTable::closure({rho}), GroupTable::closure({rho, second})};
}

// 5. group orders
void c5(Check& c) {
    for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u}) {
        const Groups g = groups(q);
        c.expect(g.N.size() == 2 * (q * q - 1), "normalizer order at q=" + std::to_string(q));
        for (const Aut& a : g.N.elements()) c.expect(is_automorphism(a), "closure element fails the relation");
    }
    const Groups g3 = groups(3);
    const GroupTable T = GroupTable::closure({g3.rho, g3.second, make_epsilon(g3.curve)});
    c.expect(T.size() == 48, "q=3 full group order");
    for (const Aut& a : T.elements()) c.expect(is_automorphism(a), "q=3 element fails the relation");
}

// 6. orbits and stabilizers
void c6(Check& c) {
    for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        const Groups g = groups(q);
        const std::string tag = " at q=" + std::to_string(q);
        std::multiset<std::size_t> sizes;
        for (const auto& o : orbits(g.G)) sizes.insert(o.size());
        c.expect(sizes == std::multiset<std::size_t>{1, 1, q + 1}, "rho orbit sizes" + tag);
        const auto& ram = g.rho.space()->ram;
        c.expect(stabilizer(g.N, place_infinity(ram)).size() == 2 * (q - 1), "stab(P_inf)" + tag);
        const GroupTable sb = stabilizer(g.N, place_at(ram, "Q_beta"));
        bool same = sb.size() == g.G.size();
        for (const Aut& a : sb.elements()) same = same && g.G.contains(a);
        c.expect(same, "stab(Q_beta) != <rho>" + tag);
        bool swap = false;
        for (const Aut& a : g.N.elements()) swap = swap || act_on_place(a, place_at(ram, "Q_beta")).label == "Q_gamma";
        c.expect(swap, "no element swaps Q_beta, Q_gamma" + tag);
    }
}

std::size_t cycle_lcm(const std::array<int, 4>& p) {
    std::array<bool, 4> seen{};
    std::size_t l = 1;
    for (int i = 0; i < 4; ++i) {
        std::size_t len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        if (len) l = std::lcm(l, len);
    }
    return l;
}

// 7. q = 3 exceptional case
void c7(Check& c) {
    const Groups g = groups(3);
    const Aut eps = make_epsilon(g.curve);
    c.expect(is_automorphism(eps) && order(eps) == 3, "epsilon");
    const GroupTable T = GroupTable::closure({g.rho, g.second, eps});
    const Aut iota = power(g.rho, 4);
    bool central = order(iota) == 2;
    for (const Aut& a : T.elements()) central = central && compose(a, iota) == compose(iota, a);
    c.expect(central, "iota not central of order 2");
    const Pgl23Report r = pgl23_report(T, g.rho);
    std::map<std::uint64_t, std::size_t> s4;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int cc = 0; cc < 4; ++cc)
                for (int d = 0; d < 4; ++d)
                    if (std::set<int>{a, b, cc, d}.size() == 4) ++s4[cycle_lcm({a, b, cc, d})];
    c.expect(r.quotient_order == 24 && r.sylow3_count == 4 && r.faithful && r.image_order == 24,
             "quotient is not S4 via the 3-Sylow action");
    c.expect(r.order_histogram == s4, "quotient order histogram differs from S4");
    c.expect(involution_quotient_genus(iota) == 0, "iota quotient not rational");
}

// 8. Riemann-Roch membership
void c8(Check& c) {
    for (std::uint64_t q : {3u, 5u, 7u}) {
        const KummerCurve cv = make_curve(all_moduli(field_of_order(q)).front());
        const auto ram = ramified_places(cv);
        const Place& inf = place_infinity(ram);
        const Place& qb = place_at(ram, "Q_beta");
        const Place& qg = place_at(ram, "Q_gamma");
        const std::int64_t Q = static_cast<std::int64_t>(q);
        const FFElem one = cv.one(), v = cv.v(), iy = cv.y().inv(), viy = v * iy;
        Divisor d1, d2, d3, d4;
        d1.add(inf, Q - 1);
        d2.add(inf, Q - 2);
        d2.add(qb, 1);
        d2.add(qg, 1);
        d3.add(inf, 2 * Q - 3);
        d3.add(qb, 1);
        d3.add(qg, 1);
        d4.add(inf, 2 * Q - 3);
        const std::string tag = " at q=" + std::to_string(q);
        c.expect(lspace_check(cv, {one, v}, d1).ok(), "{1,v}" + tag);
        c.expect(lspace_check(cv, {iy}, d2).ok(), "1/y" + tag);
        const auto r3 = lspace_check(cv, {viy}, d3);
        c.expect(r3.ok() && r3.valuations[0].at("P_inf") == -(2 * Q - 3), "v/y" + tag);
        c.expect(!lspace_check(cv, {iy}, d4).member[0], "1/y in L((2q-3)P_inf)" + tag);
    }
}

// 9. recognition round trip
void c9(Check& c) {
    std::mt19937_64 rng(9);
    for (std::uint64_t q : {3u, 5u, 7u}) {
        const FieldCtx k = field_of_order(q);
        const auto mods = all_moduli(k);
        for (int i = 0; i < 20; ++i) {
            const Modulus& in = mods[rng() % mods.size()];
            const Elt lambda = static_cast<Elt>(1 + rng() % (q - 1));
            std::int64_t r = 0;
            do r = static_cast<std::int64_t>(1 + rng() % (q - 1));
            while (std::gcd<std::int64_t, std::int64_t>(r, static_cast<std::int64_t>(q - 1)) != 1);
            const Recognition rec = recognize_cyclotomic(k, lambda, r, in.a, in.b);
            c.expect(is_irreducible(rec.M.poly()), "recovered modulus reducible");
            const KummerCurve fwd = make_curve(rec.M, rec.gamma);
            const RatFunc input = RatFunc::constant(k, lambda) * RatFunc(in.poly(), fwd.ram_poly()).pow(r);
            const AlgPtr alg = kummer_algebra(k, static_cast<int>(q - 1), input);
            const FFElem z = kummer_substitute(alg, rec.subst, fwd.h);
            c.expect(z.pow(q - 1) == alg->scalar(fwd.h), "z^{q-1} != h of the forward model");
            c.expect(z.pow(static_cast<std::uint64_t>(r)) == alg->gen(), "y not recovered from z");
        }
    }
}

// 10. character sum against brute-force enumeration
std::uint64_t brute(const KummerCurve& cv, std::uint32_t k) {
    const std::uint32_t q = cv.q();
    std::uint64_t Qk = 1;
    for (std::uint32_t i = 0; i < k; ++i) Qk *= q;
    const FieldCtx F = field_of_order(Qk);
    const Poly quad = map_to(cv.quad(), F);
    std::uint64_t n = 0;
    for (Elt x = 0; x < Qk; ++x) {
        Elt xq = 1;
        for (std::uint32_t i = 0; i < q; ++i) xq = F.mul(xq, x);
        const Elt lhs = F.sub(xq, x), rq = quad.eval(x);
        for (Elt y = 0; y < Qk; ++y) {
            Elt yp = 1;
            for (std::uint32_t i = 0; i + 1 < q; ++i) yp = F.mul(yp, y);
            if (F.add(F.mul(yp, lhs), rq) == 0) ++n;
        }
    }
    // q places over v in GF(q), one over infinity
    return n + q + 1;
}

void c10(Check& c) {
    for (const auto& [q, kmax] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 4}, {4, 2}})
        for (const Modulus& M : all_moduli(field_of_order(q))) {
            const KummerCurve cv = make_curve(M);
            for (std::uint32_t k = 1; k <= kmax; ++k)
                c.expect(count_degree_one(cv, k) == brute(cv, k),
                         "count mismatch q=" + std::to_string(q) + " k=" + std::to_string(k));
        }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> crit = {
        {"rational place count q+1 for all quadratic moduli, q in {3,4,5,7,8,9}", c1},
        {"genus: formula = Riemann-Hurwitz (= zeta for q <= 5)", c2},
        {"u -> sigma_u injective homomorphism, generator of order q^2-1", c3},
        {"cyclotomic-to-Kummer certificate residual is zero", c4},
        {"automorphism group orders 2(q^2-1) and 48 for q=3", c5},
        {"orbit sizes {q+1,1,1}, stabilizers, Q_beta/Q_gamma swap", c6},
        {"q=3: central iota, quotient PGL(2,3) = S4, epsilon of order 3", c7},
        {"Riemann-Roch membership and independence", c8},
        {"recognition round trip to a cyclotomic model", c9},
        {"character-sum counts agree with brute force", c10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            crit[i].second(c);
        } catch (const Error& e) {
            c.ok = false;
            c.why << "error " << to_string(e.code()) << ": " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << crit[i].first;
        std::cout.precision(2);
        std::cout << std::fixed << " (" << secs << " s)";
        if (!c.ok) std::cout << " -- " << c.why.str();
        std::cout << "\n";
        failed += c.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
