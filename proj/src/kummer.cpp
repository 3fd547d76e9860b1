/*
   Copyright 2026 The cyclofield Authors

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


#include "cff/kummer.hpp"

#include <numeric>
#include <utility>

namespace cff {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = ((a % m) + m) % m, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t t = r0 / r1;
        r0 = std::exchange(r1, r0 - t * r1);
        s0 = std::exchange(s1, s0 - t * s1);
    }
    if (r0 != 1) fail(ErrorCode::NotCoprime, "no inverse modulo " + std::to_string(m));
    return ((s0 % m) + m) % m;
}

}  // namespace

Poly KummerCurve::quad() const {
    const FieldCtx& k = M.k;
    return Poly(k, {k.div(M.b, gamma), M.a, gamma});
}

Poly KummerCurve::ram_poly() const {
    const FieldCtx& k = M.k;
    return Poly::monomial(k, 1, static_cast<int>(q())) - Poly::var(k);
}

std::string KummerCurve::str() const {
    return "y^" + std::to_string(q() - 1) + " = " + format(h, 'v');
}

KummerCurve make_curve(const Modulus& M, Elt gamma) {
    if (gamma == 0) fail(ErrorCode::DivisionByZero, "gamma must be nonzero");
    if (!is_irreducible(M.poly())) fail(ErrorCode::ReducibleModulus, M.str() + " is reducible");
    KummerCurve c{M, gamma, RatFunc(), nullptr};
    c.h = RatFunc(-c.quad(), c.ram_poly());
    c.alg = kummer_algebra(M.k, static_cast<int>(M.q() - 1), c.h);
    return c;
}

AlgPtr kummer_algebra(const FieldCtx& k, int n, const RatFunc& h) {
    return QuotientAlgebra::make(k, n, {{0, -h}});
}

RatFunc norm(const FFElem& e) {
    const FieldCtx& k = e.alg()->ctx();
    const int n = e.alg()->dim();
    FFElem prod = e.alg()->one();
    // the n-th roots of unity are exactly GF(q)^* when n = q - 1
    std::vector<Elt> zetas;
    for (Elt z = 1; z < k.size(); ++z)
        if (k.pow(z, static_cast<std::uint64_t>(n)) == 1) zetas.push_back(z);
    if (static_cast<int>(zetas.size()) != n) fail(ErrorCode::WrongOrder, "base field lacks the roots of unity");
    for (Elt z : zetas) {
        std::vector<RatFunc> c = e.coords();
        Elt zi = 1;
        for (auto& ci : c) {
            ci = ci.scaled(zi);
            zi = k.mul(zi, z);
        }
        prod = prod * e.alg()->from_coords(std::move(c));
    }
    if (!prod.is_scalar()) fail(ErrorCode::TransportFailure, "norm is not a scalar");
    return prod.coord(0);
}

KummerCertificate verify_kummer_model(const CycModel& model, Elt gamma) {
    const FieldCtx& k = model.M.k;
    if (gamma == 0) fail(ErrorCode::DivisionByZero, "gamma must be nonzero");
    const std::uint32_t q = model.q();
    const AlgElem y = model.y(), x = model.x();
    const AlgElem yq1 = y.pow(q - 1);
    const AlgElem v = RatFunc::constant(k, k.inv(gamma)) * (x + yq1);
    const RatFunc g = RatFunc::constant(k, gamma);
    const AlgElem gv = g * v;
    AlgElem res = g * (yq1 * (v.pow(q) - v)) + gv * gv + RatFunc::constant(k, model.M.a) * gv +
                  model.ring->scalar(RatFunc::constant(k, model.M.b));
    const bool ok = res.is_zero();
    return KummerCertificate{ok, std::move(res)};
}

KummerCertificate verify_kummer_model(const Modulus& M, Elt gamma) { return verify_kummer_model(torsion_minpoly(M), gamma); }

KummerSubst kummer_normalize(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1 || std::gcd(n, k) != 1)
        fail(ErrorCode::NotCoprime, "need coprime positive (n, k), got (" + std::to_string(n) + ", " +
                                        std::to_string(k) + ")");
    const std::int64_t r = k == 1 ? 0 : mod_inverse(n, k);
    return KummerSubst{r, (1 - r * n) / k};
}

FFElem kummer_substitute(const AlgPtr& alg, const KummerSubst& sub, const RatFunc& w) {
    const FFElem y = alg->gen();
    const FFElem ys = sub.s >= 0 ? y.pow(static_cast<std::uint64_t>(sub.s))
                                 : y.inv().pow(static_cast<std::uint64_t>(-sub.s));
    return w.pow(sub.r) * ys;
}

Recognition recognize_cyclotomic(const FieldCtx& k, Elt lambda, std::int64_t r, Elt a, Elt b) {
    const std::int64_t n = static_cast<std::int64_t>(k.size()) - 1;
    if (lambda == 0) fail(ErrorCode::DivisionByZero, "lambda must be nonzero");
    if (r < 1 || std::gcd(r, n) != 1) fail(ErrorCode::NotCoprime, "r must be positive and prime to q-1");
    const std::int64_t rinv = n == 1 ? 0 : mod_inverse(r, n);
    const Elt c = k.pow(lambda, static_cast<std::uint64_t>(rinv));
    const Elt ma = k.neg(k.mul(c, a));
    const Elt mb = k.mul(k.mul(c, c), b);
    if (!is_irreducible(Poly(k, {mb, ma, 1})))
        fail(ErrorCode::ReducibleResult, "recognized modulus is reducible; input violates the hypotheses");
    return Recognition{Modulus{k, ma, mb}, c, k.neg(c), kummer_normalize(n, r)};
}

}  // namespace cff
