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


#pragma once

#include <cstdint>
#include <string>

#include "cff/algebra.hpp"
#include "cff/carlitz.hpp"

namespace cff {

/// Function-field element sum_i c_i(v) y^i of a Kummer curve.
using FFElem = AlgElem;

/// y^{q-1} = h(v) with h = -(gamma v^2 + a v + b/gamma)/(v^q - v).
struct KummerCurve {
    Modulus M;
    Elt gamma = 1;
    RatFunc h;
    AlgPtr alg;

    std::uint32_t q() const { return M.q(); }
    const FieldCtx& k() const { return M.k; }
    /// gamma v^2 + a v + b/gamma
    Poly quad() const;
    /// v^q - v
    Poly ram_poly() const;

    FFElem one() const { return alg->one(); }
    FFElem v() const { return alg->scalar(RatFunc::var(M.k)); }
    FFElem y() const { return alg->gen(); }
    FFElem scalar(const RatFunc& r) const { return alg->scalar(r); }

    std::string str() const;
};

/// Throws ReducibleModulus, DivisionByZero for gamma = 0.
KummerCurve make_curve(const Modulus& M, Elt gamma = 1);

/// Input curve y^{n} = h with an arbitrary function h (used for
/// characterisation inputs).
AlgPtr kummer_algebra(const FieldCtx& k, int n, const RatFunc& h);

/// Product of the conjugates e(zeta y), zeta in GF(q)^*; lies in GF(q)(v).
RatFunc norm(const FFElem& e);

struct KummerCertificate {
    bool ok = false;
    AlgElem residual;
};

/// Sets v := gamma^{-1}(x + y^{q-1}) in the cyclotomic ring and reduces
/// gamma y^{q-1}(v^q - v) + (gamma v)^2 + a gamma v + b.
KummerCertificate verify_kummer_model(const CycModel& model, Elt gamma);
KummerCertificate verify_kummer_model(const Modulus& M, Elt gamma);

/// Bezout data r n + s k = 1 with 0 <= r < k; z = y^s u^r.
struct KummerSubst {
    std::int64_t r = 0;
    std::int64_t s = 0;
};

/// Throws NotCoprime.
KummerSubst kummer_normalize(std::int64_t n, std::int64_t k);

/// z = y^s w^r inside an algebra where y^n = w^k.
FFElem kummer_substitute(const AlgPtr& alg, const KummerSubst& sub, const RatFunc& w);

struct Recognition {
    Modulus M;
    Elt root = 0;  // lambda^{1/r}
    Elt gamma = 0;
    KummerSubst subst;
};

/// Input curve y^{q-1} = lambda ((v^2+av+b)/(v^q-v))^r. Returns
/// M = T^2 - c a T + c^2 b with c = lambda^{r^{-1} mod (q-1)}.
/// Throws NotCoprime, ReducibleResult.
Recognition recognize_cyclotomic(const FieldCtx& k, Elt lambda, std::int64_t r, Elt a, Elt b);

}  // namespace cff
