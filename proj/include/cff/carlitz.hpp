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
#include <vector>

#include "cff/algebra.hpp"
#include "cff/poly.hpp"

namespace cff {

/// Monic irreducible quadratic T^2 + aT + b over GF(q).
struct Modulus {
    FieldCtx k;
    Elt a = 0;
    Elt b = 0;

    /// Throws ReducibleModulus.
    static Modulus make(const FieldCtx& k, Elt a, Elt b);
    /// Accepts a literal such as "T^2+1"; throws ParseError or ReducibleModulus.
    static Modulus parse(const FieldCtx& k, std::string_view text);

    std::uint32_t q() const { return k.size(); }
    Poly poly() const { return Poly(k, {b, a, 1}); }
    std::string str() const { return format(poly()); }
};

/// Additive polynomial z -> sum_i c_i(x) z^{q^i} with c_i in GF(q)[x].
class CarlitzPoly {
public:
    CarlitzPoly() = default;
    CarlitzPoly(FieldCtx k, std::vector<Poly> coeffs);

    const FieldCtx& ctx() const { return k_; }
    const std::vector<Poly>& coeffs() const { return c_; }
    /// Largest i with c_i nonzero.
    int height() const { return static_cast<int>(c_.size()) - 1; }
    /// Degree in z, q^height.
    std::uint64_t z_degree() const;

    /// this(inner(z)).
    CarlitzPoly compose(const CarlitzPoly& inner) const;
    friend CarlitzPoly operator+(const CarlitzPoly& a, const CarlitzPoly& b);
    friend bool operator==(const CarlitzPoly& a, const CarlitzPoly& b) { return a.k_ == b.k_ && a.c_ == b.c_; }

    /// Value at an algebra element whose scalars are GF(q)(x).
    AlgElem eval(const AlgElem& z) const;
    /// Value at z with x replaced by the scalar xval.
    AlgElem eval(const AlgElem& z, const RatFunc& xval) const;
    /// Value at a constant z with x replaced by a field element.
    FieldElem eval(const FieldElem& z, const FieldElem& x) const;

    std::string str() const;

private:
    void trim();

    FieldCtx k_;
    std::vector<Poly> c_;
};

/// C_f from C_x = z^q + xz, C_{fg} = C_f o C_g, C_{f+g} = C_f + C_g.
/// Throws ZeroPolynomial.
CarlitzPoly carlitz_of(const Poly& f);

/// GF(q)(x)[y]/(y^{q^2-1} + (x^q+x+a) y^{q-1} + (x^2+ax+b)).
struct CycModel {
    Modulus M;
    CarlitzPoly cm;
    AlgPtr ring;

    std::uint32_t q() const { return M.q(); }
    AlgElem x() const;
    AlgElem y() const;
    /// Coefficients of the minimal polynomial in z, as polynomials in x.
    std::vector<Poly> minpoly() const;
    std::string minpoly_str() const;
};

/// Throws ReducibleModulus.
CycModel torsion_minpoly(const Modulus& M);

/// sigma_u: x -> x, y -> C_u(y).
struct GaloisMap {
    Poly u;  // reduced mod M, degree <= 1
    Poly modulus;
    AlgElem image;

    AlgElem apply(const AlgElem& e) const;
};

/// Throws NotAUnit. Checks that the image of y is again a root of the
/// minimal polynomial.
GaloisMap galois_map(const Poly& u, const CycModel& model);
/// s o t (apply t first).
GaloisMap compose(const GaloisMap& s, const GaloisMap& t);
/// Order of sigma as a field automorphism, by iterating C_u on y.
std::uint64_t galois_order(const GaloisMap& s, const CycModel& model);

/// Order of u in (GF(q)[x]/M)^*.
std::uint64_t unit_order(const Poly& u, const Modulus& M);
/// Least c0 + c1 x (lex order on (c0, c1)) of order q^2 - 1.
Poly unit_generator(const Modulus& M);
/// All q^2 - 1 units c0 + c1 x in lex order.
std::vector<Poly> units(const Modulus& M);

}  // namespace cff
