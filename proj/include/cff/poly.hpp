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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cff/gf.hpp"

namespace cff {

/// Univariate polynomial over a FieldCtx, constant term first, never with
/// trailing zeros. The zero polynomial has no coefficients.
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtx ctx, std::vector<Elt> coeffs);

    static Poly constant(const FieldCtx& ctx, Elt c) { return Poly(ctx, {c}); }
    static Poly one(const FieldCtx& ctx) { return constant(ctx, 1); }
    /// c * T^deg
    static Poly monomial(const FieldCtx& ctx, Elt c, int deg);
    /// The variable T.
    static Poly var(const FieldCtx& ctx) { return monomial(ctx, 1, 1); }
    /// T - c
    static Poly linear_root(const FieldCtx& ctx, Elt c);

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<Elt>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elt lead() const { return c_.empty() ? 0 : c_.back(); }
    Elt coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }

    Elt eval(Elt x) const;
    /// Evaluation at a point of any extension of ctx().
    FieldElem eval(const FieldElem& x) const;

    Poly scaled(Elt c) const;
    Poly monic() const;
    Poly derivative() const;
    /// this(inner(T))
    Poly compose(const Poly& inner) const;
    Poly pow(std::uint64_t e) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Total order used for canonical sorting (degree, then coefficients).
    friend bool operator<(const Poly& a, const Poly& b);

private:
    void normalize();

    FieldCtx ctx_;
    std::vector<Elt> c_;
};

/// (quotient, remainder) with deg remainder < deg divisor.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);

struct GcdResult {
    Poly gcd;  // monic
    Poly u;    // u*f + w*g = gcd
    Poly w;
};

/// Monic gcd with Bezout cofactors. Throws BothZero.
GcdResult poly_gcd(const Poly& f, const Poly& g);
/// Monic gcd only (cheaper; used for normalization).
Poly gcd(Poly f, Poly g);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
/// T^{Q^k} mod m where Q = |ctx|, by k successive Q-th powers.
Poly frobenius_power(const Poly& m, std::uint32_t k);

/// Irreducibility over the polynomial's own field. Throws ConstantPolynomial.
bool is_irreducible(const Poly& f);

/// All roots in an extension field, with multiplicity, sorted in lex order.
std::vector<FieldElem> roots_in(const Poly& f, const FieldCtx& ext);

/// Coefficient-wise image under an embedding.
Poly map_coeffs(const Poly& f, const Embedding& emb);
Poly map_to(const Poly& f, const FieldCtx& ext);

/// Multiplicity of (T - c) in f, for c in an extension of f's field.
int root_multiplicity(const Poly& f, const FieldElem& c);

std::string format(const Poly& f, char var = 'T');

/// Reduced rational function num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const FieldCtx& ctx) : num_(ctx), den_(Poly::one(ctx)) {}
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor): polynomials are rational functions
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const FieldCtx& ctx, Elt c) { return RatFunc(Poly::constant(ctx, c)); }
    static RatFunc var(const FieldCtx& ctx) { return RatFunc(Poly::var(ctx)); }

    const FieldCtx& ctx() const { return num_.ctx(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc inv() const;
    RatFunc pow(std::int64_t e) const;
    /// this(inner(T))
    RatFunc compose(const RatFunc& inner) const;
    RatFunc scaled(Elt c) const;
    /// Value at x, or nullopt at a pole.
    std::optional<FieldElem> eval(const FieldElem& x) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b);

private:
    struct Trusted {};
    RatFunc(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

RatFunc map_coeffs(const RatFunc& r, const Embedding& emb);
RatFunc map_to(const RatFunc& r, const FieldCtx& ext);

/// A point of the projective line over an extension of the base field.
struct Point {
    bool at_infinity = false;
    FieldElem c;

    static Point infinity() { return {true, {}}; }
    static Point finite(FieldElem c) { return {false, std::move(c)}; }
};

/// Order of vanishing at a point: multiplicity in num minus multiplicity in
/// den, or deg den - deg num at infinity. Throws ZeroValuation for 0.
int ratfunc_valuation(const RatFunc& r, const Point& at);

std::string format(const RatFunc& r, char var = 'v');

}  // namespace cff
