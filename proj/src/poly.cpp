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

#include "cff/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cff {

namespace {

void require_same(const Poly& a, const Poly& b) {
    if (a.ctx() != b.ctx())
        fail(ErrorCode::CtxMismatch, "polynomials over " + a.ctx().name() + " and " + b.ctx().name());
}

}  // namespace

Poly::Poly(FieldCtx ctx, std::vector<Elt> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const FieldCtx& ctx, Elt c, int deg) {
    if (c == 0) return Poly(ctx);
    std::vector<Elt> v(static_cast<std::size_t>(deg) + 1, 0);
    v.back() = c;
    return Poly(ctx, std::move(v));
}

Poly Poly::linear_root(const FieldCtx& ctx, Elt c) { return Poly(ctx, {ctx.neg(c), 1}); }

Elt Poly::eval(Elt x) const {
    Elt v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = ctx_.add(ctx_.mul(v, x), c_[i]);
    return v;
}

FieldElem Poly::eval(const FieldElem& x) const {
    if (x.ctx() == ctx_) return {ctx_, eval(x.raw())};
    const Embedding& emb = embedding(ctx_, x.ctx());
    const FieldCtx& k = x.ctx();
    Elt v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = k.add(k.mul(v, x.raw()), emb(c_[i]));
    return {k, v};
}

Poly Poly::scaled(Elt c) const {
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_.mul(c_[i], c);
    return Poly(ctx_, std::move(v));
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(ctx_.inv(c_.back()));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(ctx_);
    std::vector<Elt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = ctx_.mul(c_[i], ctx_.from_int(static_cast<std::int64_t>(i)));
    return Poly(ctx_, std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
    require_same(*this, inner);
    Poly r(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + Poly::constant(ctx_, c_[i]);
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = Poly::one(ctx_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::operator-() const {
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_.neg(c_[i]);
    return Poly(ctx_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& k = a.ctx_;
    std::vector<Elt> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(k, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& k = a.ctx_;
    std::vector<Elt> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(k, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (a.c_.empty() || b.c_.empty()) return Poly(a.ctx_);
    const auto& k = a.ctx_;
    std::vector<Elt> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = k.add(v[i + j], k.mul(a.c_[i], b.c_[j]));
    }
    return Poly(k, std::move(v));
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    require_same(f, g);
    if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const FieldCtx& k = f.ctx();
    std::vector<Elt> r = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    if (r.size() <= dg) return {Poly(k), f};
    std::vector<Elt> q(r.size() - dg, 0);
    const Elt li = k.inv(gc.back());
    for (std::size_t i = r.size(); i-- > dg;) {
        const Elt c = k.mul(r[i], li);
        q[i - dg] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = k.sub(r[i - dg + j], k.mul(c, gc[j]));
    }
    r.resize(dg);
    return {Poly(k, std::move(q)), Poly(k, std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

GcdResult poly_gcd(const Poly& f, const Poly& g) {
    require_same(f, g);
    const FieldCtx& k = f.ctx();
    if (f.is_zero() && g.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::one(k), s1(k);
    Poly t0(k), t1 = Poly::one(k);
    while (!r1.is_zero()) {
        auto [qq, rr] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rr);
        Poly s2 = s0 - qq * s1;
        Poly t2 = t0 - qq * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Elt li = k.inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly gcd(Poly f, Poly g) {
    require_same(f, g);
    while (!g.is_zero()) {
        Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::one(base.ctx()) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

Poly frobenius_power(const Poly& m, std::uint32_t k) {
    Poly x = Poly::var(m.ctx()) % m;
    for (std::uint32_t i = 0; i < k; ++i) x = powmod(x, m.ctx().size(), m);
    return x;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) fail(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
    const Poly m = f.monic();
    const auto d = static_cast<std::uint32_t>(m.degree());
    if (d == 1) return true;
    const Poly t = Poly::var(m.ctx()) % m;
    if (frobenius_power(m, d) != t) return false;
    for (auto r : prime_factors(d)) {
        const Poly h = frobenius_power(m, d / static_cast<std::uint32_t>(r)) - t;
        if (!gcd(m, h).is_one()) return false;
    }
    return true;
}

Poly map_coeffs(const Poly& f, const Embedding& emb) {
    if (f.ctx() != emb.src) fail(ErrorCode::CtxMismatch, "embedding source mismatch");
    std::vector<Elt> v(f.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = emb(f.coeffs()[i]);
    return Poly(emb.dst, std::move(v));
}

Poly map_to(const Poly& f, const FieldCtx& ext) {
    if (f.ctx() == ext) return f;
    return map_coeffs(f, embedding(f.ctx(), ext));
}

int root_multiplicity(const Poly& f, const FieldElem& c) {
    if (f.is_zero()) fail(ErrorCode::ZeroValuation, "multiplicity in the zero polynomial");
    const FieldCtx& k = c.ctx();
    std::vector<Elt> a = map_to(f, k).coeffs();
    int m = 0;
    while (a.size() > 1) {
        // synthetic division by (T - c)
        std::vector<Elt> q(a.size() - 1);
        Elt acc = 0;
        for (std::size_t i = a.size(); i-- > 1;) {
            acc = k.add(k.mul(acc, c.raw()), a[i]);
            q[i - 1] = acc;
        }
        const Elt rem = k.add(k.mul(acc, c.raw()), a[0]);
        if (rem != 0) break;
        a = std::move(q);
        ++m;
    }
    return m;
}

std::vector<FieldElem> roots_in(const Poly& f, const FieldCtx& ext) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
    const Poly g = map_to(f, ext);
    std::vector<FieldElem> out;
    if (g.degree() < 1) return out;
    for (std::uint64_t rank = 0; rank < ext.size(); ++rank) {
        const Elt x = ext.from_lex_rank(rank);
        if (g.eval(x) != 0) continue;
        const int m = root_multiplicity(g, FieldElem(ext, x));
        for (int i = 0; i < m; ++i) out.emplace_back(ext, x);
    }
    return out;
}

std::string format(const Poly& f, char var) {
    if (f.is_zero()) return "0";
    const FieldCtx& k = f.ctx();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Elt c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        const std::string cs = k.format(c);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << cs;
            continue;
        }
        if (c != 1) os << (compound ? "(" + cs + ")" : cs) << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.ctx())) {}

RatFunc::RatFunc(Poly num, Poly den) {
    require_same(num, den);
    if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    const FieldCtx& k = num.ctx();
    if (num.is_zero()) {
        num_ = Poly(k);
        den_ = Poly::one(k);
        return;
    }
    if (!den.is_constant()) {
        const Poly g = gcd(num, den);
        if (!g.is_one()) {
            num = num / g;
            den = den / g;
        }
    }
    const Elt li = k.inv(den.lead());
    num_ = num.scaled(li);
    den_ = den.scaled(li);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero rational function");
    const Elt li = ctx().inv(num_.lead());
    return RatFunc(den_.scaled(li), num_.scaled(li), Trusted{});
}

RatFunc RatFunc::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)), Trusted{});
}

RatFunc RatFunc::scaled(Elt c) const {
    if (c == 0) return RatFunc(ctx());
    return RatFunc(num_.scaled(c), den_, Trusted{});
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    const FieldCtx& k = ctx();
    if (inner.ctx() != k) fail(ErrorCode::CtxMismatch, "rational function composition across fields");
    const int d = std::max(num_.degree(), den_.degree());
    if (d <= 0) return *this;
    std::vector<Poly> pp(static_cast<std::size_t>(d) + 1), qp(static_cast<std::size_t>(d) + 1);
    pp[0] = Poly::one(k);
    qp[0] = Poly::one(k);
    for (int i = 1; i <= d; ++i) {
        pp[i] = pp[i - 1] * inner.num();
        qp[i] = qp[i - 1] * inner.den();
    }
    auto homog = [&](const Poly& f) {
        Poly r(k);
        for (int i = 0; i <= f.degree(); ++i)
            if (f.coeff(i) != 0) r += (pp[i] * qp[d - i]).scaled(f.coeff(i));
        return r;
    };
    return RatFunc(homog(num_), homog(den_));
}

std::optional<FieldElem> RatFunc::eval(const FieldElem& x) const {
    const FieldElem d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Trusted{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
        Poly s = a.num_ + b.num_;
        return RatFunc(std::move(s), Poly::one(a.ctx()), RatFunc::Trusted{});
    }
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.ctx());
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, Poly::one(a.ctx()), RatFunc::Trusted{});
    // cross-cancel to keep intermediate degrees small
    const Poly g1 = a.den_.is_one() ? Poly::one(a.ctx()) : gcd(b.num_, a.den_);
    const Poly g2 = b.den_.is_one() ? Poly::one(a.ctx()) : gcd(a.num_, b.den_);
    Poly n = (a.num_ / g2) * (b.num_ / g1);
    Poly d = (a.den_ / g1) * (b.den_ / g2);
    const Elt li = a.ctx().inv(d.lead());
    return RatFunc(n.scaled(li), d.scaled(li), RatFunc::Trusted{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

RatFunc map_coeffs(const RatFunc& r, const Embedding& emb) {
    return RatFunc(map_coeffs(r.num(), emb), map_coeffs(r.den(), emb));
}

RatFunc map_to(const RatFunc& r, const FieldCtx& ext) {
    if (r.ctx() == ext) return r;
    return map_coeffs(r, embedding(r.ctx(), ext));
}

int ratfunc_valuation(const RatFunc& r, const Point& at) {
    if (r.is_zero()) fail(ErrorCode::ZeroValuation, "valuation of the zero function");
    if (at.at_infinity) return r.den().degree() - r.num().degree();
    return root_multiplicity(r.num(), at.c) - root_multiplicity(r.den(), at.c);
}

std::string format(const RatFunc& r, char var) {
    if (r.den().is_one()) return format(r.num(), var);
    return "(" + format(r.num(), var) + ")/(" + format(r.den(), var) + ")";
}

}  // namespace cff
