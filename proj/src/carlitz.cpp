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


#include "cff/carlitz.hpp"

#include <sstream>

#include "cff/parse.hpp"

namespace cff {

namespace {

// p(x^e) by spreading coefficients.
Poly spread(const Poly& p, std::uint64_t e) {
    if (p.is_zero() || e == 1) return p;
    std::vector<Elt> c(static_cast<std::size_t>(p.degree()) * e + 1, 0);
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i) * e] = p.coeff(i);
    return Poly(p.ctx(), std::move(c));
}

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

Modulus Modulus::make(const FieldCtx& k, Elt a, Elt b) {
    Modulus m{k, a, b};
    if (!is_irreducible(m.poly())) fail(ErrorCode::ReducibleModulus, m.str() + " is reducible over " + k.name());
    return m;
}

Modulus Modulus::parse(const FieldCtx& k, std::string_view text) {
    const Poly p = parse_poly(k, text);
    if (p.degree() != 2 || !p.is_monic())
        fail(ErrorCode::ParseError, "modulus must be a monic quadratic, got " + std::string(text));
    return make(k, p.coeff(1), p.coeff(0));
}

CarlitzPoly::CarlitzPoly(FieldCtx k, std::vector<Poly> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
    for (const auto& p : c_)
        if (p.ctx() != k_) fail(ErrorCode::CtxMismatch, "Carlitz coefficient over another field");
    trim();
}

void CarlitzPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::uint64_t CarlitzPoly::z_degree() const { return upow(k_.size(), height()); }

CarlitzPoly CarlitzPoly::compose(const CarlitzPoly& inner) const {
    if (c_.empty() || inner.c_.empty()) return CarlitzPoly(k_, {});
    std::vector<Poly> r(c_.size() + inner.c_.size() - 1, Poly(k_));
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < c_.size(); ++i, qi *= k_.size()) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < inner.c_.size(); ++j) r[i + j] += c_[i] * spread(inner.c_[j], qi);
    }
    return CarlitzPoly(k_, std::move(r));
}

CarlitzPoly operator+(const CarlitzPoly& a, const CarlitzPoly& b) {
    if (a.k_ != b.k_) fail(ErrorCode::CtxMismatch, "Carlitz polynomials over different fields");
    std::vector<Poly> r(std::max(a.c_.size(), b.c_.size()), Poly(a.k_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return CarlitzPoly(a.k_, std::move(r));
}

AlgElem CarlitzPoly::eval(const AlgElem& z) const {
    AlgElem r = z.alg()->zero(), zp = z;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) zp = zp.pow(k_.size());
        if (!c_[i].is_zero()) r += RatFunc(c_[i]) * zp;
    }
    return r;
}

AlgElem CarlitzPoly::eval(const AlgElem& z, const RatFunc& xval) const {
    AlgElem r = z.alg()->zero(), zp = z;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) zp = zp.pow(k_.size());
        if (!c_[i].is_zero()) r += RatFunc(c_[i]).compose(xval) * zp;
    }
    return r;
}

FieldElem CarlitzPoly::eval(const FieldElem& z, const FieldElem& x) const {
    FieldElem r = FieldElem::zero(z.ctx()), zp = z;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) zp = zp.pow(k_.size());
        r = r + c_[i].eval(x) * zp;
    }
    return r;
}

std::string CarlitzPoly::str() const {
    std::ostringstream os;
    bool first = true;
    std::uint64_t e = z_degree();
    for (std::size_t i = c_.size(); i-- > 0; e /= std::max<std::uint64_t>(k_.size(), 1)) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!c_[i].is_one()) os << '(' << format(c_[i], 'x') << ")*";
        os << 'z';
        if (e > 1) os << '^' << e;
    }
    if (first) os << '0';
    return os.str();
}

CarlitzPoly carlitz_of(const Poly& f) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "Carlitz action of the zero polynomial");
    const FieldCtx& k = f.ctx();
    const CarlitzPoly cx(k, {Poly::var(k), Poly::one(k)});
    CarlitzPoly power(k, {Poly::one(k)});
    CarlitzPoly r(k, {});
    for (int j = 0; j <= f.degree(); ++j) {
        if (j > 0) power = cx.compose(power);
        if (f.coeff(j) == 0) continue;
        std::vector<Poly> scaled;
        for (const auto& c : power.coeffs()) scaled.push_back(c.scaled(f.coeff(j)));
        r = r + CarlitzPoly(k, std::move(scaled));
    }
    return r;
}

AlgElem CycModel::x() const { return ring->scalar(RatFunc::var(M.k)); }
AlgElem CycModel::y() const { return ring->gen(); }

std::vector<Poly> CycModel::minpoly() const {
    const std::uint32_t q = M.q();
    std::vector<Poly> m(static_cast<std::size_t>(q) * q, Poly(M.k));
    m[0] = cm.coeffs()[0];
    m[q - 1] = cm.coeffs()[1];
    m.back() = Poly::one(M.k);
    return m;
}

std::string CycModel::minpoly_str() const {
    const std::vector<Poly> m = minpoly();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = format(m[i], 'x');
        if (i == 0) {
            os << (m[i].degree() > 0 ? "(" + c + ")" : c);
            continue;
        }
        if (!m[i].is_one()) os << '(' << c << ")*";
        os << 'y';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

CycModel torsion_minpoly(const Modulus& M) {
    if (!is_irreducible(M.poly())) fail(ErrorCode::ReducibleModulus, M.str() + " is reducible");
    const std::uint32_t q = M.q();
    CarlitzPoly cm = carlitz_of(M.poly());
    if (cm.height() != 2 || !cm.coeffs()[2].is_one() || cm.z_degree() != std::uint64_t{q} * q)
        fail(ErrorCode::TransportFailure, "unexpected shape of C_M");
    // dC_M/dz is the z-coefficient; separable iff it is nonzero.
    if (cm.coeffs()[0].is_zero()) fail(ErrorCode::TransportFailure, "C_M is inseparable");
    const int n = static_cast<int>(q * q - 1);
    AlgPtr ring = QuotientAlgebra::make(
        M.k, n, {{static_cast<int>(q - 1), RatFunc(cm.coeffs()[1])}, {0, RatFunc(cm.coeffs()[0])}});
    return CycModel{M, std::move(cm), std::move(ring)};
}

AlgElem GaloisMap::apply(const AlgElem& e) const {
    AlgElem r = e.alg()->zero(), p = e.alg()->one();
    for (std::size_t i = 0; i < e.coords().size(); ++i) {
        if (i > 0) p = p * image;
        if (!e.coords()[i].is_zero()) r += e.coords()[i] * p;
    }
    return r;
}

GaloisMap galois_map(const Poly& u, const CycModel& model) {
    if (u.ctx() != model.M.k) fail(ErrorCode::CtxMismatch, "unit over another field");
    const Poly ur = u % model.M.poly();
    if (ur.is_zero()) fail(ErrorCode::NotAUnit, format(u, 'x') + " is divisible by the modulus");
    const AlgElem img = carlitz_of(ur).eval(model.y());
    // the image must again satisfy the minimal polynomial
    const std::uint32_t q = model.q();
    const AlgElem check = img.pow(std::uint64_t{q} * q - 1) + RatFunc(model.cm.coeffs()[1]) * img.pow(q - 1) +
                          model.ring->scalar(RatFunc(model.cm.coeffs()[0]));
    if (!check.is_zero()) fail(ErrorCode::TransportFailure, "C_u(y) is not a root of the minimal polynomial");
    return GaloisMap{ur, model.M.poly(), img};
}

GaloisMap compose(const GaloisMap& s, const GaloisMap& t) {
    return GaloisMap{(s.u * t.u) % s.modulus, s.modulus, s.apply(t.image)};
}

std::uint64_t galois_order(const GaloisMap& s, const CycModel& model) {
    const CarlitzPoly cu = carlitz_of(s.u);
    const AlgElem y = model.y();
    AlgElem w = s.image;
    const std::uint64_t cap = std::uint64_t{model.q()} * model.q();
    for (std::uint64_t m = 1; m <= cap; ++m) {
        if (w == y) return m;
        w = cu.eval(w);
    }
    fail(ErrorCode::TransportFailure, "Galois element of unbounded order");
}

std::uint64_t unit_order(const Poly& u, const Modulus& M) {
    const Poly ur = u % M.poly();
    if (ur.is_zero()) fail(ErrorCode::NotAUnit, "zero is not a unit");
    const std::uint64_t group = std::uint64_t{M.q()} * M.q() - 1;
    std::uint64_t ord = group;
    for (std::uint64_t p : prime_factors(group))
        while (ord % p == 0 && powmod(ur, ord / p, M.poly()).is_one()) ord /= p;
    return ord;
}

std::vector<Poly> units(const Modulus& M) {
    std::vector<Poly> out;
    for (std::uint64_t r0 = 0; r0 < M.q(); ++r0)
        for (std::uint64_t r1 = 0; r1 < M.q(); ++r1) {
            if (r0 == 0 && r1 == 0) continue;
            out.emplace_back(M.k, std::vector<Elt>{M.k.from_lex_rank(r0), M.k.from_lex_rank(r1)});
        }
    return out;
}

Poly unit_generator(const Modulus& M) {
    const std::uint64_t group = std::uint64_t{M.q()} * M.q() - 1;
    for (const Poly& u : units(M))
        if (unit_order(u, M) == group) return u;
    fail(ErrorCode::TransportFailure, "no generator of the unit group");
}

}  // namespace cff
