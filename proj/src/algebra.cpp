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


#include "cff/algebra.hpp"

#include <sstream>

namespace cff {

namespace {

using RPoly = std::vector<RatFunc>;  // polynomial in Y over K(x), constant first

void trim(RPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int deg(const RPoly& f) { return static_cast<int>(f.size()) - 1; }

std::pair<RPoly, RPoly> rdivmod(RPoly f, const RPoly& g) {
    const int dg = deg(g);
    const RatFunc lead_inv = g.back().inv();
    RPoly q(f.size() > g.size() ? f.size() - g.size() + 1 : 0, RatFunc(g.back().ctx()));
    for (int d = deg(f); d >= dg; --d) {
        const RatFunc t = f[static_cast<std::size_t>(d)] * lead_inv;
        if (t.is_zero()) continue;
        q[static_cast<std::size_t>(d - dg)] = t;
        for (int i = 0; i <= dg; ++i) f[static_cast<std::size_t>(d - dg + i)] -= t * g[static_cast<std::size_t>(i)];
    }
    trim(f);
    trim(q);
    return {std::move(q), std::move(f)};
}

RPoly rmul(const RPoly& a, const RPoly& b, const FieldCtx& k) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1, RatFunc(k));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

RPoly rsub(RPoly a, const RPoly& b, const FieldCtx& k) {
    if (a.size() < b.size()) a.resize(b.size(), RatFunc(k));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

void check_same(const AlgElem& a, const AlgElem& b) {
    if (a.alg() != b.alg()) fail(ErrorCode::CtxMismatch, "elements of different algebras");
}

}  // namespace

std::shared_ptr<const QuotientAlgebra> QuotientAlgebra::make(FieldCtx ctx, int n,
                                                              std::vector<std::pair<int, RatFunc>> tail) {
    if (n < 1) fail(ErrorCode::ConstantPolynomial, "quotient by a constant");
    std::erase_if(tail, [](const auto& t) { return t.second.is_zero(); });
    for (const auto& [i, c] : tail) {
        if (i < 0 || i >= n) fail(ErrorCode::ParseError, "tail exponent out of range");
        if (c.ctx() != ctx) fail(ErrorCode::CtxMismatch, "tail coefficient over another field");
    }
    return std::shared_ptr<const QuotientAlgebra>(new QuotientAlgebra(std::move(ctx), n, std::move(tail)));
}

std::vector<RatFunc> QuotientAlgebra::modulus() const {
    std::vector<RatFunc> m(static_cast<std::size_t>(n_) + 1, RatFunc(ctx_));
    m.back() = RatFunc::constant(ctx_, 1);
    for (const auto& [i, c] : tail_) m[static_cast<std::size_t>(i)] += c;
    return m;
}

AlgElem QuotientAlgebra::zero() const {
    return AlgElem(shared_from_this(), std::vector<RatFunc>(static_cast<std::size_t>(n_), RatFunc(ctx_)));
}

AlgElem QuotientAlgebra::one() const { return scalar(RatFunc::constant(ctx_, 1)); }

AlgElem QuotientAlgebra::scalar(const RatFunc& r) const {
    if (r.ctx() != ctx_) fail(ErrorCode::CtxMismatch, "scalar over another field");
    AlgElem e = zero();
    std::vector<RatFunc> c = e.coords();
    c[0] = r;
    return AlgElem(shared_from_this(), std::move(c));
}

AlgElem QuotientAlgebra::gen() const { return monomial(1); }

AlgElem QuotientAlgebra::monomial(std::uint64_t i) const {
    if (i < static_cast<std::uint64_t>(n_)) {
        std::vector<RatFunc> c(static_cast<std::size_t>(n_), RatFunc(ctx_));
        c[i] = RatFunc::constant(ctx_, 1);
        return AlgElem(shared_from_this(), std::move(c));
    }
    return gen().pow(i);
}

AlgElem QuotientAlgebra::from_coords(std::vector<RatFunc> c) const {
    for (const auto& r : c)
        if (r.ctx() != ctx_) fail(ErrorCode::CtxMismatch, "coordinate over another field");
    return AlgElem(shared_from_this(), reduce(std::move(c)));
}

std::vector<RatFunc> QuotientAlgebra::reduce(std::vector<RatFunc> c) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    for (std::size_t d = c.size(); d-- > n;) {
        if (c[d].is_zero()) continue;
        const RatFunc t = c[d];
        for (const auto& [i, ci] : tail_) c[d - n + static_cast<std::size_t>(i)] -= t * ci;
    }
    c.resize(n, RatFunc(ctx_));
    return c;
}

bool AlgElem::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool AlgElem::is_one() const { return is_scalar() && c_[0].is_one(); }

bool AlgElem::is_scalar() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

AlgElem AlgElem::operator-() const {
    std::vector<RatFunc> c = c_;
    for (auto& r : c) r = -r;
    return AlgElem(alg_, std::move(c));
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    check_same(a, b);
    std::vector<RatFunc> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return AlgElem(a.alg_, std::move(c));
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    check_same(a, b);
    std::vector<RatFunc> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return AlgElem(a.alg_, std::move(c));
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    check_same(a, b);
    const FieldCtx& k = a.alg_->ctx();
    const std::size_t n = a.c_.size();
    std::vector<RatFunc> r(2 * n - 1, RatFunc(k));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return AlgElem(a.alg_, a.alg_->reduce(std::move(r)));
}

AlgElem operator*(const RatFunc& s, const AlgElem& a) {
    if (s.ctx() != a.alg_->ctx()) fail(ErrorCode::CtxMismatch, "scalar over another field");
    std::vector<RatFunc> c = a.c_;
    for (auto& r : c)
        if (!r.is_zero()) r = s * r;
    return AlgElem(a.alg_, std::move(c));
}

AlgElem AlgElem::pow(std::uint64_t e) const {
    AlgElem r = alg_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

AlgElem AlgElem::inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in a quotient algebra");
    const FieldCtx& k = alg_->ctx();
    RPoly r0 = alg_->modulus(), r1 = c_;
    trim(r1);
    RPoly s0, s1{RatFunc::constant(k, 1)};
    while (deg(r1) > 0) {
        auto [q, r] = rdivmod(r0, r1);
        RPoly s = rsub(s0, rmul(q, s1, k), k);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) fail(ErrorCode::DivisionByZero, "zero divisor in a quotient algebra");
    const RatFunc li = r1[0].inv();
    for (auto& c : s1) c = li * c;
    return alg_->from_coords(std::move(s1));
}

bool operator==(const AlgElem& a, const AlgElem& b) { return a.alg_ == b.alg_ && a.c_ == b.c_; }

std::string AlgElem::str(char var, char gen) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string cs = format(c_[i], var);
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!c_[i].is_one()) os << '(' << cs << ")*";
        os << gen;
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace cff
