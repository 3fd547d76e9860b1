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


#include "cff/places.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace cff {

namespace {

using Series = std::vector<Elt>;

Series smul(const FieldCtx& F, const Series& a, const Series& b, std::size_t N) {
    Series r(N, 0);
    for (std::size_t i = 0; i < std::min(N, a.size()); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < N; ++j)
            if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

Series sinv(const FieldCtx& F, const Series& a, std::size_t N) {
    if (a.empty() || a[0] == 0) fail(ErrorCode::DivisionByZero, "inverse of a non-unit series");
    Series b(N, 0);
    b[0] = F.inv(a[0]);
    const Elt nb0 = F.neg(b[0]);
    for (std::size_t n = 1; n < N; ++n) {
        Elt s = 0;
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) s = F.add(s, F.mul(a[k], b[n - k]));
        b[n] = F.mul(s, nb0);
    }
    return b;
}

Series spow(const FieldCtx& F, Series a, std::uint64_t e, std::size_t N) {
    Series r(N, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = smul(F, r, a, N);
        e >>= 1;
        if (e) a = smul(F, a, a, N);
    }
    return r;
}

// p(c + t) mod t^N
Series taylor(const Poly& p, Elt c, std::size_t N) {
    const FieldCtx& F = p.ctx();
    Series r(N, 0);
    for (int j = p.degree(); j >= 0; --j) {
        for (std::size_t i = N; i-- > 0;) r[i] = F.add(F.mul(r[i], c), i > 0 ? r[i - 1] : 0);
        r[0] = F.add(r[0], p.coeff(j));
    }
    return r;
}

Poly lcm(const Poly& a, const Poly& b) { return ((a / gcd(a, b)) * b).monic(); }

Poly common_den(const FFElem& e) {
    Poly d = Poly::one(e.alg()->ctx());
    for (const auto& c : e.coords())
        if (!c.is_zero()) d = lcm(d, c.den());
    return d;
}

std::vector<Poly> integral_coords(const FFElem& e, const Poly& D) {
    std::vector<Poly> out;
    for (const auto& c : e.coords()) out.push_back(c.is_zero() ? Poly(D.ctx()) : c.num() * (D / c.den()));
    return out;
}

std::uint64_t upow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > kCountCap * 64) return r;
        r *= b;
    }
    return r;
}

FieldCtx constant_field(const KummerCurve& curve) {
    return create_field(curve.k().p(), curve.k().n() * 2);
}

Poly to_field(const Poly& p, const FieldCtx& K, const FieldCtx& F) { return map_to(map_to(p, K), F); }

std::string place_label_c(const FieldElem& c) {
    const std::string s = c.str();
    return s.find_first_of("+*^") == std::string::npos ? s : "(" + s + ")";
}

struct ClosedRoot {
    int d = 0;
    Poly g;  // product of the K-irreducible factors of degree d
};

// Distinct-degree split of fK: the roots grouped by the degree of their
// K-minimal polynomial.
std::vector<ClosedRoot> degree_split(const Poly& fK) {
    std::vector<ClosedRoot> out;
    const FieldCtx& K = fK.ctx();
    Poly fr = fK.monic();
    for (int d = 1; fr.degree() > 0; ++d) {
        if (upow(K.size(), d) > kCountCap)
            fail(ErrorCode::TooLarge, "a point of the divisor needs GF(" + std::to_string(K.size()) + "^" +
                                          std::to_string(d) + "), above the counting cap");
        const Poly xq = frobenius_power(fr, static_cast<std::uint32_t>(d));
        const Poly g = gcd(fr, xq - Poly::var(K));
        if (g.degree() <= 0) continue;
        for (Poly h = gcd(fr, g); h.degree() > 0; h = gcd(fr, g)) fr = fr / h;
        out.push_back(ClosedRoot{d, g});
    }
    return out;
}

Place make_generic(const FieldElem& c, const FieldElem& y, int degree, std::uint32_t q) {
    Place P;
    P.kind = PlaceKind::Generic;
    P.c = c;
    P.y = y;
    P.degree = degree;
    // degree of the underlying GF(q)-point: orbit length under x -> x^q
    FieldElem cc = c.pow(q), yy = y.pow(q);
    int fd = 1;
    while (!(cc == c && yy == y)) {
        cc = cc.pow(q);
        yy = yy.pow(q);
        ++fd;
    }
    P.fq_degree = fd;
    P.label = "R" + std::to_string(degree) + "[" + place_label_c(c) + "," + place_label_c(y) + "]";
    return P;
}

// All places over the roots of gK (a product of K-irreducibles of degree d).
std::vector<Place> places_over(const KummerCurve& curve, const FieldCtx& K, const Poly& gK, int d) {
    const std::uint32_t q = curve.q();
    const std::uint64_t m = q - 1;
    const std::uint64_t Q = K.size();
    const FieldCtx Fd = create_field(K.p(), K.n() * static_cast<std::uint32_t>(d), kCountCap);
    std::vector<Place> out;
    std::set<Elt> seen;
    for (const FieldElem& r : roots_in(gK, Fd)) {
        if (seen.count(r.raw())) continue;
        // the d conjugates of r
        std::vector<FieldElem> orbit{r};
        for (FieldElem x = r.pow(Q); x != r; x = x.pow(Q)) orbit.push_back(x);
        for (const auto& x : orbit) seen.insert(x.raw());
        const Poly hn = to_field(curve.h.num(), K, Fd), hd = to_field(curve.h.den(), K, Fd);
        const FieldElem hc = hn.eval(r) / hd.eval(r);
        // least e' | q-1 with hc a (q-1)-th power in GF(Q^{d e'})
        std::uint64_t ep = 0;
        for (std::uint64_t e = 1; e <= m; ++e) {
            if (m % e != 0) continue;
            const std::uint64_t big = upow(Q, static_cast<std::uint64_t>(d) * e);
            if (big > kCountCap)
                fail(ErrorCode::TooLarge, "residue field of a place exceeds the counting cap");
            const std::uint64_t exp = (big - 1) / m;
            if (hc.pow(exp).is_one()) {
                ep = e;
                break;
            }
        }
        if (ep == 0) fail(ErrorCode::TransportFailure, "no residue field for a place");
        const int D = d * static_cast<int>(ep);
        const FieldCtx F = create_field(K.p(), K.n() * static_cast<std::uint32_t>(D), kCountCap);
        // the K-minimal polynomial of r, pulled back from Fd
        Poly minpoly = Poly::one(Fd);
        for (const auto& x : orbit) minpoly = minpoly * Poly::linear_root(Fd, x.raw());
        const Embedding& kd = embedding(K, Fd);
        std::vector<Elt> kc;
        for (Elt c : minpoly.coeffs()) {
            const auto it = std::find(kd.table.begin(), kd.table.end(), c);
            if (it == kd.table.end()) fail(ErrorCode::TransportFailure, "minimal polynomial not over K");
            kc.push_back(static_cast<Elt>(it - kd.table.begin()));
        }
        std::vector<FieldElem> conj = roots_in(Poly(K, kc), F);
        const Poly hnF = to_field(curve.h.num(), K, F), hdF = to_field(curve.h.den(), K, F);
        const FieldElem c0 = conj.front();
        const FieldElem hc0 = hnF.eval(c0) / hdF.eval(c0);
        const auto w = F.root(hc0.raw(), m);
        if (!w) fail(ErrorCode::TransportFailure, "missing (q-1)-th root in the residue field");
        const Embedding& kF = embedding(K, F);
        const Embedding& kK = embedding(curve.k(), K);
        std::vector<FieldElem> ys;
        for (Elt z = 1; z < curve.k().size(); ++z) ys.emplace_back(F, F.mul(*w, kF(kK(z))));
        std::set<Elt> used;
        const std::uint64_t Qd = upow(Q, static_cast<std::uint64_t>(d));
        for (const auto& y0 : ys) {
            if (used.count(y0.raw())) continue;
            for (FieldElem t = y0;;) {
                used.insert(t.raw());
                t = t.pow(Qd);
                if (t == y0) break;
            }
            // canonical representative of the Frobenius orbit of (c0, y0)
            FieldElem bc = c0, by = y0, cc = c0, yy = y0;
            for (int j = 1; j < D; ++j) {
                cc = cc.pow(Q);
                yy = yy.pow(Q);
                const auto kb = std::make_pair(F.lex_rank(bc.raw()), F.lex_rank(by.raw()));
                const auto kn = std::make_pair(F.lex_rank(cc.raw()), F.lex_rank(yy.raw()));
                if (kn < kb) {
                    bc = cc;
                    by = yy;
                }
            }
            out.push_back(make_generic(bc, by, D, q));
        }
    }
    return out;
}

// v_P(A) for integral coordinates A at a generic place, knowing the bound
// v_P(A) <= bound.
std::int64_t generic_valuation(const KummerCurve& curve, const FieldCtx& K, const std::vector<Poly>& A,
                               const Place& P, std::int64_t bound) {
    const FieldCtx& F = P.c.ctx();
    const std::size_t N = static_cast<std::size_t>(bound) + 1;
    const Elt c = P.c.raw();
    const std::uint64_t m = curve.q() - 1;
    const Series H = smul(F, taylor(to_field(curve.h.num(), K, F), c, N),
                          sinv(F, taylor(to_field(curve.h.den(), K, F), c, N), N), N);
    if (F.pow(P.y.raw(), m) != H[0]) fail(ErrorCode::UnknownPlace, "point " + P.label + " is not on the curve");
    // Newton iteration for Y^m = H with Y(0) = y0
    Series Y(N, 0);
    Y[0] = P.y.raw();
    const Elt minv = F.inv(F.from_int(static_cast<std::int64_t>(m)));
    for (std::size_t prec = 1; prec < 2 * N; prec *= 2) {
        const Series Ym1 = spow(F, Y, m - 1, N);
        Series err = smul(F, Ym1, Y, N);
        for (std::size_t i = 0; i < N; ++i) err[i] = F.sub(err[i], H[i]);
        Series corr = smul(F, err, sinv(F, Ym1, N), N);
        for (std::size_t i = 0; i < N; ++i) Y[i] = F.sub(Y[i], F.mul(corr[i], minv));
    }
    Series S(N, 0), Yi(N, 0);
    Yi[0] = 1;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (i > 0) Yi = smul(F, Yi, Y, N);
        if (A[i].is_zero()) continue;
        const Series t = smul(F, taylor(to_field(A[i], K, F), c, N), Yi, N);
        for (std::size_t j = 0; j < N; ++j) S[j] = F.add(S[j], t[j]);
    }
    for (std::size_t j = 0; j < N; ++j)
        if (S[j] != 0) return static_cast<std::int64_t>(j);
    fail(ErrorCode::TransportFailure, "valuation exceeds its norm bound at " + P.label);
}

std::int64_t ramified_valuation(const KummerCurve& curve, const FFElem& e, const Point& pt) {
    const std::int64_t m = curve.q() - 1;
    const std::int64_t vh = ratfunc_valuation(curve.h, pt);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < e.coords().size(); ++i) {
        if (e.coords()[i].is_zero()) continue;
        const std::int64_t v = m * ratfunc_valuation(e.coords()[i], pt) + static_cast<std::int64_t>(i) * vh;
        best = std::min(best, v);
    }
    return best;
}

Point point_of(const Place& P) {
    return P.kind == PlaceKind::RamInfinity ? Point::infinity() : Point::finite(P.c);
}

// Removes every factor shared with the ramification support.
Poly strip_support(Poly f, const KummerCurve& curve) {
    const Poly s = curve.ram_poly() * curve.quad();
    for (Poly g = gcd(f, s); g.degree() > 0; g = gcd(f, s)) f = f / g;
    return f;
}

Divisor divisor_impl(const KummerCurve& curve, const FFElem& e, bool poles_only) {
    if (e.is_zero()) fail(ErrorCode::ZeroElement, "divisor of zero");
    if (e.alg() != curve.alg) fail(ErrorCode::CtxMismatch, "element of another curve");
    Divisor div;
    for (const Place& P : ramified_places(curve)) {
        const std::int64_t v = ramified_valuation(curve, e, point_of(P));
        if (!poles_only || v < 0) div.add(P, v);
    }
    const Poly D = common_den(e);
    const std::vector<Poly> A = integral_coords(e, D);
    const RatFunc NA = norm(curve.alg->from_coords(std::vector<RatFunc>(A.begin(), A.end())));
    Poly cand = strip_support(D, curve);
    if (!poles_only) cand = cand * strip_support(NA.num(), curve);
    if (cand.degree() <= 0) return div;
    const FieldCtx K = constant_field(curve);
    const Poly candK = map_to(cand, K);
    const Poly DK = map_to(D, K), NK = map_to(NA.num(), K);
    for (const ClosedRoot& cr : degree_split(candK)) {
        for (const Place& P : places_over(curve, K, cr.g, cr.d)) {
            const FieldCtx& F = P.c.ctx();
            const std::int64_t vd = root_multiplicity(map_to(DK, F), P.c);
            const std::int64_t bound = root_multiplicity(map_to(NK, F), P.c);
            const std::int64_t va = bound == 0 ? 0 : generic_valuation(curve, K, A, P, bound);
            const std::int64_t v = va - vd;
            if (!poles_only || v < 0) div.add(P, v);
        }
    }
    return div;
}

}  // namespace

std::tuple<int, std::uint32_t, std::uint64_t, std::uint64_t> Place::key() const {
    const std::uint32_t sz = c.ctx().valid() ? c.ctx().size() : 0;
    const std::uint64_t rc = c.ctx().valid() ? c.ctx().lex_rank(c.raw()) : 0;
    const std::uint64_t ry = y.ctx().valid() ? y.ctx().lex_rank(y.raw()) : 0;
    return {static_cast<int>(kind), sz, rc, ry};
}

std::vector<Place> ramified_places(const KummerCurve& curve) {
    const FieldCtx& k = curve.k();
    std::vector<Place> out;
    for (std::uint64_t r = 0; r < k.size(); ++r) {
        Place P;
        P.kind = PlaceKind::RamFinite;
        P.c = FieldElem(k, k.from_lex_rank(r));
        P.label = "P_" + place_label_c(P.c);
        out.push_back(P);
    }
    Place inf;
    inf.kind = PlaceKind::RamInfinity;
    inf.label = "P_inf";
    out.push_back(inf);
    const FieldCtx K = constant_field(curve);
    const auto roots = roots_in(curve.quad(), K);
    if (roots.size() != 2 || roots[0] == roots[1]) fail(ErrorCode::ReducibleModulus, "quadratic part must be irreducible");
    const char* names[] = {"Q_beta", "Q_gamma"};
    for (int i = 0; i < 2; ++i) {
        Place Q;
        Q.kind = PlaceKind::RamQuadratic;
        Q.c = roots[static_cast<std::size_t>(i)];
        Q.fq_degree = 2;
        Q.label = names[i];
        out.push_back(Q);
    }
    return out;
}

const Place& place_infinity(const std::vector<Place>& ram) { return place_at(ram, "P_inf"); }

const Place& place_at(const std::vector<Place>& ram, std::string_view label) {
    for (const auto& P : ram)
        if (P.label == label) return P;
    fail(ErrorCode::UnknownPlace, "no place labelled " + std::string(label));
}

void Divisor::add(const Place& p, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = t_.find(p);
    if (it == t_.end()) {
        t_.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) t_.erase(it);
}

std::int64_t Divisor::operator[](const Place& p) const {
    auto it = t_.find(p);
    return it == t_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
    std::int64_t d = 0;
    for (const auto& [p, c] : t_) d += c * p.degree;
    return d;
}

bool Divisor::is_effective() const {
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second > 0; });
}

Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, c] : b.t_) a.add(p, c);
    return a;
}

Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [p, c] : b.t_) a.add(p, -c);
    return a;
}

std::string Divisor::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : t_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << '*';
        os << p.label;
    }
    if (first) os << '0';
    return os.str();
}

std::int64_t valuation(const KummerCurve& curve, const FFElem& e, const Place& P) {
    if (e.is_zero()) fail(ErrorCode::ZeroElement, "valuation of zero");
    if (P.ramified()) return ramified_valuation(curve, e, point_of(P));
    const FieldCtx K = constant_field(curve);
    const Poly D = common_den(e);
    const std::vector<Poly> A = integral_coords(e, D);
    const RatFunc NA = norm(curve.alg->from_coords(std::vector<RatFunc>(A.begin(), A.end())));
    const FieldCtx& F = P.c.ctx();
    const std::int64_t vd = root_multiplicity(to_field(D, K, F), P.c);
    const std::int64_t bound = root_multiplicity(to_field(NA.num(), K, F), P.c);
    return (bound == 0 ? 0 : generic_valuation(curve, K, A, P, bound)) - vd;
}

Divisor principal_divisor(const KummerCurve& curve, const FFElem& e) { return divisor_impl(curve, e, false); }

Divisor pole_divisor(const KummerCurve& curve, const FFElem& e) { return divisor_impl(curve, e, true); }

bool LSpaceReport::ok() const {
    return independent && std::all_of(member.begin(), member.end(), [](bool b) { return b; });
}

LSpaceReport lspace_check(const KummerCurve& curve, const std::vector<FFElem>& elems, const Divisor& D) {
    const auto ram = ramified_places(curve);
    for (const auto& [P, c] : D.terms()) {
        if (P.ramified()) {
            if (std::find(ram.begin(), ram.end(), P) == ram.end())
                fail(ErrorCode::UnknownPlace, "place " + P.label + " is not on this curve");
            continue;
        }
        const FieldCtx& F = P.c.ctx();
        const FieldCtx K = constant_field(curve);
        const FieldElem hn = to_field(curve.h.num(), K, F).eval(P.c), hd = to_field(curve.h.den(), K, F).eval(P.c);
        if (hd.is_zero() || P.y.pow(curve.q() - 1) != hn / hd)
            fail(ErrorCode::UnknownPlace, "place " + P.label + " is not on this curve");
    }
    LSpaceReport rep;
    for (const FFElem& e : elems) {
        bool in = true;
        std::map<std::string, std::int64_t> vals;
        const Divisor poles = pole_divisor(curve, e);
        for (const auto& [P, v] : poles.terms())
            if (v + D[P] < 0) in = false;
        for (const auto& [P, c] : D.terms()) {
            const std::int64_t v = valuation(curve, e, P);
            vals[P.label] = v;
            if (v + c < 0) in = false;
        }
        rep.member.push_back(in);
        rep.valuations.push_back(std::move(vals));
    }
    // independence over the constant field: common denominator, then rank
    const FieldCtx& k = curve.k();
    Poly L = Poly::one(k);
    for (const auto& e : elems)
        for (const auto& c : e.coords())
            if (!c.is_zero()) L = lcm(L, c.den());
    std::vector<std::vector<Elt>> rows;
    for (const auto& e : elems) {
        std::vector<Elt> row;
        for (const auto& c : e.coords()) {
            const Poly n = c.is_zero() ? Poly(k) : c.num() * (L / c.den());
            std::vector<Elt> block(64, 0);
            if (n.degree() >= 64) block.resize(static_cast<std::size_t>(n.degree()) + 1, 0);
            for (int i = 0; i <= n.degree(); ++i) block[static_cast<std::size_t>(i)] = n.coeff(i);
            block.resize(std::max<std::size_t>(block.size(), 64));
            row.insert(row.end(), block.begin(), block.end());
        }
        rows.push_back(std::move(row));
    }
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.size());
    for (auto& r : rows) r.resize(width, 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const Elt inv = k.inv(rows[rank][col]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Elt f = k.mul(rows[r][col], inv);
            for (std::size_t j = col; j < width; ++j) rows[r][j] = k.sub(rows[r][j], k.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    rep.independent = rank == elems.size();
    return rep;
}

std::uint64_t count_degree_one(const KummerCurve& curve, std::uint32_t k, unsigned threads) {
    const std::uint32_t q = curve.q();
    if (k < 1) fail(ErrorCode::TooLarge, "extension degree must be positive");
    const std::uint64_t Q = upow(q, k);
    if (Q > kCountCap)
        fail(ErrorCode::TooLarge, "GF(" + std::to_string(q) + "^" + std::to_string(k) + ") exceeds the counting cap 2^22");
    const FieldCtx F = field_of_order(Q, kCountCap);
    const Embedding& emb = embedding(curve.k(), F);
    const Poly quad = curve.quad();
    const Elt q0 = emb(quad.coeff(0)), q1 = emb(quad.coeff(1)), q2 = emb(quad.coeff(2));
    const std::uint64_t m = q - 1;
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t s = 0;
        for (std::uint64_t code = lo; code < hi; ++code) {
            const Elt c = static_cast<Elt>(code);
            const Elt r = F.sub(F.pow(c, q), c);
            if (r == 0) continue;
            const Elt qc = F.add(F.mul(F.add(F.mul(q2, c), q1), c), q0);
            if (qc == 0) continue;
            if (F.is_power(F.neg(F.div(qc, r)), m)) s += m;
        }
        return s;
    };
    threads = std::max(1u, std::min<unsigned>(threads, 64));
    std::uint64_t affine = 0;
    if (threads == 1 || Q < 4096) {
        affine = worker(0, Q);
    } else {
        std::vector<std::uint64_t> part(threads, 0);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = Q * t / threads, hi = Q * (t + 1) / threads;
            pool.emplace_back([&, t, lo, hi] { part[t] = worker(lo, hi); });
        }
        for (auto& th : pool) th.join();
        affine = std::accumulate(part.begin(), part.end(), std::uint64_t{0});
    }
    return affine + (q + 1) + (k % 2 == 0 ? 2 : 0);
}

std::vector<BigInt> lpoly_from_counts(std::uint32_t q, int g, const std::vector<std::uint64_t>& counts) {
    if (static_cast<int>(counts.size()) < g) fail(ErrorCode::TooLarge, "not enough counts for the genus");
    std::vector<BigInt> S(static_cast<std::size_t>(g) + 1), a(2 * static_cast<std::size_t>(g) + 1);
    BigInt qk = 1;
    for (int k = 1; k <= g; ++k) {
        qk *= q;
        S[static_cast<std::size_t>(k)] = qk + 1 - BigInt(counts[static_cast<std::size_t>(k - 1)]);
    }
    a[0] = 1;
    for (int k = 1; k <= g; ++k) {
        BigInt s = 0;
        for (int i = 1; i <= k; ++i) s += S[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
        if (s % k != 0) fail(ErrorCode::FunctionalEquationViolated, "Newton identity is not integral");
        a[static_cast<std::size_t>(k)] = -s / k;
    }
    BigInt qp = 1;
    for (int i = g + 1; i <= 2 * g; ++i) {
        qp *= q;
        a[static_cast<std::size_t>(i)] = qp * a[static_cast<std::size_t>(2 * g - i)];
    }
    return a;
}

BigInt count_from_lpoly(std::uint32_t q, const std::vector<BigInt>& L, int k) {
    const int deg = static_cast<int>(L.size()) - 1;
    std::vector<BigInt> S(static_cast<std::size_t>(k) + 1);
    auto coeff = [&](int i) { return i <= deg ? L[static_cast<std::size_t>(i)] : BigInt(0); };
    for (int n = 1; n <= k; ++n) {
        BigInt s = n * coeff(n);
        for (int i = 1; i < n; ++i) s += S[static_cast<std::size_t>(i)] * coeff(n - i);
        S[static_cast<std::size_t>(n)] = -s;
    }
    BigInt qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    return qk + 1 - S[static_cast<std::size_t>(k)];
}

namespace {

bool rh_coefficients_ok(std::uint32_t q, const std::vector<BigInt>& L) {
    const int two_g = static_cast<int>(L.size()) - 1;
    BigInt binom = 1, qi = 1;
    for (int i = 0; i <= two_g; ++i) {
        if (i > 0) {
            binom = binom * (two_g - i + 1) / i;
            qi *= q;
        }
        if (L[static_cast<std::size_t>(i)] * L[static_cast<std::size_t>(i)] > binom * binom * qi) return false;
    }
    return true;
}

}  // namespace

ZetaData zeta(const KummerCurve& curve, unsigned threads) {
    const std::uint32_t q = curve.q();
    if (q > 5)
        fail(ErrorCode::TooLarge, "zeta needs N_1..N_g over GF(q^g); q=" + std::to_string(q) +
                                      " is beyond desk scale (genus certified by rh_check instead)");
    ZetaData z;
    z.q = q;
    for (std::uint32_t k = 1; upow(q, k) <= kCountCap; ++k) z.counts.push_back(count_degree_one(curve, k, threads));
    const int K = static_cast<int>(z.counts.size());
    for (int g = 0; g <= K; ++g) {
        std::vector<BigInt> L;
        try {
            L = lpoly_from_counts(q, g, z.counts);
        } catch (const Error&) {
            continue;
        }
        bool ok = rh_coefficients_ok(q, L);
        for (int k = 1; ok && k <= K; ++k)
            ok = count_from_lpoly(q, L, k) == BigInt(z.counts[static_cast<std::size_t>(k - 1)]);
        if (!ok) continue;
        z.genus = g;
        z.L = std::move(L);
        return z;
    }
    fail(ErrorCode::FunctionalEquationViolated, "no L-polynomial fits the point counts");
}

int genus_from_zeta(const ZetaData& z) {
    const int g = (static_cast<int>(z.L.size()) - 1) / 2;
    if (z.L.empty() || z.L[0] != 1 || static_cast<int>(z.L.size()) != 2 * g + 1)
        fail(ErrorCode::FunctionalEquationViolated, "malformed L-polynomial");
    BigInt qg = 1;
    for (int i = 0; i < g; ++i) qg *= z.q;
    if (z.L.back() != qg) fail(ErrorCode::FunctionalEquationViolated, "a_2g differs from q^g");
    for (int i = 0; i <= 2 * g; ++i) {
        BigInt qi = 1;
        for (int j = 0; j < g - i; ++j) qi *= z.q;
        if (i <= g && z.L[static_cast<std::size_t>(2 * g - i)] != qi * z.L[static_cast<std::size_t>(i)])
            fail(ErrorCode::FunctionalEquationViolated, "functional equation fails at a_" + std::to_string(i));
    }
    for (std::size_t k = 1; k <= z.counts.size(); ++k)
        if (count_from_lpoly(z.q, z.L, static_cast<int>(k)) != BigInt(z.counts[k - 1]))
            fail(ErrorCode::FunctionalEquationViolated, "L-polynomial does not reproduce N_" + std::to_string(k));
    return g;
}

int genus_formula(std::uint32_t q) { return static_cast<int>((q + 1) * (q - 2) / 2); }

RHData rh_check(const KummerCurve& curve) {
    const std::int64_t n = curve.q() - 1;
    RHData r;
    r.rhs = -2 * n;
    for (const Place& P : ramified_places(curve)) {
        const std::int64_t vh = ratfunc_valuation(curve.h, point_of(P));
        const std::int64_t e = n / std::gcd(n, vh < 0 ? -vh : vh);
        r.rhs += (e - 1) * P.degree;
    }
    r.lhs = 2 * static_cast<std::int64_t>(genus_formula(curve.q())) - 2;
    r.genus = static_cast<int>((r.rhs + 2) / 2);
    r.ok = r.rhs % 2 == 0 && r.lhs == r.rhs;
    return r;
}

RHData rh_check(std::uint32_t q) {
    RHData r;
    const std::int64_t n = static_cast<std::int64_t>(q) - 1;
    r.rhs = -2 * n + (static_cast<std::int64_t>(q) + 3) * (n - 1);
    r.lhs = 2 * static_cast<std::int64_t>(genus_formula(q)) - 2;
    r.genus = static_cast<int>((r.rhs + 2) / 2);
    r.ok = r.rhs % 2 == 0 && r.lhs == r.rhs;
    return r;
}

bool weil_bound_ok(std::uint32_t q, int k, int g, std::uint64_t N) {
    BigInt qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    const BigInt dev = BigInt(N) - qk - 1;
    return dev * dev <= BigInt(4) * g * g * qk;
}

}  // namespace cff
