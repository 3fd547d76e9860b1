
#include "cff/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace cff {

namespace {

std::uint32_t qof(const Aut& a) { return a.space()->curve.q(); }

void same_space(const Aut& a, const Aut& b) {
    if (!a.space() || !b.space() || a.space()->K != b.space()->K || a.space()->h != b.space()->h)
        fail(ErrorCode::CtxMismatch, "automorphisms of different curves");
}

Elt to_K(const FieldCtx& k, Elt x, const FieldCtx& K) { return embed(FieldElem(k, x), K).raw(); }

RatFunc mobius_rf(const FieldCtx& K, const Mobius& m) {
    return RatFunc(Poly(K, {m[1], m[0]}), Poly(K, {m[3], m[2]}));
}

Mobius adjugate(const FieldCtx& K, const Mobius& m) { return {m[3], K.neg(m[1]), K.neg(m[2]), m[0]}; }

// m_2 o m_1 as matrices: M_2 * M_1.
Mobius matmul(const FieldCtx& K, const Mobius& a, const Mobius& b) {
    return {K.add(K.mul(a[0], b[0]), K.mul(a[1], b[2])), K.add(K.mul(a[0], b[1]), K.mul(a[1], b[3])),
            K.add(K.mul(a[2], b[0]), K.mul(a[3], b[2])), K.add(K.mul(a[2], b[1]), K.mul(a[3], b[3]))};
}

std::int64_t mod_inv(std::int64_t a, std::int64_t n) {
    std::int64_t r0 = n, r1 = ((a % n) + n) % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t t = r0 / r1;
        r0 = std::exchange(r1, r0 - t * r1);
        s0 = std::exchange(s1, s0 - t * s1);
    }
    if (r0 != 1) fail(ErrorCode::NotCoprime, "exponent not invertible");
    return ((s0 % n) + n) % n;
}

// Point of P^1(K) under a place; nullopt is infinity.
std::optional<Elt> point_of(const AutSpace& sp, const Place& P) {
    if (P.kind == PlaceKind::Generic) fail(ErrorCode::GenericPlaceUnsupported, "action on generic place " + P.label);
    if (P.kind == PlaceKind::RamInfinity) return std::nullopt;
    return embed(P.c, sp.K).raw();
}

const Place& place_of_point(const AutSpace& sp, const std::optional<Elt>& c) {
    for (const Place& R : sp.ram) {
        if (R.kind == PlaceKind::RamInfinity) {
            if (!c) return R;
        } else if (c && embed(R.c, sp.K).raw() == *c) {
            return R;
        }
    }
    fail(ErrorCode::UnknownPlace, "image point is not a ramified place");
}

}  // namespace

SpacePtr aut_space(const KummerCurve& curve) {
    auto sp = std::make_shared<AutSpace>();
    sp->curve = curve;
    sp->K = field_of_order(std::uint64_t{curve.q()} * curve.q());
    sp->h = map_to(curve.h, sp->K);
    sp->ram = ramified_places(curve);
    return sp;
}

Aut::Aut(SpacePtr sp, Mobius m, int k, RatFunc f) : sp_(std::move(sp)), m_(m), f_(std::move(f)) {
    const FieldCtx& K = sp_->K;
    const auto it = std::find_if(m_.begin(), m_.end(), [](Elt e) { return e != 0; });
    if (it == m_.end()) fail(ErrorCode::DivisionByZero, "zero Moebius matrix");
    const Elt s = K.inv(*it);
    for (Elt& e : m_) e = K.mul(e, s);
    const int n = static_cast<int>(sp_->curve.q()) - 1;
    k_ = ((k % n) + n) % n;
    if (f_.ctx() != K) f_ = map_to(f_, K);
}

Aut Aut::identity(const SpacePtr& sp) { return Aut(sp, {1, 0, 0, 1}, 1, RatFunc::constant(sp->K, 1)); }

RatFunc Aut::image_v() const { return mobius_rf(sp_->K, m_); }

bool Aut::is_identity() const { return m_ == Mobius{1, 0, 0, 1} && k_ == 1 % (static_cast<int>(qof(*this)) - 1) && f_.is_one(); }

std::string Aut::str() const {
    std::ostringstream os;
    os << "v -> " << format(image_v(), 'v') << ", y -> ";
    if (!f_.is_one()) os << "(" << format(f_, 'v') << ")*";
    os << "y";
    if (k_ != 1) os << "^" << k_;
    return os.str();
}

bool operator<(const Aut& a, const Aut& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.f_ < b.f_;
}

bool is_automorphism(const Aut& a) {
    if (!a.space()) return false;
    const AutSpace& sp = *a.space();
    const FieldCtx& K = sp.K;
    const auto& m = a.mobius();
    if (K.sub(K.mul(m[0], m[3]), K.mul(m[1], m[2])) == 0) return false;
    const std::int64_t n = sp.curve.q() - 1;
    if (a.k() < 1 || std::gcd<std::int64_t>(a.k(), n) != 1 || a.f().is_zero()) return false;
    return a.f().pow(n) * sp.h.pow(a.k()) == sp.h.compose(a.image_v());
}

Aut compose(const Aut& a, const Aut& b) {
    same_space(a, b);
    const AutSpace& sp = *a.space();
    const std::int64_t n = sp.curve.q() - 1;
    const std::int64_t kk = std::int64_t{a.k()} * b.k();
    RatFunc f = b.f().compose(a.image_v()) * a.f().pow(b.k()) * sp.h.pow(kk / n);
    return Aut(a.space(), matmul(sp.K, b.mobius(), a.mobius()), static_cast<int>(kk % n), std::move(f));
}

Aut invert(const Aut& a) {
    const AutSpace& sp = *a.space();
    const std::int64_t n = sp.curve.q() - 1;
    const std::int64_t ki = mod_inv(a.k(), n);
    const std::int64_t t = (std::int64_t{a.k()} * ki - 1) / n;
    const Mobius mi = adjugate(sp.K, a.mobius());
    const RatFunc g = sp.h.pow(-t) * a.f().pow(-ki);
    return Aut(a.space(), mi, static_cast<int>(ki), g.compose(mobius_rf(sp.K, mi)));
}

Aut power(const Aut& a, std::int64_t e) {
    Aut base = e < 0 ? invert(a) : a;
    std::uint64_t u = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Aut r = Aut::identity(a.space());
    while (u != 0) {
        if (u & 1) r = compose(r, base);
        base = compose(base, base);
        u >>= 1;
    }
    return r;
}

std::uint64_t order(const Aut& a, std::uint64_t cap) {
    Aut p = a;
    for (std::uint64_t n = 1; n <= cap; ++n) {
        if (p.is_identity()) return n;
        p = compose(a, p);
    }
    fail(ErrorCode::WrongOrder, "order exceeds " + std::to_string(cap));
}

std::optional<Mobius> mobius_of(const RatFunc& r) {
    if (r.num().degree() > 1 || r.den().degree() > 1) return std::nullopt;
    if (r.num().degree() < 1 && r.den().degree() < 1) return std::nullopt;
    return Mobius{r.num().coeff(1), r.num().coeff(0), r.den().coeff(1), r.den().coeff(0)};
}

RhoData make_rho_data(const KummerCurve& curve, const CycModel& model) {
    if (curve.M.k != model.M.k || curve.M.a != model.M.a || curve.M.b != model.M.b)
        fail(ErrorCode::CtxMismatch, "curve and cyclotomic model have different moduli");
    const FieldCtx& k = curve.k();
    const std::uint32_t q = curve.q();
    const SpacePtr sp = aut_space(curve);
    RhoData out;
    out.unit = unit_generator(curve.M);
    const RatFunc v = RatFunc::var(k);
    const RatFunc xval = v.scaled(curve.gamma) - curve.h;
    const FFElem img = carlitz_of(out.unit).eval(curve.y(), xval);
    int kexp = -1;
    for (int i = 0; i < img.alg()->dim(); ++i) {
        if (img.coord(i).is_zero()) continue;
        if (kexp != -1) fail(ErrorCode::TransportFailure, "image of y is not a monomial in y");
        kexp = i;
    }
    if (kexp < 1) fail(ErrorCode::TransportFailure, "image of y has no y-power");
    const RatFunc f = img.coord(kexp);
    const RatFunc rv = (xval + f.pow(q - 1) * curve.h.pow(kexp)).scaled(k.inv(curve.gamma));
    const auto m = mobius_of(map_to(rv, sp->K));
    if (!m) fail(ErrorCode::TransportFailure, "image of v is not a Moebius map: " + format(rv, 'v'));
    out.rho = Aut(sp, *m, kexp, f);
    if (!is_automorphism(out.rho)) fail(ErrorCode::TransportFailure, "transported map violates the Kummer relation");
    if (order(out.rho) != std::uint64_t{q} * q - 1) fail(ErrorCode::TransportFailure, "transported generator has wrong order");
    for (const char* lab : {"Q_beta", "Q_gamma"}) {
        const Place& Q = place_at(sp->ram, lab);
        if (!(act_on_place(out.rho, Q) == Q)) fail(ErrorCode::TransportFailure, std::string("rho moves ") + lab);
    }
    if (f.is_poly() && f.num().degree() == 1) {
        out.coeff = f.num().coeff(1);
        out.alpha = k.neg(k.div(f.num().coeff(0), out.coeff));
    } else if (f.is_constant()) {
        out.coeff = f.num().coeff(0);
    }
    return out;
}

Aut make_rho(const KummerCurve& curve, const CycModel& model) { return make_rho_data(curve, model).rho; }

Aut make_mu(const KummerCurve& curve) {
    const FieldCtx& k = curve.k();
    if (k.p() == 2) fail(ErrorCode::WrongCharacteristic, "mu needs odd characteristic");
    const SpacePtr sp = aut_space(curve);
    const FieldCtx& K = sp->K;
    const std::uint32_t q = curve.q();
    const Elt c = to_K(k, k.div(curve.M.a, curve.gamma), K);
    const Elt lambda = K.pow(primitive_element(K).raw(), (q + 1) / 2);
    Aut mu(sp, {K.neg(1), K.neg(c), 0, 1}, 1, RatFunc::constant(K, lambda));
    if (!is_automorphism(mu)) fail(ErrorCode::TransportFailure, "mu violates the Kummer relation");
    const Aut mu2 = compose(mu, mu);
    const Elt xi = K.mul(lambda, lambda);
    if (mu2.mobius() != Mobius{1, 0, 0, 1} || mu2.k() != 1 || mu2.f() != RatFunc::constant(K, xi) ||
        K.order(xi) != q - 1)
        fail(ErrorCode::TransportFailure, "mu^2 is not a generator of the Kummer group");
    return mu;
}

Aut make_omega(const KummerCurve& curve) {
    const FieldCtx& k = curve.k();
    if (k.p() != 2) fail(ErrorCode::WrongCharacteristic, "omega needs characteristic 2");
    const SpacePtr sp = aut_space(curve);
    const Elt c = to_K(k, k.div(curve.M.a, curve.gamma), sp->K);
    Aut om(sp, {1, c, 0, 1}, 1, RatFunc::constant(sp->K, 1));
    if (!is_automorphism(om) || !compose(om, om).is_identity())
        fail(ErrorCode::TransportFailure, "omega is not an involutive automorphism");
    return om;
}

Aut make_epsilon(const KummerCurve& curve) {
    const FieldCtx& k = curve.k();
    if (curve.q() != 3) fail(ErrorCode::WrongQ, "epsilon exists for q = 3 only");
    const SpacePtr sp = aut_space(curve);
    const FieldCtx& K = sp->K;
    // centre of the roots of gamma v^2 + a v + b/gamma
    const Elt s = to_K(k, k.neg(k.div(curve.M.a, k.mul(k.from_int(2), curve.gamma))), K);
    const Elt i = roots_in(Poly(k, {1, 0, 1}), K).front().raw();
    const Poly w(K, {K.neg(s), 1});
    const Poly ci = Poly::constant(K, i), one = Poly::one(K);
    const RatFunc mw = RatFunc(-(w + ci), w - ci);
    const RatFunc rv = RatFunc(Poly::constant(K, s)) + mw;
    const RatFunc f = RatFunc((w * w - one).scaled(K.mul(i, K.sub(1, i))), w + ci);
    const auto m = mobius_of(rv);
    if (!m) fail(ErrorCode::TransportFailure, "epsilon is not Moebius");
    Aut eps(sp, *m, 1, f);
    if (!is_automorphism(eps)) fail(ErrorCode::TransportFailure, "epsilon violates the Kummer relation");
    if (order(eps) != 3) fail(ErrorCode::TransportFailure, "epsilon does not have order 3");
    return eps;
}

GroupTable GroupTable::closure(const std::vector<Aut>& gens, std::size_t cap) {
    if (gens.empty()) fail(ErrorCode::WrongOrder, "closure of an empty generator list");
    for (const Aut& g : gens) {
        same_space(gens.front(), g);
        if (!is_automorphism(g)) fail(ErrorCode::TransportFailure, "generator is not an automorphism: " + g.str());
    }
    GroupTable T;
    T.gens_ = gens;
    T.elems_.push_back(Aut::identity(gens.front().space()));
    T.index_.emplace(T.elems_.back(), 0);
    for (std::size_t i = 0; i < T.elems_.size(); ++i) {
        for (const Aut& g : gens) {
            Aut c = compose(g, T.elems_[i]);
            if (T.index_.count(c)) continue;
            if (T.elems_.size() >= cap) fail(ErrorCode::ClosureOverflow, "closure exceeds " + std::to_string(cap));
            if (!is_automorphism(c)) fail(ErrorCode::TransportFailure, "closure element fails the Kummer relation");
            T.index_.emplace(c, T.elems_.size());
            T.elems_.push_back(std::move(c));
        }
    }
    return T;
}

GroupTable GroupTable::from_elements(std::vector<Aut> elems, std::vector<Aut> gens) {
    GroupTable T;
    T.elems_ = std::move(elems);
    T.gens_ = std::move(gens);
    for (std::size_t i = 0; i < T.elems_.size(); ++i) T.index_.emplace(T.elems_[i], i);
    return T;
}

std::optional<std::size_t> GroupTable::index_of(const Aut& a) const {
    const auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GroupTable::mul(std::size_t i, std::size_t j) const {
    const auto r = index_of(compose(elems_[i], elems_[j]));
    if (!r) fail(ErrorCode::TransportFailure, "group table is not closed");
    return *r;
}

std::size_t GroupTable::inverse(std::size_t i) const {
    const auto r = index_of(invert(elems_[i]));
    if (!r) fail(ErrorCode::TransportFailure, "group table is not closed under inverses");
    return *r;
}

Place act_on_place(const Aut& a, const Place& P) {
    const AutSpace& sp = *a.space();
    const FieldCtx& K = sp.K;
    const auto c = point_of(sp, P);
    const Mobius mi = adjugate(K, a.mobius());
    std::optional<Elt> img;
    if (!c) {
        if (mi[2] != 0) img = K.div(mi[0], mi[2]);
    } else {
        const Elt den = K.add(K.mul(mi[2], *c), mi[3]);
        if (den != 0) img = K.div(K.add(K.mul(mi[0], *c), mi[1]), den);
    }
    return place_of_point(sp, img);
}

std::vector<std::vector<Place>> orbits(const GroupTable& T) {
    const auto& ram = T.elements().front().space()->ram;
    std::vector<std::vector<Place>> out;
    std::set<Place> seen;
    for (const Place& P : ram) {
        if (seen.count(P)) continue;
        std::set<Place> orb;
        for (const Aut& g : T.elements()) orb.insert(act_on_place(g, P));
        std::vector<Place> o;
        for (const Place& R : ram)
            if (orb.count(R)) {
                o.push_back(R);
                seen.insert(R);
            }
        out.push_back(std::move(o));
    }
    return out;
}

GroupTable stabilizer(const GroupTable& T, const Place& P) {
    std::vector<Aut> el;
    for (const Aut& g : T.elements())
        if (act_on_place(g, P) == P) el.push_back(g);
    return GroupTable::from_elements(std::move(el), {});
}

namespace {

std::map<std::uint64_t, std::size_t> s4_histogram() {
    std::array<int, 4> p{0, 1, 2, 3};
    std::map<std::uint64_t, std::size_t> h;
    do {
        std::array<int, 4> x = p;
        std::uint64_t ord = 1;
        while (x != std::array<int, 4>{0, 1, 2, 3}) {
            for (auto& e : x) e = p[static_cast<std::size_t>(e)];
            ++ord;
        }
        ++h[ord];
    } while (std::next_permutation(p.begin(), p.end()));
    return h;
}

}  // namespace

bool Pgl23Report::ok() const {
    return central && quotient_order == 24 && sylow3_count == 4 && faithful && image_order == 24 &&
           order_histogram == s4_histogram();
}

Pgl23Report pgl23_report(const GroupTable& T, const Aut& rho) {
    if (qof(rho) != 3) fail(ErrorCode::WrongOrder, "quotient test needs q = 3");
    if (T.size() != 48) fail(ErrorCode::WrongOrder, "quotient test needs a table of order 48");
    const Aut iota = power(rho, 4);
    const auto ii = T.index_of(iota);
    if (!ii || iota.is_identity() || !compose(iota, iota).is_identity())
        fail(ErrorCode::NonCentralInvolution, "rho^4 is not an involution in the table");
    const std::size_t N = T.size();
    std::vector<std::vector<std::size_t>> cay(N, std::vector<std::size_t>(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) cay[a][b] = T.mul(a, b);
    for (std::size_t a = 0; a < N; ++a)
        if (cay[a][*ii] != cay[*ii][a]) fail(ErrorCode::NonCentralInvolution, "rho^4 is not central");
    Pgl23Report r;
    r.central = true;

    // cosets {g, g iota}
    std::vector<std::size_t> cls(N, N), rep;
    for (std::size_t a = 0; a < N; ++a) {
        if (cls[a] != N) continue;
        cls[a] = cls[cay[a][*ii]] = rep.size();
        rep.push_back(a);
    }
    const std::size_t n = rep.size();
    r.quotient_order = n;
    std::vector<std::vector<std::size_t>> qm(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) qm[a][b] = cls[cay[rep[a]][rep[b]]];
    const std::size_t e = cls[*T.index_of(Aut::identity(rho.space()))];
    std::vector<std::size_t> qinv(n);
    std::vector<std::uint64_t> ord(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (qm[a][b] == e) qinv[a] = b;
        std::size_t x = a;
        ord[a] = 1;
        while (x != e) {
            x = qm[x][a];
            ++ord[a];
        }
        ++r.order_histogram[ord[a]];
    }

    std::vector<std::set<std::size_t>> syl;
    for (std::size_t a = 0; a < n; ++a)
        if (ord[a] == 3) {
            std::set<std::size_t> s{e, a, qm[a][a]};
            if (std::find(syl.begin(), syl.end(), s) == syl.end()) syl.push_back(s);
        }
    r.sylow3_count = syl.size();

    std::vector<std::vector<std::size_t>> perm(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (const auto& S : syl) {
            std::set<std::size_t> img;
            for (std::size_t s : S) img.insert(qm[qm[a][s]][qinv[a]]);
            const auto it = std::find(syl.begin(), syl.end(), img);
            perm[a].push_back(it == syl.end() ? syl.size() : static_cast<std::size_t>(it - syl.begin()));
        }
    }
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
        for (std::size_t b = 0; b < n && hom; ++b)
            for (std::size_t i = 0; i < syl.size(); ++i)
                if (perm[qm[a][b]][i] != perm[a][perm[b][i]]) hom = false;
    std::set<std::vector<std::size_t>> image(perm.begin(), perm.end());
    r.image_order = image.size();
    r.faithful = hom && image.size() == n;
    return r;
}

bool quotient_is_pgl23(const GroupTable& T, const Aut& rho) { return pgl23_report(T, rho).ok(); }

bool quotient_is_pgl23(const GroupTable& T) {
    if (T.generators().empty()) fail(ErrorCode::WrongOrder, "table has no generators");
    return quotient_is_pgl23(T, T.generators().front());
}

int involution_quotient_genus(const Aut& iota) {
    const AutSpace& sp = *iota.space();
    const FieldCtx& K = sp.K;
    if (iota.mobius() != Mobius{1, 0, 0, 1} || iota.k() != 1 || iota.f() != RatFunc::constant(K, K.neg(1)))
        fail(ErrorCode::NonCentralInvolution, "not the involution y -> -y");
    std::int64_t r = 0;
    for (const Place& P : sp.ram)
        if (valuation(sp.curve, sp.curve.y(), P) % 2 != 0) r += P.degree;
    const std::int64_t g = genus_formula(sp.curve.q());
    return static_cast<int>((2 * g + 2 - r) / 4);
}

}  // namespace cff
