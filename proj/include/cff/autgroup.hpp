
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cff/places.hpp"

namespace cff {

/// A Kummer curve together with the data automorphisms act on, over the
/// constant field K = GF(q^2).
struct AutSpace {
    KummerCurve curve;
    FieldCtx K;
    /// h with coefficients in K.
    RatFunc h;
    std::vector<Place> ram;
};
using SpacePtr = std::shared_ptr<const AutSpace>;

SpacePtr aut_space(const KummerCurve& curve);

/// (alpha, beta, gamma, delta): v -> (alpha v + beta)/(gamma v + delta).
using Mobius = std::array<Elt, 4>;

/// v -> mobius(v), y -> f(v) y^k. Stored canonically (first nonzero matrix
/// entry is 1), so equality is structural.
class Aut {
public:
    Aut() = default;
    /// Canonicalises; does not check the automorphism law.
    Aut(SpacePtr sp, Mobius m, int k, RatFunc f);
    static Aut identity(const SpacePtr& sp);

    const SpacePtr& space() const { return sp_; }
    const Mobius& mobius() const { return m_; }
    int k() const { return k_; }
    const RatFunc& f() const { return f_; }
    /// mobius(v) as a rational function over K.
    RatFunc image_v() const;
    bool is_identity() const;

    std::string str() const;

    friend bool operator==(const Aut& a, const Aut& b) { return a.m_ == b.m_ && a.k_ == b.k_ && a.f_ == b.f_; }
    friend bool operator!=(const Aut& a, const Aut& b) { return !(a == b); }
    friend bool operator<(const Aut& a, const Aut& b);

private:
    SpacePtr sp_;
    Mobius m_{};
    int k_ = 1;
    RatFunc f_;
};

/// Nonzero determinant, gcd(k, q-1) = 1, and f^{q-1} h^k = h o mobius.
bool is_automorphism(const Aut& a);

/// a o b: apply b, then a.
Aut compose(const Aut& a, const Aut& b);
Aut invert(const Aut& a);
Aut power(const Aut& a, std::int64_t e);
/// Order by repeated composition; throws WrongOrder past cap.
std::uint64_t order(const Aut& a, std::uint64_t cap = 10000);

/// Matrix of a Moebius rational function; nullopt unless num/den have
/// degree <= 1 and the map is nonconstant.
std::optional<Mobius> mobius_of(const RatFunc& r);

struct RhoData {
    Aut rho;
    Poly unit;
    /// rho(y) = coeff (v - alpha) y when f is linear.
    std::optional<Elt> alpha;
    Elt coeff = 0;
};

/// Transport of sigma_u (u = unit_generator) through v = gamma^{-1}(x + y^{q-1}).
/// Throws TransportFailure.
RhoData make_rho_data(const KummerCurve& curve, const CycModel& model);
Aut make_rho(const KummerCurve& curve, const CycModel& model);
/// v -> -v - a/gamma, y -> lambda y with lambda = g^{(q+1)/2}. Needs p odd.
Aut make_mu(const KummerCurve& curve);
/// v -> v + a/gamma, y -> y. Needs p = 2.
Aut make_omega(const KummerCurve& curve);
/// Order-3 map of the q = 3 curve, written in the coordinate w = v - s that
/// puts the roots of the quadratic at +-i.
Aut make_epsilon(const KummerCurve& curve);

class GroupTable {
public:
    /// Breadth-first closure; every element re-checked by is_automorphism.
    /// Throws ClosureOverflow or TransportFailure.
    static GroupTable closure(const std::vector<Aut>& gens, std::size_t cap = 10000);
    /// Subgroup table from an explicit element list (closed, contains id).
    static GroupTable from_elements(std::vector<Aut> elems, std::vector<Aut> gens);

    const std::vector<Aut>& elements() const { return elems_; }
    const std::vector<Aut>& generators() const { return gens_; }
    std::size_t size() const { return elems_.size(); }
    std::optional<std::size_t> index_of(const Aut& a) const;
    bool contains(const Aut& a) const { return index_of(a).has_value(); }
    /// Index of elements[i] o elements[j].
    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;

private:
    std::vector<Aut> elems_;
    std::vector<Aut> gens_;
    std::map<Aut, std::size_t> index_;
};

/// Image of a ramified place: P over v = c goes to the place over
/// mobius^{-1}(c). Throws GenericPlaceUnsupported.
Place act_on_place(const Aut& a, const Place& P);
/// Orbits on the q+3 ramified places, in order of first member.
std::vector<std::vector<Place>> orbits(const GroupTable& T);
GroupTable stabilizer(const GroupTable& T, const Place& P);

struct Pgl23Report {
    bool central = false;
    std::size_t quotient_order = 0;
    std::map<std::uint64_t, std::size_t> order_histogram;
    std::size_t sylow3_count = 0;
    bool faithful = false;
    std::size_t image_order = 0;
    bool ok() const;
};

/// iota = rho^4 central of order 2; G/<iota> acting on its 3-Sylow
/// subgroups by conjugation. Throws WrongOrder, NonCentralInvolution.
Pgl23Report pgl23_report(const GroupTable& T, const Aut& rho);
bool quotient_is_pgl23(const GroupTable& T, const Aut& rho);
/// Uses the first generator of T as rho.
bool quotient_is_pgl23(const GroupTable& T);

/// Genus of the fixed field of an involution y -> -y (identity on v), from
/// Riemann-Hurwitz with the places where y has odd valuation.
int involution_quotient_genus(const Aut& iota);

}  // namespace cff
