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
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cff/kummer.hpp"

namespace cff {

enum class PlaceKind { RamFinite, RamInfinity, RamQuadratic, Generic };

/// A place of the Kummer function field, taken over the constant field
/// GF(q^2) so that Q_beta and Q_gamma are separate places of degree 1.
struct Place {
    PlaceKind kind = PlaceKind::RamInfinity;
    /// v-coordinate: in GF(q) for RamFinite, in GF(q^2) for RamQuadratic,
    /// in GF(q^{2D}) for Generic places of degree D.
    FieldElem c;
    /// y-coordinate, Generic only.
    FieldElem y;
    /// Degree over GF(q^2).
    int degree = 1;
    /// Degree of the underlying GF(q)-place (2 for RamQuadratic).
    int fq_degree = 1;
    std::string label;

    bool ramified() const { return kind != PlaceKind::Generic; }
    /// Canonical ordering key.
    std::tuple<int, std::uint32_t, std::uint64_t, std::uint64_t> key() const;
    friend bool operator<(const Place& a, const Place& b) { return a.key() < b.key(); }
    friend bool operator==(const Place& a, const Place& b) { return a.key() == b.key(); }
};

/// P_alpha (alpha in GF(q), lex order), P_inf, Q_beta, Q_gamma.
std::vector<Place> ramified_places(const KummerCurve& curve);
const Place& place_infinity(const std::vector<Place>& ram);
const Place& place_at(const std::vector<Place>& ram, std::string_view label);

class Divisor {
public:
    void add(const Place& p, std::int64_t coeff);
    std::int64_t operator[](const Place& p) const;
    std::int64_t degree() const;
    const std::map<Place, std::int64_t>& terms() const { return t_; }
    bool is_effective() const;

    friend Divisor operator+(Divisor a, const Divisor& b);
    friend Divisor operator-(Divisor a, const Divisor& b);
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<Place, std::int64_t> t_;
};

/// Throws ZeroElement.
std::int64_t valuation(const KummerCurve& curve, const FFElem& e, const Place& P);

/// div(e) over GF(q^2). Generic places are found from the norm of e and
/// materialised over their residue fields; throws TooLarge when a residue
/// field exceeds the counting cap.
Divisor principal_divisor(const KummerCurve& curve, const FFElem& e);
/// Only the negative part of div(e).
Divisor pole_divisor(const KummerCurve& curve, const FFElem& e);

struct LSpaceReport {
    std::vector<bool> member;
    bool independent = false;
    /// Per element: valuation at every place in the support of D.
    std::vector<std::map<std::string, std::int64_t>> valuations;
    bool ok() const;
};

/// Membership of each element in L(D) and linear independence over the
/// constant field. Throws UnknownPlace.
LSpaceReport lspace_check(const KummerCurve& curve, const std::vector<FFElem>& elems, const Divisor& D);

/// Number of places of degree one over GF(q^k). Throws TooLarge.
std::uint64_t count_degree_one(const KummerCurve& curve, std::uint32_t k, unsigned threads = 1);

using BigInt = boost::multiprecision::cpp_int;

struct ZetaData {
    std::uint32_t q = 0;
    int genus = 0;
    /// N_1, ..., N_K for every K with q^K under the counting cap.
    std::vector<std::uint64_t> counts;
    /// a_0 .. a_{2g}
    std::vector<BigInt> L;
};

/// Counts, L-polynomial and genus (the least g consistent with every
/// count). Requires q <= 5; throws TooLarge or FunctionalEquationViolated.
ZetaData zeta(const KummerCurve& curve, unsigned threads = 1);
/// L-polynomial of genus g from N_1..N_g.
std::vector<BigInt> lpoly_from_counts(std::uint32_t q, int g, const std::vector<std::uint64_t>& counts);
/// N_k predicted by an L-polynomial.
BigInt count_from_lpoly(std::uint32_t q, const std::vector<BigInt>& L, int k);
int genus_from_zeta(const ZetaData& z);
int genus_formula(std::uint32_t q);

struct RHData {
    std::int64_t lhs = 0;  // 2g - 2 with g from the formula
    std::int64_t rhs = 0;  // -2(q-1) + sum (e_P - 1) deg P
    int genus = 0;         // genus implied by rhs
    bool ok = false;
};

/// Riemann-Hurwitz for the degree q-1 cover of the v-line, from the
/// ramification data of ramified_places.
RHData rh_check(const KummerCurve& curve);
/// Same identity from (q+3) places of index q-1 only.
RHData rh_check(std::uint32_t q);

/// N <= q^k + 1 + 2 g sqrt(q^k), exactly.
bool weil_bound_ok(std::uint32_t q, int k, int g, std::uint64_t N);

}  // namespace cff
