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

/**
 * @file gf.hpp
 * @brief Exact arithmetic in GF(p^n) for desk-scale fields.
 *
 * A field is identified by (p, n). Its defining polynomial is the
 * lexicographically least monic irreducible of degree n over GF(p), where
 * coefficient vectors (c_0, ..., c_{n-1}) are compared as integer tuples.
 * Fields are interned: create_field(p, n) always returns the same handle, so
 * context identity is pointer identity.
 *
 * Raw elements (Elt) are integer codes: digit i in base p is the coefficient
 * of g^i, where g is the class of T. Zero is code 0 and one is code 1. Hot
 * loops use the raw API on FieldCtx; FieldElem is the checked value type.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cff/error.hpp"

namespace cff {

using Elt = std::uint32_t;

/// Public construction cap on p^n.
inline constexpr std::uint64_t kDeskCap = std::uint64_t{1} << 20;
/// Cap used by the point-counting stage, which needs GF(q^k) up to 2^22.
inline constexpr std::uint64_t kCountCap = std::uint64_t{1} << 22;

namespace detail {
struct FieldData;
}

class FieldCtx {
public:
    FieldCtx() = default;

    std::uint32_t p() const;
    std::uint32_t n() const;
    /// Number of elements p^n.
    std::uint32_t size() const;
    /// Monic defining polynomial over GF(p), constant term first (length n+1).
    const std::vector<std::uint32_t>& modulus() const;
    /// Least element (lex order) of multiplicative order p^n - 1.
    Elt generator() const;
    /// Class of T (the symbol `g` in element literals). Zero for prime fields.
    Elt gen_class() const;

    bool valid() const { return data_ != nullptr; }
    bool is_prime_field() const { return n() == 1; }
    std::string name() const;

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, std::uint64_t e) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elt a) const;
    /// True iff a is a d-th power, for d dividing size()-1.
    bool is_power(Elt a, std::uint64_t d) const;
    /// Some d-th root of a, for d dividing size()-1; nullopt if none exists.
    std::optional<Elt> root(Elt a, std::uint64_t d) const;

    /// Image of an integer in the prime subfield.
    Elt from_int(std::int64_t v) const;
    std::vector<std::uint32_t> coeffs(Elt a) const;
    Elt from_coeffs(std::span<const std::uint32_t> c) const;

    /// Position of a in lex order on (c_0, ..., c_{n-1}).
    std::uint64_t lex_rank(Elt a) const;
    Elt from_lex_rank(std::uint64_t rank) const;

    std::string format(Elt a) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.data_ == b.data_; }
    friend bool operator!=(const FieldCtx& a, const FieldCtx& b) { return a.data_ != b.data_; }

    const detail::FieldData* raw() const { return data_.get(); }

private:
    friend FieldCtx create_field(std::uint32_t p, std::uint32_t n, std::uint64_t cap);
    explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}

    std::shared_ptr<const detail::FieldData> data_;
};

/// Interned construction. Throws NotPrime or TooLarge.
FieldCtx create_field(std::uint32_t p, std::uint32_t n, std::uint64_t cap = kDeskCap);

/// GF(q) for a prime power q.
FieldCtx field_of_order(std::uint64_t q, std::uint64_t cap = kDeskCap);

bool is_prime(std::uint64_t v);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
/// (p, n) with q = p^n, or throws NotPrime if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

class FieldElem {
public:
    FieldElem() = default;
    FieldElem(FieldCtx ctx, Elt v) : ctx_(std::move(ctx)), v_(v) {}

    static FieldElem zero(const FieldCtx& c) { return {c, 0}; }
    static FieldElem one(const FieldCtx& c) { return {c, 1}; }

    const FieldCtx& ctx() const { return ctx_; }
    Elt raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::vector<std::uint32_t> coeffs() const { return ctx_.coeffs(v_); }
    std::string str() const { return ctx_.format(v_); }

    FieldElem operator-() const { return {ctx_, ctx_.neg(v_)}; }
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem inv() const;
    FieldElem pow(std::uint64_t e) const { return {ctx_, ctx_.pow(v_, e)}; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.ctx_ == b.ctx_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    FieldCtx ctx_;
    Elt v_ = 0;
};

/// Least element of full multiplicative order, scanning in lex order.
FieldElem primitive_element(const FieldCtx& ctx);

/// Ring map GF(p^n) -> GF(p^{nm}) sending the class of T to the least root of
/// the source modulus in the target. Tabulated over the whole source field.
struct Embedding {
    FieldCtx src;
    FieldCtx dst;
    Elt root = 0;
    std::vector<Elt> table;

    Elt operator()(Elt a) const { return table[a]; }
};

/// Cached embedding; throws NoEmbedding unless the source degree divides the
/// target degree over the same prime.
const Embedding& embedding(const FieldCtx& src, const FieldCtx& dst);

FieldElem embed(const FieldElem& e, const FieldCtx& target);

}  // namespace cff
