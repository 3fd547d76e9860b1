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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cff/poly.hpp"

namespace cff {

class AlgElem;

/// K(x)[Y]/(P(Y)) for a monic P with sparse lower part. Both the cyclotomic
/// ring and the Kummer algebra are instances.
class QuotientAlgebra : public std::enable_shared_from_this<QuotientAlgebra> {
public:
    /// P(Y) = Y^n + sum c_i Y^i over the listed (i, c_i), 0 <= i < n.
    static std::shared_ptr<const QuotientAlgebra> make(FieldCtx ctx, int n,
                                                       std::vector<std::pair<int, RatFunc>> tail);

    const FieldCtx& ctx() const { return ctx_; }
    int dim() const { return n_; }
    const std::vector<std::pair<int, RatFunc>>& tail() const { return tail_; }
    /// Dense coefficient list of P, constant first, length n+1.
    std::vector<RatFunc> modulus() const;

    AlgElem zero() const;
    AlgElem one() const;
    /// The class of Y.
    AlgElem gen() const;
    AlgElem scalar(const RatFunc& r) const;
    /// Y^i reduced.
    AlgElem monomial(std::uint64_t i) const;
    AlgElem from_coords(std::vector<RatFunc> c) const;

    /// Reduces a coefficient vector of any length modulo P.
    std::vector<RatFunc> reduce(std::vector<RatFunc> c) const;

private:
    QuotientAlgebra(FieldCtx ctx, int n, std::vector<std::pair<int, RatFunc>> tail)
        : ctx_(std::move(ctx)), n_(n), tail_(std::move(tail)) {}

    FieldCtx ctx_;
    int n_;
    std::vector<std::pair<int, RatFunc>> tail_;
};

using AlgPtr = std::shared_ptr<const QuotientAlgebra>;

class AlgElem {
public:
    AlgElem() = default;
    AlgElem(AlgPtr alg, std::vector<RatFunc> coords) : alg_(std::move(alg)), c_(std::move(coords)) {}

    const AlgPtr& alg() const { return alg_; }
    const std::vector<RatFunc>& coords() const { return c_; }
    const RatFunc& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;
    bool is_one() const;
    /// True iff only the constant coordinate may be nonzero.
    bool is_scalar() const;

    AlgElem operator-() const;
    friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const RatFunc& s, const AlgElem& a);
    friend AlgElem operator/(const AlgElem& a, const AlgElem& b) { return a * b.inv(); }
    AlgElem& operator+=(const AlgElem& b) { return *this = *this + b; }
    AlgElem& operator*=(const AlgElem& b) { return *this = *this * b; }

    AlgElem pow(std::uint64_t e) const;
    /// Inverse by extended Euclid against P over K(x). Throws DivisionByZero
    /// for zero and for zero divisors.
    AlgElem inv() const;

    friend bool operator==(const AlgElem& a, const AlgElem& b);
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

    std::string str(char var = 'x', char gen = 'y') const;

private:
    AlgPtr alg_;
    std::vector<RatFunc> c_;
};

}  // namespace cff
