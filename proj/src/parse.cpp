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

#include "cff/parse.hpp"

#include <cctype>
#include <map>
#include <string>

namespace cff {

namespace {

// Bivariate polynomial over GF(p): (power of g, power of the variable) -> coeff.
using Biv = std::map<std::pair<unsigned, unsigned>, std::uint32_t>;

class Parser {
public:
    Parser(std::string_view text, std::uint32_t p, bool allow_g) : s_(text), p_(p), allow_g_(allow_g) {}

    Biv parse() {
        Biv r = expr();
        skip_ws();
        if (pos_ != s_.size()) error("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::ParseError, "cannot parse '" + std::string(s_) + "': " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Biv add(Biv a, const Biv& b, bool negate) const {
        for (const auto& [k, v] : b) {
            const std::uint64_t term = negate ? (p_ - v) % p_ : v;
            a[k] = static_cast<std::uint32_t>((a[k] + term) % p_);
        }
        std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
        return a;
    }

    Biv mul(const Biv& a, const Biv& b) const {
        Biv r;
        for (const auto& [ka, va] : a)
            for (const auto& [kb, vb] : b) {
                auto& slot = r[{ka.first + kb.first, ka.second + kb.second}];
                slot = static_cast<std::uint32_t>((slot + std::uint64_t{va} * vb) % p_);
            }
        std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
        return r;
    }

    Biv expr() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Biv r = add({}, term(), negate);
        for (;;) {
            if (accept('+')) r = add(r, term(), false);
            else if (accept('-')) r = add(r, term(), true);
            else return r;
        }
    }

    Biv term() {
        Biv r = factor();
        while (accept('*')) r = mul(r, factor());
        return r;
    }

    Biv factor() {
        Biv base = primary();
        if (accept('^')) {
            const std::uint64_t e = number();
            if (e > 4096) error("exponent too large");
            Biv r{{{0, 0}, 1 % p_}};
            for (std::uint64_t i = 0; i < e; ++i) r = mul(r, base);
            return r;
        }
        return base;
    }

    std::uint64_t number() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected a number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (std::uint64_t{1} << 40)) error("number too large");
            ++pos_;
        }
        return v;
    }

    Biv primary() {
        skip_ws();
        if (pos_ >= s_.size()) error("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Biv r = expr();
            if (!accept(')')) error("missing ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = number() % p_;
            if (v == 0) return {};
            return {{{0, 0}, static_cast<std::uint32_t>(v)}};
        }
        if (c == 'g') {
            if (!allow_g_) error("symbol g is not available in a prime field");
            ++pos_;
            return {{{1, 0}, 1 % p_}};
        }
        if (c == 'T' || c == 'v' || c == 'x' || c == 'z') {
            ++pos_;
            return {{{0, 1}, 1 % p_}};
        }
        error(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::uint32_t p_;
    bool allow_g_;
};

Elt reduce_g(const FieldCtx& ctx, const std::map<unsigned, std::uint32_t>& gpowers) {
    Elt v = 0;
    for (const auto& [e, c] : gpowers) v = ctx.add(v, ctx.mul(ctx.from_int(c), ctx.pow(ctx.gen_class(), e)));
    return v;
}

}  // namespace

FieldElem parse_element(const FieldCtx& ctx, std::string_view text) {
    const Biv b = Parser(text, ctx.p(), !ctx.is_prime_field()).parse();
    std::map<unsigned, std::uint32_t> g;
    for (const auto& [k, v] : b) {
        if (k.second != 0) fail(ErrorCode::ParseError, "element literal contains a variable: " + std::string(text));
        g[k.first] = v;
    }
    return {ctx, reduce_g(ctx, g)};
}

Poly parse_poly(const FieldCtx& ctx, std::string_view text) {
    const Biv b = Parser(text, ctx.p(), !ctx.is_prime_field()).parse();
    std::map<unsigned, std::map<unsigned, std::uint32_t>> by_deg;
    for (const auto& [k, v] : b) by_deg[k.second][k.first] = v;
    std::vector<Elt> c;
    for (const auto& [d, g] : by_deg) {
        if (c.size() <= d) c.resize(d + 1, 0);
        c[d] = reduce_g(ctx, g);
    }
    return Poly(ctx, std::move(c));
}

}  // namespace cff
