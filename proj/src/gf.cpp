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

#include "cff/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cff {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::CtxMismatch: return "CtxMismatch";
        case ErrorCode::NoEmbedding: return "NoEmbedding";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::ZeroValuation: return "ZeroValuation";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ReducibleResult: return "ReducibleResult";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::UnknownPlace: return "UnknownPlace";
        case ErrorCode::FunctionalEquationViolated: return "FunctionalEquationViolated";
        case ErrorCode::TransportFailure: return "TransportFailure";
        case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorCode::WrongQ: return "WrongQ";
        case ErrorCode::ClosureOverflow: return "ClosureOverflow";
        case ErrorCode::GenericPlaceUnsupported: return "GenericPlaceUnsupported";
        case ErrorCode::WrongOrder: return "WrongOrder";
        case ErrorCode::NonCentralInvolution: return "NonCentralInvolution";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    Elt generator = 0;
    Elt gen_class = 0;
    // Discrete logarithms with respect to an internal primitive element t.
    // exp has length 2(q-1) so that log a + log b never needs a reduction.
    std::vector<Elt> exp;
    std::vector<std::uint32_t> log;
    // zech[i] = log(1 + t^i), or kNoLog when 1 + t^i = 0.
    std::vector<std::uint32_t> zech;
    std::uint32_t log_minus_one = 0;

    static constexpr std::uint32_t kNoLog = 0xffffffffu;
};

}  // namespace detail

namespace {

using detail::FieldData;
using PrimePoly = std::vector<std::uint32_t>;  // over GF(p), constant first

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::tie(t, nt) = std::pair{nt, t - qq * nt};
        std::tie(r, nr) = std::pair{nr, r - qq * nr};
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic m, over GF(p).
void reduce_monic(PrimePoly& f, const PrimePoly& m, std::uint32_t p) {
    trim(f);
    const std::size_t dm = m.size() - 1;
    while (f.size() > dm) {
        const std::uint64_t c = f.back();
        const std::size_t shift = f.size() - 1 - dm;
        for (std::size_t i = 0; i < dm; ++i)
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - m[i]) * c) % p);
        f.pop_back();
        trim(f);
    }
}

PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    reduce_monic(r, m, p);
    return r;
}

PrimePoly powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint32_t p) {
    PrimePoly r{1};
    reduce_monic(base, m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        e >>= 1;
        if (e) base = mulmod(base, base, m, p);
    }
    return r;
}

PrimePoly prime_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        const std::uint32_t li = inv_mod(b.back(), p);
        for (auto& c : b) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
        reduce_monic(a, b, p);
        std::swap(a, b);
    }
    return a;
}

bool is_one(const PrimePoly& f) { return f.size() == 1 && f[0] == 1; }

// Irreducibility of a monic f of degree n over GF(p). Degree <= 2 by
// root-freeness; otherwise T^{p^n} = T mod f and gcd(T^{p^{n/r}} - T, f) = 1.
bool prime_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
    if (n == 1) return true;
    if (n == 2) {
        for (std::uint32_t c = 0; c < p; ++c) {
            std::uint64_t v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = (v * c + f[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    // frob[k] = T^{p^k} mod f
    std::vector<PrimePoly> frob(n + 1);
    frob[0] = PrimePoly{0, 1};
    reduce_monic(frob[0], f, p);
    for (std::uint32_t k = 1; k <= n; ++k) frob[k] = powmod(frob[k - 1], p, f, p);
    PrimePoly t{0, 1};
    reduce_monic(t, f, p);
    if (frob[n] != t) return false;
    for (auto r : prime_factors(n)) {
        PrimePoly d = frob[n / r];
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (!is_one(prime_gcd(f, d, p))) return false;
    }
    return true;
}

std::uint32_t encode(const PrimePoly& digits, std::uint32_t p) {
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
    return static_cast<std::uint32_t>(code);
}

PrimePoly decode(std::uint32_t code, std::uint32_t p, std::uint32_t n) {
    PrimePoly d(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

bool prime_primitive(const PrimePoly& a, const PrimePoly& m, std::uint32_t p, std::uint64_t order,
                     const std::vector<std::uint64_t>& primes) {
    if (a.empty()) return false;
    for (auto r : primes)
        if (is_one(powmod(a, order / r, m, p))) return false;
    return true;
}

// Candidates for the internal table generator, cheapest multiplier first:
// T + c, then monic quadratics, then everything.
PrimePoly find_table_generator(const PrimePoly& m, std::uint32_t p, std::uint32_t n) {
    const std::uint64_t order = ipow(p, n) - 1;
    const auto primes = prime_factors(order);
    for (std::uint32_t c = 0; c < p; ++c) {
        PrimePoly t{c, 1};
        if (prime_primitive(t, m, p, order, primes)) return t;
    }
    if (n > 2) {
        for (std::uint64_t c = 0; c < std::uint64_t{p} * p; ++c) {
            PrimePoly t{static_cast<std::uint32_t>(c % p), static_cast<std::uint32_t>(c / p), 1};
            if (prime_primitive(t, m, p, order, primes)) return t;
        }
    }
    for (std::uint64_t code = 1; code <= order; ++code) {
        PrimePoly t = decode(static_cast<std::uint32_t>(code), p, n);
        trim(t);
        if (prime_primitive(t, m, p, order, primes)) return t;
    }
    fail(ErrorCode::NotPrime, "no primitive element found");
}

std::shared_ptr<const FieldData> build_field(std::uint32_t p, std::uint32_t n) {
    auto d = std::make_shared<FieldData>();
    d->p = p;
    d->n = n;
    d->q = static_cast<std::uint32_t>(ipow(p, n));
    const std::uint32_t q = d->q;
    const std::uint32_t qm1 = q - 1;

    if (n == 1) {
        d->modulus = {0, 1};
        d->gen_class = 0;
    } else {
        // Lex order on (c_0, ..., c_{n-1}) with c_0 most significant.
        for (std::uint64_t rank = 0;; ++rank) {
            PrimePoly f(n + 1, 0);
            std::uint64_t r = rank;
            for (std::uint32_t i = n; i-- > 0;) {
                f[i] = static_cast<std::uint32_t>(r % p);
                r /= p;
            }
            f[n] = 1;
            if (f[0] != 0 && prime_irreducible(f, p)) {
                d->modulus = f;
                break;
            }
        }
        d->gen_class = p;
    }

    d->exp.assign(2 * std::size_t{qm1}, 0);
    d->log.assign(q, FieldData::kNoLog);
    if (n == 1) {
        std::uint32_t t = 0;
        const auto primes = prime_factors(qm1);
        for (std::uint32_t c = 1; c < p; ++c) {
            bool ok = true;
            for (auto r : primes) {
                std::uint64_t acc = 1, b = c, e = qm1 / r;
                while (e) {
                    if (e & 1) acc = acc * b % p;
                    b = b * b % p;
                    e >>= 1;
                }
                if (acc == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                t = c;
                break;
            }
        }
        std::uint64_t cur = 1;
        for (std::uint32_t i = 0; i < qm1; ++i) {
            d->exp[i] = static_cast<Elt>(cur);
            cur = cur * t % p;
        }
    } else {
        const PrimePoly t = find_table_generator(d->modulus, p, n);
        const PrimePoly& m = d->modulus;
        PrimePoly cur(n, 0);
        cur[0] = 1;
        PrimePoly shifted(n), acc(n);
        for (std::uint32_t i = 0; i < qm1; ++i) {
            d->exp[i] = encode(cur, p);
            // cur <- cur * t, accumulating t_j * cur * T^j
            std::fill(acc.begin(), acc.end(), 0);
            shifted = cur;
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (j > 0) {
                    const std::uint64_t top = shifted[n - 1];
                    for (std::uint32_t k = n - 1; k > 0; --k)
                        shifted[k] = static_cast<std::uint32_t>((shifted[k - 1] + (p - m[k]) * top) % p);
                    shifted[0] = static_cast<std::uint32_t>(((p - m[0]) * top) % p);
                }
                if (t[j] != 0)
                    for (std::uint32_t k = 0; k < n; ++k)
                        acc[k] = static_cast<std::uint32_t>((acc[k] + std::uint64_t{t[j]} * shifted[k]) % p);
            }
            cur = acc;
        }
    }
    for (std::uint32_t i = 0; i < qm1; ++i) {
        if (d->log[d->exp[i]] != FieldData::kNoLog)
            fail(ErrorCode::NotPrime, "table generator is not primitive");
        d->log[d->exp[i]] = i;
        d->exp[i + qm1] = d->exp[i];
    }
    d->zech.assign(qm1, FieldData::kNoLog);
    for (std::uint32_t i = 0; i < qm1; ++i) {
        const Elt a = d->exp[i];
        const std::uint32_t d0 = a % p;
        const Elt b = (d0 == p - 1) ? a - (p - 1) : a + 1;
        d->zech[i] = (b == 0) ? FieldData::kNoLog : d->log[b];
    }
    d->log_minus_one = (p == 2) ? 0 : qm1 / 2;

    // Public generator: least element in lex order with gcd(log, q-1) = 1.
    for (std::uint64_t rank = 0; rank < q; ++rank) {
        std::uint64_t r = rank;
        PrimePoly digits(n, 0);
        for (std::uint32_t i = n; i-- > 0;) {
            digits[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        const Elt a = encode(digits, p);
        if (a != 0 && std::gcd<std::uint64_t, std::uint64_t>(d->log[a], qm1) == 1) {
            d->generator = a;
            break;
        }
    }
    return d;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    const auto f = prime_factors(q);
    if (f.size() != 1) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint32_t n = 0;
    for (std::uint64_t r = q; r > 1; r /= f[0]) ++n;
    return {static_cast<std::uint32_t>(f[0]), n};
}

FieldCtx create_field(std::uint32_t p, std::uint32_t n, std::uint64_t cap) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) fail(ErrorCode::TooLarge, "extension degree must be at least 1");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        size *= p;
        if (size > cap)
            fail(ErrorCode::TooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(n) +
                                          ") exceeds the cap of " + std::to_string(cap) + " elements");
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FieldData>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[{p, n}];
    if (!slot) slot = build_field(p, n);
    return FieldCtx(slot);
}

FieldCtx field_of_order(std::uint64_t q, std::uint64_t cap) {
    const auto [p, n] = prime_power(q);
    return create_field(p, n, cap);
}

std::uint32_t FieldCtx::p() const { return data_->p; }
std::uint32_t FieldCtx::n() const { return data_->n; }
std::uint32_t FieldCtx::size() const { return data_->q; }
const std::vector<std::uint32_t>& FieldCtx::modulus() const { return data_->modulus; }
Elt FieldCtx::generator() const { return data_->generator; }
Elt FieldCtx::gen_class() const { return data_->gen_class; }

std::string FieldCtx::name() const {
    if (data_->n == 1) return "GF(" + std::to_string(data_->p) + ")";
    return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->n) + ")";
}

Elt FieldCtx::add(Elt a, Elt b) const {
    const FieldData& d = *data_;
    if (d.p == 2) return a ^ b;
    if (d.n == 1) {
        const std::uint32_t s = a + b;
        return s >= d.p ? s - d.p : s;
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = d.log[a], lb = d.log[b];
    const std::uint32_t qm1 = d.q - 1;
    const std::uint32_t diff = lb >= la ? lb - la : lb + qm1 - la;
    const std::uint32_t z = d.zech[diff];
    if (z == FieldData::kNoLog) return 0;
    return d.exp[la + z];
}

Elt FieldCtx::neg(Elt a) const {
    const FieldData& d = *data_;
    if (a == 0 || d.p == 2) return a;
    if (d.n == 1) return d.p - a;
    return d.exp[d.log[a] + d.log_minus_one];
}

Elt FieldCtx::mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    const FieldData& d = *data_;
    return d.exp[d.log[a] + d.log[b]];
}

Elt FieldCtx::inv(Elt a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + name());
    const FieldData& d = *data_;
    const std::uint32_t l = d.log[a];
    return l == 0 ? 1 : d.exp[d.q - 1 - l];
}

Elt FieldCtx::pow(Elt a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    e %= (data_->q - 1);
    Elt r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

std::uint64_t FieldCtx::order(Elt a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "order of zero");
    const std::uint64_t qm1 = data_->q - 1;
    return qm1 / std::gcd<std::uint64_t, std::uint64_t>(data_->log[a], qm1);
}

bool FieldCtx::is_power(Elt a, std::uint64_t d) const {
    if (a == 0) return true;
    const std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(d, data_->q - 1);
    return data_->log[a] % g == 0;
}

std::optional<Elt> FieldCtx::root(Elt a, std::uint64_t d) const {
    const std::uint64_t qm1 = data_->q - 1;
    if (d == 0 || qm1 % d != 0) fail(ErrorCode::WrongOrder, "root degree must divide |K*|");
    if (a == 0) return Elt{0};
    const std::uint32_t l = data_->log[a];
    if (l % d != 0) return std::nullopt;
    return data_->exp[l / d];
}

Elt FieldCtx::from_int(std::int64_t v) const {
    const std::int64_t p = data_->p;
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Elt>(r);
}

std::vector<std::uint32_t> FieldCtx::coeffs(Elt a) const { return decode(a, data_->p, data_->n); }

Elt FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
    std::uint64_t code = 0;
    const std::uint32_t p = data_->p;
    for (std::size_t i = std::min<std::size_t>(c.size(), data_->n); i-- > 0;) code = code * p + (c[i] % p);
    return static_cast<Elt>(code);
}

std::uint64_t FieldCtx::lex_rank(Elt a) const {
    std::uint64_t rank = 0;
    for (std::uint32_t i = 0; i < data_->n; ++i) {
        rank = rank * data_->p + a % data_->p;
        a /= data_->p;
    }
    return rank;
}

Elt FieldCtx::from_lex_rank(std::uint64_t rank) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < data_->n; ++i) {
        code = code * data_->p + rank % data_->p;
        rank /= data_->p;
    }
    return static_cast<Elt>(code);
}

std::string FieldCtx::format(Elt a) const {
    if (data_->n == 1) return std::to_string(a);
    if (a == 0) return "0";
    const auto c = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i] << '*';
        os << 'g';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.ctx() != b.ctx())
        fail(ErrorCode::CtxMismatch, "elements of " + a.ctx().name() + " and " + b.ctx().name());
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.ctx(), a.ctx().add(a.raw(), b.raw())};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.ctx(), a.ctx().sub(a.raw(), b.raw())};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.ctx(), a.ctx().mul(a.raw(), b.raw())};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.ctx(), a.ctx().div(a.raw(), b.raw())};
}
FieldElem FieldElem::inv() const { return {ctx_, ctx_.inv(v_)}; }

FieldElem primitive_element(const FieldCtx& ctx) { return {ctx, ctx.generator()}; }

const Embedding& embedding(const FieldCtx& src, const FieldCtx& dst) {
    if (src.p() != dst.p() || dst.n() % src.n() != 0)
        fail(ErrorCode::NoEmbedding, "no embedding " + src.name() + " -> " + dst.name());
    static std::mutex mu;
    static std::map<std::pair<const void*, const void*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{src.raw(), dst.raw()}];
    if (slot) return *slot;
    auto e = std::make_unique<Embedding>();
    e->src = src;
    e->dst = dst;
    if (src == dst) {
        e->root = src.is_prime_field() ? 0 : src.gen_class();
        e->table.resize(src.size());
        for (Elt a = 0; a < src.size(); ++a) e->table[a] = a;
        slot = std::move(e);
        return *slot;
    }
    const auto& m = src.modulus();
    // Least root of the source modulus in the target, lex order.
    bool found = false;
    for (std::uint64_t rank = 0; rank < dst.size(); ++rank) {
        const Elt r = dst.from_lex_rank(rank);
        Elt v = 0;
        for (std::size_t i = m.size(); i-- > 0;) v = dst.add(dst.mul(v, r), dst.from_int(m[i]));
        if (v == 0) {
            e->root = r;
            found = true;
            break;
        }
    }
    if (!found) fail(ErrorCode::NoEmbedding, "source modulus has no root in " + dst.name());
    e->table.resize(src.size());
    for (Elt a = 0; a < src.size(); ++a) {
        const auto c = src.coeffs(a);
        Elt v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = dst.add(dst.mul(v, e->root), c[i]);
        e->table[a] = v;
    }
    slot = std::move(e);
    return *slot;
}

FieldElem embed(const FieldElem& e, const FieldCtx& target) {
    if (e.ctx() == target) return e;
    return {target, embedding(e.ctx(), target)(e.raw())};
}

}  // namespace cff
