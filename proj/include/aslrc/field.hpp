/*
   Copyright 2026 The aslrc Authors

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

#ifndef ASLRC_FIELD_HPP
#define ASLRC_FIELD_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace aslrc {

/// Element of F_{p^h}, stored as the base-p integer encoding of its
/// coordinate vector in the power basis of the field modulus:
/// value = c0 + c1*p + ... + c_{h-1}*p^{h-1}. All arithmetic lives on
/// FieldCtx; comparisons give the canonical total order (constant
/// coordinate least significant).
struct FElem {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(const FElem&, const FElem&) = default;
};

/// Exact arithmetic context for F_{p^h}, p an odd prime, 1 <= h <= 3.
///
/// The modulus is the canonical degree-h monic irreducible over F_p:
/// lexicographically smallest constant-first coefficient tuple. All
/// element representations are therefore stable across runs and
/// platforms. Multiplicative structure uses discrete-log tables; the
/// context is immutable after construction and freely shareable.
class FieldCtx {
public:
    static FieldCtx make(int p, int h) { return FieldCtx(p, h); }

    int p() const noexcept { return p_; }
    int h() const noexcept { return h_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Modulus coefficients, constant term first, leading 1 included.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    FElem zero() const noexcept { return FElem{0}; }
    FElem one() const noexcept { return FElem{1}; }

    FElem element(std::uint32_t index) const {
        assert(index < q_);
        return FElem{index};
    }

    /// Embeds an integer into the prime subfield.
    FElem from_int(std::int64_t n) const {
        std::int64_t r = n % p_;
        if (r < 0) r += p_;
        return FElem{static_cast<std::uint32_t>(r)};
    }

    /// Builds an element from coordinates (constant first); values are
    /// reduced mod p, at most h entries.
    FElem from_coeffs(std::span<const int> c) const {
        if (c.size() > static_cast<std::size_t>(h_))
            throw error(errc::unsupported_degree, "coefficient vector longer than extension degree");
        std::uint32_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            int r = c[i] % p_;
            if (r < 0) r += p_;
            v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(r);
        }
        return FElem{v};
    }

    std::vector<int> coeffs(FElem a) const {
        std::vector<int> out(static_cast<std::size_t>(h_));
        for (int i = 0; i < h_; ++i) out[static_cast<std::size_t>(i)] = digits_[a.v][static_cast<std::size_t>(i)];
        return out;
    }

    FElem add(FElem a, FElem b) const {
        assert(a.v < q_ && b.v < q_);
        const auto& da = digits_[a.v];
        const auto& db = digits_[b.v];
        std::uint32_t v = 0;
        for (int i = h_; i-- > 0;) {
            int s = da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)];
            if (s >= p_) s -= p_;
            v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(s);
        }
        return FElem{v};
    }

    FElem neg(FElem a) const {
        assert(a.v < q_);
        const auto& da = digits_[a.v];
        std::uint32_t v = 0;
        for (int i = h_; i-- > 0;) {
            int s = da[static_cast<std::size_t>(i)] == 0 ? 0 : p_ - da[static_cast<std::size_t>(i)];
            v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(s);
        }
        return FElem{v};
    }

    FElem sub(FElem a, FElem b) const { return add(a, neg(b)); }

    FElem mul(FElem a, FElem b) const {
        assert(a.v < q_ && b.v < q_);
        if (a.v == 0 || b.v == 0) return FElem{0};
        std::uint32_t e = log_[a.v] + log_[b.v];
        if (e >= q_ - 1) e -= q_ - 1;
        return FElem{exp_[e]};
    }

    FElem inv(FElem a) const {
        if (a.v == 0) throw std::invalid_argument("inverse of zero");
        std::uint32_t e = (q_ - 1 - log_[a.v]) % (q_ - 1);
        return FElem{exp_[e]};
    }

    FElem div(FElem a, FElem b) const { return mul(a, inv(b)); }

    FElem pow(FElem a, std::uint64_t e) const {
        if (e == 0) return one();
        if (a.v == 0) return zero();
        std::uint64_t r = (static_cast<std::uint64_t>(log_[a.v]) * (e % (q_ - 1))) % (q_ - 1);
        return FElem{exp_[r]};
    }

    FElem frobenius(FElem a) const { return FElem{frob_[a.v]}; }

    /// a + a^p + ... + a^{p^{h-1}}; lands in the prime subfield.
    FElem trace(FElem a) const { return FElem{trace_[a.v]}; }

    /// a * a^p * ... * a^{p^{h-1}}; lands in the prime subfield.
    FElem norm(FElem a) const { return FElem{norm_[a.v]}; }

    bool in_prime_subfield(FElem a) const { return a.v < static_cast<std::uint32_t>(p_); }

    /// Smallest y with y^p - y = c, if any (additive Hilbert 90: exists
    /// iff trace(c) = 0).
    std::optional<FElem> artin_schreier_base(FElem c) const {
        std::uint32_t y = as_base_[c.v];
        if (y == q_) return std::nullopt;
        return FElem{y};
    }

    /// All y with y^p - y = c: empty, or a coset of F_p of size exactly p.
    std::vector<FElem> artin_schreier_roots(FElem c) const {
        auto base = artin_schreier_base(c);
        if (!base) return {};
        std::vector<FElem> roots;
        roots.reserve(static_cast<std::size_t>(p_));
        for (int d = 0; d < p_; ++d) roots.push_back(add(*base, from_int(d)));
        std::sort(roots.begin(), roots.end());
        return roots;
    }

private:
    FieldCtx(int p, int h) : p_(p), h_(h) {
        if (p < 2 || p % 2 == 0 || !is_prime(p))
            throw error(errc::invalid_characteristic, "characteristic must be an odd prime, got " + std::to_string(p));
        if (h < 1 || h > 3)
            throw error(errc::unsupported_degree, "extension degree must be 1, 2 or 3, got " + std::to_string(h));
        std::uint64_t q = 1;
        for (int i = 0; i < h; ++i) q *= static_cast<std::uint64_t>(p);
        if (q > (1u << 20))
            throw error(errc::enumeration_budget_exceeded, "field size p^h exceeds the table budget");
        q_ = static_cast<std::uint32_t>(q);

        modulus_ = canonical_modulus(p, h);

        digits_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            std::uint32_t t = a;
            for (int i = 0; i < h_; ++i) {
                digits_[a][static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(t % static_cast<std::uint32_t>(p_));
                t /= static_cast<std::uint32_t>(p_);
            }
        }

        build_log_tables();
        build_maps();
    }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    /// Lexicographically smallest (constant-first tuple) monic irreducible
    /// of degree h over F_p. For h in {2,3} reducible implies a linear
    /// factor, so a full root sweep decides irreducibility.
    static std::vector<int> canonical_modulus(int p, int h) {
        if (h == 1) return {0, 1};
        std::vector<int> tail(static_cast<std::size_t>(h), 0);
        for (;;) {
            std::vector<int> cand(tail);
            cand.push_back(1);
            bool has_root = false;
            for (int r = 0; r < p && !has_root; ++r) {
                long long v = 0, rp = 1;
                for (int c : cand) {
                    v = (v + c * rp) % p;
                    rp = (rp * r) % p;
                }
                has_root = (v == 0);
            }
            if (!has_root) return cand;
            // next tuple in lex order: increment from the last coordinate
            int i = h - 1;
            while (i >= 0 && tail[static_cast<std::size_t>(i)] == p - 1) tail[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) throw error(errc::unsupported_degree, "no irreducible modulus found");
            ++tail[static_cast<std::size_t>(i)];
        }
    }

    // Table-free polynomial multiplication, used only while bootstrapping
    // the discrete-log tables.
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        std::array<int, 5> prod{};
        const auto& da = digits_[a];
        const auto& db = digits_[b];
        for (int i = 0; i < h_; ++i)
            for (int j = 0; j < h_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
        for (int k = 2 * h_ - 2; k >= h_; --k) {
            int c = prod[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            prod[static_cast<std::size_t>(k)] = 0;
            for (int i = 0; i < h_; ++i) {
                int& slot = prod[static_cast<std::size_t>(k - h_ + i)];
                slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
            }
        }
        std::uint32_t v = 0;
        for (int i = h_; i-- > 0;) v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(prod[static_cast<std::size_t>(i)]);
        return v;
    }

    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_log_tables() {
        std::uint32_t order = q_ - 1;
        std::vector<std::uint64_t> prime_factors;
        {
            std::uint64_t m = order;
            for (std::uint64_t d = 2; d * d <= m; ++d)
                if (m % d == 0) {
                    prime_factors.push_back(d);
                    while (m % d == 0) m /= d;
                }
            if (m > 1) prime_factors.push_back(m);
        }
        std::uint32_t gen = 0;
        for (std::uint32_t a = 2; a < q_; ++a) {
            bool ok = true;
            for (std::uint64_t f : prime_factors)
                if (pow_raw(a, order / f) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen = a;
                break;
            }
        }
        assert(gen != 0);
        exp_.resize(order);
        log_.assign(q_, 0);
        std::uint32_t cur = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_raw(cur, gen);
        }
        assert(cur == 1);
    }

    void build_maps() {
        frob_.resize(q_);
        trace_.resize(q_);
        norm_.resize(q_);
        as_base_.assign(q_, q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            frob_[a] = pow(FElem{a}, static_cast<std::uint64_t>(p_)).v;
        for (std::uint32_t a = 0; a < q_; ++a) {
            FElem t = zero(), n = one(), x = FElem{a};
            for (int i = 0; i < h_; ++i) {
                t = add(t, x);
                n = mul(n, x);
                x = FElem{frob_[x.v]};
            }
            trace_[a] = t.v;
            norm_[a] = n.v;
        }
        for (std::uint32_t y = 0; y < q_; ++y) {
            std::uint32_t c = sub(FElem{frob_[y]}, FElem{y}).v;
            if (as_base_[c] == q_) as_base_[c] = y;
        }
    }

    int p_;
    int h_;
    std::uint32_t q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::array<std::uint16_t, 3>> digits_;
    std::vector<std::uint32_t> exp_, log_, frob_, trace_, norm_, as_base_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

inline FieldPtr make_field(int p, int h) { return std::make_shared<const FieldCtx>(FieldCtx::make(p, h)); }

/// Univariate polynomial, ascending coefficients, no trailing zeros
/// (the zero polynomial is the empty list).
struct UniPoly {
    std::vector<FElem> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back().v == 0) coeffs.pop_back();
    }
};

inline FElem eval(const FieldCtx& F, const UniPoly& f, FElem x) {
    FElem acc = F.zero();
    for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs[i]);
    return acc;
}

/// Exact Lagrange interpolation through the first degree_bound+1 samples;
/// any extra samples are checked for consistency against the result.
inline UniPoly interpolate_univariate(const FieldCtx& F,
                                      std::span<const std::pair<FElem, FElem>> samples,
                                      int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    const std::size_t m = static_cast<std::size_t>(degree_bound) + 1;
    if (samples.size() < m)
        throw error(errc::insufficient_lower_data,
                    "need " + std::to_string(m) + " samples, got " + std::to_string(samples.size()));
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw error(errc::duplicate_node, "repeated interpolation abscissa");

    UniPoly result;
    result.coeffs.assign(m, F.zero());
    std::vector<FElem> basis;
    for (std::size_t i = 0; i < m; ++i) {
        basis.assign(1, F.one());
        FElem denom = F.one();
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            // basis *= (X - x_j)
            basis.push_back(F.zero());
            for (std::size_t t = basis.size() - 1; t > 0; --t)
                basis[t] = F.add(basis[t - 1], F.mul(basis[t], F.neg(samples[j].first)));
            basis[0] = F.mul(basis[0], F.neg(samples[j].first));
            denom = F.mul(denom, F.sub(samples[i].first, samples[j].first));
        }
        FElem scale = F.div(samples[i].second, denom);
        for (std::size_t t = 0; t < basis.size(); ++t)
            result.coeffs[t] = F.add(result.coeffs[t], F.mul(scale, basis[t]));
    }
    result.trim();

    for (std::size_t i = m; i < samples.size(); ++i)
        if (eval(F, result, samples[i].first) != samples[i].second)
            throw error(errc::inconsistent_samples, "extra sample disagrees with interpolant");
    return result;
}

} // namespace aslrc

#endif
