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

// Test-only oracles. These deliberately avoid the library's fast paths
// (trace tables, root tables, pow tables, prefix-sharing enumeration) so
// the values they produce are independent checks, not echoes.

#ifndef ASLRC_TESTS_SUPPORT_HPP
#define ASLRC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "aslrc/aslrc.hpp"

namespace oracle {

using namespace aslrc;

/// First monic irreducible of degree h over F_p in lex order on the
/// constant-first coefficient tuple, by trial root sweep (complete for
/// degree <= 3).
inline std::vector<int> canonical_modulus(int p, int h) {
    if (h == 1) return {0, 1};
    std::vector<int> tail(static_cast<std::size_t>(h), 0);
    for (;;) {
        std::vector<int> cand(tail);
        cand.push_back(1);
        bool root = false;
        for (int r = 0; r < p && !root; ++r) {
            long long v = 0, rp = 1;
            for (int c : cand) {
                v = (v + c * rp) % p;
                rp = rp * r % p;
            }
            root = (v == 0);
        }
        if (!root) return cand;
        int i = h - 1;
        while (i >= 0 && tail[static_cast<std::size_t>(i)] == p - 1) tail[static_cast<std::size_t>(i--)] = 0;
        ++tail[static_cast<std::size_t>(i)];
    }
}

/// Naive power by repeated multiplication (no discrete-log shortcut).
inline FElem slow_pow(const FieldCtx& F, FElem a, int e) {
    FElem r = F.one();
    for (int i = 0; i < e; ++i) r = F.mul(r, a);
    return r;
}

/// y^p - y evaluated without the Frobenius table.
inline FElem slow_as_lhs(const FieldCtx& F, FElem y) { return F.sub(slow_pow(F, y, F.p()), y); }

/// Surface point count by scanning all (x, z, y) triples and solving the
/// defining equation literally.
inline long long surface_count_direct(const SurfaceSpec& spec) {
    const FieldCtx& F = *spec.ctx;
    long long n = 0;
    for (std::uint32_t xi = 0; xi < F.q(); ++xi)
        for (std::uint32_t zi = 0; zi < F.q(); ++zi) {
            FElem f = eval(F, spec.f, F.element(xi), F.element(zi));
            for (std::uint32_t yi = 0; yi < F.q(); ++yi)
                if (slow_as_lhs(F, F.element(yi)) == f) ++n;
        }
    return n;
}

/// Trivariate polynomial evaluation by repeated multiplication, used to
/// cross-check codeword coordinates against the generator matrix.
inline FElem slow_poly_eval(const FieldCtx& F, const MonomialBasis& basis, std::span<const FElem> msg,
                            const AffinePoint& P) {
    FElem acc = F.zero();
    for (std::size_t r = 0; r < basis.monomials.size(); ++r) {
        const auto& m = basis.monomials[r];
        FElem term = msg[r];
        term = F.mul(term, slow_pow(F, P.x, m[0]));
        term = F.mul(term, slow_pow(F, P.y, m[1]));
        term = F.mul(term, slow_pow(F, P.z, m[2]));
        acc = F.add(acc, term);
    }
    return acc;
}

/// Exact minimum weight of the row space of M: reduces to an independent
/// row basis, then walks all q^rank scalar combinations with an odometer,
/// unlike the library's recursive message-space enumeration.
inline int min_weight_rowspace(const FieldCtx& F, Matrix M) {
    std::size_t r = row_reduce(F, M);
    if (r == 0) return -1;
    std::vector<std::uint32_t> digits(r, 0);
    std::vector<FElem> word(M.cols, F.zero());
    int best = static_cast<int>(M.cols) + 1;
    auto shift_row = [&](std::size_t i, std::uint32_t from, std::uint32_t to) {
        FElem delta = F.sub(F.element(to), F.element(from));
        for (std::size_t c = 0; c < M.cols; ++c)
            word[c] = F.add(word[c], F.mul(delta, M.at(i, c)));
    };
    for (;;) {
        std::size_t i = 0;
        while (i < r && digits[i] == F.q() - 1) {
            shift_row(i, F.q() - 1, 0);
            digits[i] = 0;
            ++i;
        }
        if (i == r) break;
        shift_row(i, digits[i], digits[i] + 1);
        ++digits[i];
        int w = 0;
        for (std::size_t c = 0; c < M.cols; ++c)
            if (word[c].v != 0) ++w;
        if (w != 0 && w < best) best = w;
    }
    return best;
}

inline std::vector<FElem> random_message(const FieldCtx& F, std::size_t k, std::mt19937_64& gen) {
    std::vector<FElem> msg(k);
    for (auto& m : msg) m = F.element(static_cast<std::uint32_t>(gen() % F.q()));
    return msg;
}

/// count distinct positions sampled without replacement.
inline std::vector<int> random_positions(int n, int count, std::mt19937_64& gen) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(gen() % static_cast<std::uint64_t>(n - i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(count));
    return idx;
}

} // namespace oracle

#endif
