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

#ifndef ASLRC_RECOVERY_HPP
#define ASLRC_RECOVERY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "code.hpp"

namespace aslrc {

/// Codeword with erasures (erasure-only channel: symbols are either
/// correct or missing, never wrong).
struct ReceivedWord {
    std::string code_ref;
    std::vector<std::optional<FElem>> symbols;

    bool erased(int pos) const { return !symbols[static_cast<std::size_t>(pos)].has_value(); }
    std::vector<int> erased_positions() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (!symbols[i]) out.push_back(static_cast<int>(i));
        return out;
    }
};

inline ReceivedWord erase_positions(const EvaluationCode& code, std::span<const FElem> codeword,
                                    std::span<const int> positions) {
    if (codeword.size() != code.T.size())
        throw error(errc::dimension_mismatch, "codeword length does not match the code");
    ReceivedWord w;
    w.code_ref = code.id();
    w.symbols.assign(codeword.begin(), codeword.end());
    for (int pos : positions) {
        if (pos < 0 || pos >= code.n()) throw error(errc::invalid_scenario, "erasure position out of range");
        w.symbols[static_cast<std::size_t>(pos)].reset();
    }
    return w;
}

/// Records which positions' values were actually consumed. Erasure-flag
/// inspection is free; only value reads are charged.
struct AccessLog {
    std::vector<int> reads;

    FElem read(const ReceivedWord& w, int pos) {
        reads.push_back(pos);
        return *w.symbols[static_cast<std::size_t>(pos)];
    }
};

enum class RepairLevel { lower = 0, middle = 1, global = 2 };

inline const char* repair_level_name(RepairLevel l) {
    switch (l) {
        case RepairLevel::lower: return "lower";
        case RepairLevel::middle: return "middle";
        case RepairLevel::global: return "global";
    }
    return "?";
}

struct RepairGroup {
    RepairLevel level = RepairLevel::lower;
    std::vector<int> positions; // ordered repair support
    int geometry_id = -1;       // fiber id or group id
};

inline RepairGroup lower_group_of(const EvaluationCode& code, int pos) {
    int fid = code.index.fiber_of[static_cast<std::size_t>(pos)];
    return {RepairLevel::lower, code.index.fibers[static_cast<std::size_t>(fid)], fid};
}

inline RepairGroup middle_group_of(const EvaluationCode& code, int pos) {
    int gid = code.index.group_of[static_cast<std::size_t>(pos)];
    return {RepairLevel::middle, code.index.groups[static_cast<std::size_t>(gid)].support, gid};
}

/// Lower-level repair: the fiber through pos carries a univariate
/// polynomial in y of degree <= p-rho2, so p-rho2+1 known symbols of the
/// fiber determine the erased one. Reads exactly the first p-rho2+1
/// known fiber symbols and nothing outside the fiber.
inline FElem recover_lower(const EvaluationCode& code, const ReceivedWord& received, int pos,
                           AccessLog* log = nullptr) {
    if (!received.erased(pos)) throw error(errc::invalid_scenario, "position is not erased");
    const FieldCtx& F = *code.spec.surface.ctx;
    RepairGroup grp = lower_group_of(code, pos);
    const int needed = code.y_degree_bound() + 1;

    std::vector<int> known;
    for (int i : grp.positions)
        if (!received.erased(i)) known.push_back(i);
    if (static_cast<int>(known.size()) < needed)
        throw error(errc::insufficient_lower_data, "fiber has " + std::to_string(known.size()) +
                                                       " known symbols, need " + std::to_string(needed));

    AccessLog local;
    AccessLog& L = log ? *log : local;
    std::vector<std::pair<FElem, FElem>> samples;
    for (int i = 0; i < needed; ++i)
        samples.emplace_back(code.T[static_cast<std::size_t>(known[static_cast<std::size_t>(i)])].y,
                             L.read(received, known[static_cast<std::size_t>(i)]));
    UniPoly g = interpolate_univariate(F, samples, code.y_degree_bound());
    return eval(F, g, code.T[static_cast<std::size_t>(pos)].y);
}

/// Middle-level repair: layered interpolation over the group's curve (or
/// plane). Columns are the fibers sharing one value of the free
/// coordinate; each column with at least p-rho2+1 known symbols yields
/// the coefficients g_j(alpha); with D+1 successful columns each g_j is
/// interpolated as a polynomial of degree <= D and the restriction of g
/// is fully reconstructed. Leftover known symbols are swept for
/// consistency. Fails only when fewer than D+1 columns succeed.
inline std::vector<std::pair<int, FElem>> recover_middle(const EvaluationCode& code, const ReceivedWord& received,
                                                         const RepairGroup& group, AccessLog* log = nullptr) {
    const FieldCtx& F = *code.spec.surface.ctx;
    const auto& ginfo = code.index.groups[static_cast<std::size_t>(group.geometry_id)];
    const bool free_is_z = (ginfo.kind == PositionIndex::GroupKind::plane_x0);

    std::vector<int> erased;
    for (int i : group.positions)
        if (received.erased(i)) erased.push_back(i);
    if (erased.empty()) return {};

    auto free_coord = [&](int pos) -> FElem {
        const AffinePoint& P = code.T[static_cast<std::size_t>(pos)];
        return free_is_z ? P.z : P.x;
    };

    // columns keyed by the free coordinate, ascending
    std::map<FElem, std::vector<int>> columns;
    for (int i : group.positions) columns[free_coord(i)].push_back(i);

    const int needed_y = code.y_degree_bound() + 1;
    const int D = code.middle_degree_bound();

    std::vector<FElem> good_alpha;
    for (const auto& [alpha, members] : columns) {
        int known = 0;
        for (int i : members)
            if (!received.erased(i)) ++known;
        if (known >= needed_y) good_alpha.push_back(alpha);
    }
    if (static_cast<int>(good_alpha.size()) < D + 1)
        throw error(errc::insufficient_middle_data, std::to_string(good_alpha.size()) +
                                                        " usable columns, need " + std::to_string(D + 1));

    AccessLog local;
    AccessLog& L = log ? *log : local;
    std::vector<int> used; // positions consumed as interpolation samples

    // per-column y-interpolation on the lexicographically smallest D+1 columns
    std::vector<std::pair<FElem, UniPoly>> col_polys;
    for (int c = 0; c <= D; ++c) {
        FElem alpha = good_alpha[static_cast<std::size_t>(c)];
        std::vector<std::pair<FElem, FElem>> samples;
        for (int i : columns[alpha]) {
            if (received.erased(i) || static_cast<int>(samples.size()) == needed_y) continue;
            samples.emplace_back(code.T[static_cast<std::size_t>(i)].y, L.read(received, i));
            used.push_back(i);
        }
        col_polys.emplace_back(alpha, interpolate_univariate(F, samples, code.y_degree_bound()));
    }

    // coefficient polynomials g_j of degree <= D across the columns
    std::vector<UniPoly> coeff_polys(static_cast<std::size_t>(needed_y));
    for (int j = 0; j < needed_y; ++j) {
        std::vector<std::pair<FElem, FElem>> samples;
        for (const auto& [alpha, poly] : col_polys) {
            FElem gj = static_cast<std::size_t>(j) < poly.coeffs.size() ? poly.coeffs[static_cast<std::size_t>(j)]
                                                                        : F.zero();
            samples.emplace_back(alpha, gj);
        }
        coeff_polys[static_cast<std::size_t>(j)] = interpolate_univariate(F, samples, D);
    }

    auto eval_g = [&](int pos) -> FElem {
        FElem a = free_coord(pos);
        FElem y = code.T[static_cast<std::size_t>(pos)].y;
        FElem acc = F.zero();
        for (int j = needed_y - 1; j >= 0; --j)
            acc = F.add(F.mul(acc, y), eval(F, coeff_polys[static_cast<std::size_t>(j)], a));
        return acc;
    };

    std::vector<std::pair<int, FElem>> fills;
    fills.reserve(erased.size());
    for (int i : erased) fills.emplace_back(i, eval_g(i));

    // consistency sweep over every known symbol not consumed above
    std::sort(used.begin(), used.end());
    for (int i : group.positions) {
        if (received.erased(i) || std::binary_search(used.begin(), used.end(), i)) continue;
        if (L.read(received, i) != eval_g(i))
            throw error(errc::inconsistent_samples, "known symbol disagrees with the reconstructed polynomial");
    }
    return fills;
}

/// Global erasure decoding: solve for the unique message matching every
/// known symbol and re-encode. Needs the known columns of G to have full
/// rank k.
inline std::vector<FElem> recover_global(const EvaluationCode& code, const ReceivedWord& received,
                                         AccessLog* log = nullptr) {
    const FieldCtx& F = *code.spec.surface.ctx;
    const std::size_t k = code.basis.size();
    AccessLog local;
    AccessLog& L = log ? *log : local;

    std::vector<int> known;
    for (int c = 0; c < code.n(); ++c)
        if (!received.erased(c)) known.push_back(c);

    Matrix A(known.size(), k);
    std::vector<FElem> b;
    b.reserve(known.size());
    for (std::size_t i = 0; i < known.size(); ++i) {
        for (std::size_t r = 0; r < k; ++r) A.at(i, r) = code.G.at(r, static_cast<std::size_t>(known[i]));
        b.push_back(L.read(received, known[i]));
    }
    SolveResult res = solve_linear(F, A, b);
    if (res.status == SolveStatus::underdetermined)
        throw error(errc::ambiguous_erasure_pattern,
                    "known positions do not determine the message (rank < k)");
    if (res.status == SolveStatus::inconsistent)
        throw error(errc::inconsistent_samples, "known symbols are not consistent with any codeword");
    return encode(code, res.solution);
}

struct RepairPolicy {
    RepairLevel max_level = RepairLevel::global;
    bool sequential = false; // simulator-only: feed repairs forward
};

struct RepairTrace {
    bool success = false;
    RepairLevel level_used = RepairLevel::lower; // meaningful when success
    std::array<std::int64_t, 3> symbols_read{};  // per attempted level
    std::array<bool, 3> attempted{};

    std::int64_t total_reads() const { return symbols_read[0] + symbols_read[1] + symbols_read[2]; }
};

struct RepairOutcome {
    std::optional<FElem> value;
    RepairTrace trace;
};

/// Escalating repair: lower, then middle, then global, stopping at
/// policy.max_level. Never throws; inspect trace.success.
inline RepairOutcome try_repair(const EvaluationCode& code, const ReceivedWord& received, int pos,
                                const RepairPolicy& policy = {}) {
    RepairOutcome out;
    auto attempt = [&](RepairLevel level) -> bool {
        std::size_t li = static_cast<std::size_t>(level);
        out.trace.attempted[li] = true;
        AccessLog log;
        try {
            FElem v{};
            switch (level) {
                case RepairLevel::lower:
                    v = recover_lower(code, received, pos, &log);
                    break;
                case RepairLevel::middle: {
                    auto fills = recover_middle(code, received, middle_group_of(code, pos), &log);
                    auto it = std::find_if(fills.begin(), fills.end(),
                                           [pos](const auto& f) { return f.first == pos; });
                    v = it->second;
                    break;
                }
                case RepairLevel::global: {
                    auto word = recover_global(code, received, &log);
                    v = word[static_cast<std::size_t>(pos)];
                    break;
                }
            }
            out.trace.symbols_read[li] = static_cast<std::int64_t>(log.reads.size());
            out.trace.success = true;
            out.trace.level_used = level;
            out.value = v;
            return true;
        } catch (const error& e) {
            if (e.code() == errc::insufficient_lower_data || e.code() == errc::insufficient_middle_data ||
                e.code() == errc::ambiguous_erasure_pattern) {
                out.trace.symbols_read[li] = static_cast<std::int64_t>(log.reads.size());
                return false;
            }
            throw;
        }
    };
    for (RepairLevel level : {RepairLevel::lower, RepairLevel::middle, RepairLevel::global}) {
        if (static_cast<int>(level) > static_cast<int>(policy.max_level)) break;
        if (attempt(level)) break;
    }
    return out;
}

inline std::pair<FElem, RepairTrace> repair(const EvaluationCode& code, const ReceivedWord& received, int pos,
                                            const RepairPolicy& policy = {}) {
    RepairOutcome out = try_repair(code, received, pos, policy);
    if (!out.trace.success)
        throw error(errc::unrecoverable_position,
                    "position " + std::to_string(pos) + " is unrecoverable under the given policy");
    return {*out.value, out.trace};
}

} // namespace aslrc

#endif
