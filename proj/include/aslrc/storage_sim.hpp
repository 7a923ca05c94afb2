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

#ifndef ASLRC_STORAGE_SIM_HPP
#define ASLRC_STORAGE_SIM_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "recovery.hpp"

namespace aslrc {

/// Assignment of codeword positions to storage nodes. The default
/// policy stripes each fiber's p symbols across p distinct nodes, so a
/// single node failure costs at most one erasure per fiber.
struct NodeLayout {
    int node_count = 0;
    std::vector<int> node_of; // per position
};

enum class LayoutPolicy { fiber_stripe };

inline NodeLayout build_layout(const EvaluationCode& code, int node_count,
                               LayoutPolicy policy = LayoutPolicy::fiber_stripe) {
    const int p = code.spec.p();
    if (node_count < p)
        throw error(errc::too_few_nodes,
                    "need at least p = " + std::to_string(p) + " nodes, got " + std::to_string(node_count));
    (void)policy;
    NodeLayout layout;
    layout.node_count = node_count;
    layout.node_of.assign(static_cast<std::size_t>(code.n()), 0);
    int cursor = 0;
    for (const auto& fiber : code.index.fibers) {
        for (std::size_t j = 0; j < fiber.size(); ++j)
            layout.node_of[static_cast<std::size_t>(fiber[j])] = (cursor + static_cast<int>(j)) % node_count;
        cursor = (cursor + p) % node_count;
    }
    return layout;
}

enum class ScenarioKind { random_nodes, random_symbols, targeted_group };

inline const char* scenario_kind_name(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::random_nodes: return "random_nodes";
        case ScenarioKind::random_symbols: return "random_symbols";
        case ScenarioKind::targeted_group: return "targeted_group";
    }
    return "?";
}

inline std::optional<ScenarioKind> scenario_kind_from_name(const std::string& s) {
    if (s == "random_nodes") return ScenarioKind::random_nodes;
    if (s == "random_symbols") return ScenarioKind::random_symbols;
    if (s == "targeted_group") return ScenarioKind::targeted_group;
    return std::nullopt;
}

/// Deterministic failure description. Identical (kind, count, seed,
/// level) against the same layout reproduces the identical erasure
/// pattern on every platform: draws come from std::mt19937_64 (fully
/// specified by the standard) reduced by plain modulo, never from
/// distribution objects.
struct FailureScenario {
    ScenarioKind kind = ScenarioKind::random_symbols;
    int count = 0;
    std::uint64_t seed = 0;
    RepairLevel level = RepairLevel::middle; // targeted_group: which group level to erase
};

namespace detail {

/// First `count` entries of a seeded Fisher-Yates shuffle of [0, population).
inline std::vector<int> sample_distinct(std::mt19937_64& gen, int population, int count) {
    std::vector<int> idx(static_cast<std::size_t>(population));
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(gen() % static_cast<std::uint64_t>(population - i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(count));
    return idx;
}

} // namespace detail

/// Applies a failure scenario to a codeword (the all-zero codeword by
/// default; repair structure is independent of symbol values).
inline ReceivedWord inject_failures(const NodeLayout& layout, const EvaluationCode& code,
                                    const FailureScenario& scenario, std::span<const FElem> codeword = {}) {
    if (scenario.count < 0) throw error(errc::invalid_scenario, "negative count");
    std::vector<FElem> zero_word;
    if (codeword.empty()) {
        zero_word.assign(static_cast<std::size_t>(code.n()), code.spec.surface.ctx->zero());
        codeword = zero_word;
    }

    std::mt19937_64 gen(scenario.seed);
    std::vector<int> positions;
    switch (scenario.kind) {
        case ScenarioKind::random_nodes: {
            if (scenario.count > layout.node_count)
                throw error(errc::invalid_scenario, "more failed nodes than nodes");
            std::vector<int> nodes = detail::sample_distinct(gen, layout.node_count, scenario.count);
            std::vector<bool> failed(static_cast<std::size_t>(layout.node_count), false);
            for (int nd : nodes) failed[static_cast<std::size_t>(nd)] = true;
            for (int c = 0; c < code.n(); ++c)
                if (failed[static_cast<std::size_t>(layout.node_of[static_cast<std::size_t>(c)])])
                    positions.push_back(c);
            break;
        }
        case ScenarioKind::random_symbols: {
            if (scenario.count > code.n())
                throw error(errc::invalid_scenario, "more erased symbols than positions");
            positions = detail::sample_distinct(gen, code.n(), scenario.count);
            break;
        }
        case ScenarioKind::targeted_group: {
            const bool lower = (scenario.level == RepairLevel::lower);
            const int groups = lower ? static_cast<int>(code.index.fibers.size())
                                     : static_cast<int>(code.index.groups.size());
            if (scenario.count > groups)
                throw error(errc::invalid_scenario, "more targeted groups than groups");
            for (int g : detail::sample_distinct(gen, groups, scenario.count)) {
                const auto& members = lower ? code.index.fibers[static_cast<std::size_t>(g)]
                                            : code.index.groups[static_cast<std::size_t>(g)].members;
                positions.insert(positions.end(), members.begin(), members.end());
            }
            break;
        }
    }
    return erase_positions(code, codeword, positions);
}

/// Aggregated outcome of repairing every erased position.
struct RepairReport {
    struct Entry {
        int position = 0;
        RepairTrace trace;
    };
    std::vector<Entry> per_position; // ascending by position
    struct Totals {
        std::int64_t erased = 0;
        std::int64_t recovered = 0;
        std::int64_t unrecoverable = 0;
        std::int64_t symbols_read = 0;
        std::array<std::int64_t, 3> level_histogram{};
    } totals;
};

/// Runs repair for every erased position. In the default parallel-repair
/// mode every repair sees the original erasure pattern; sequential mode
/// feeds each recovered symbol forward (exploratory only).
inline RepairReport simulate_repair(const EvaluationCode& code, const NodeLayout& layout,
                                    const ReceivedWord& received, const RepairPolicy& policy = {}) {
    (void)layout;
    RepairReport report;
    ReceivedWord working = received;
    for (int pos : received.erased_positions()) {
        const ReceivedWord& view = policy.sequential ? working : received;
        RepairOutcome out = try_repair(code, view, pos, policy);
        report.per_position.push_back({pos, out.trace});
        ++report.totals.erased;
        if (out.trace.success) {
            ++report.totals.recovered;
            ++report.totals.level_histogram[static_cast<std::size_t>(out.trace.level_used)];
            if (policy.sequential) working.symbols[static_cast<std::size_t>(pos)] = *out.value;
        } else {
            ++report.totals.unrecoverable;
        }
        report.totals.symbols_read += out.trace.total_reads();
    }
    return report;
}

} // namespace aslrc

#endif
