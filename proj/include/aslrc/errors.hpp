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

#ifndef ASLRC_ERRORS_HPP
#define ASLRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aslrc {

enum class errc {
    invalid_characteristic,
    unsupported_degree,
    duplicate_node,
    inconsistent_samples,
    degenerate_fiber,
    enumeration_budget_exceeded,
    invalid_code_spec,
    empty_evaluation_set,
    dimension_mismatch,
    empty_code,
    insufficient_lower_data,
    insufficient_middle_data,
    ambiguous_erasure_pattern,
    unrecoverable_position,
    too_few_nodes,
    invalid_scenario,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_characteristic: return "InvalidCharacteristic";
        case errc::unsupported_degree: return "UnsupportedDegree";
        case errc::duplicate_node: return "DuplicateNode";
        case errc::inconsistent_samples: return "InconsistentSamples";
        case errc::degenerate_fiber: return "DegenerateFiber";
        case errc::enumeration_budget_exceeded: return "EnumerationBudgetExceeded";
        case errc::invalid_code_spec: return "InvalidCodeSpec";
        case errc::empty_evaluation_set: return "EmptyEvaluationSet";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::empty_code: return "EmptyCode";
        case errc::insufficient_lower_data: return "InsufficientLowerData";
        case errc::insufficient_middle_data: return "InsufficientMiddleData";
        case errc::ambiguous_erasure_pattern: return "AmbiguousErasurePattern";
        case errc::unrecoverable_position: return "UnrecoverablePosition";
        case errc::too_few_nodes: return "TooFewNodes";
        case errc::invalid_scenario: return "InvalidScenario";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

/// Library-wide exception carrying a machine-readable error code.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace aslrc

#endif
