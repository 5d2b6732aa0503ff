// Copyright 2026 The sqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQKD_SERIALIZATION_HPP
#define SQKD_SERIALIZATION_HPP

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sqkd/eavesdropper.hpp"
#include "sqkd/povm.hpp"
#include "sqkd/protocol.hpp"
#include "sqkd/tradeoff.hpp"

namespace sqkd {

using Json = nlohmann::ordered_json;

// Complex numbers are written as [re, im]; matrices row-major as arrays of
// rows. Attack documents:
//
//   {"ancilla_dim": d, "omega": [[re, im], ...],
//    "V": [[[re, im], ...], ...], "U": [[[re, im], ...], ...]}
//
// POVM documents: {"elements": [matrix, ...]}.

Json matrix_to_json(const Operator& m);
Operator matrix_from_json(const Json& j, const std::string& what);

Json attack_to_json(const AttackModel& attack);
/// Throws ParseError on malformed documents and ValidationError when the
/// attack fails validation.
AttackModel attack_from_json(const Json& j);

Json povm_to_json(const Povm& povm);
Povm povm_from_json(const Json& j);

std::string to_document(const Json& j);
Json read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const Json& j);

AttackModel parse_attack_file(const std::filesystem::path& path);
void write_attack_file(const std::filesystem::path& path, const AttackModel& attack);
Povm parse_povm_file(const std::filesystem::path& path);

Json proof_trace_to_json(const ProofTrace& trace);
Json tradeoff_report_to_json(const TradeoffReport& report);

/// Re-checks an emitted report: required fields and types, probabilities in
/// range, rhs = theorem_rhs(p_ctrl, p_sift), gap = rhs − info, holds
/// consistent with gap, step slacks consistent with their sides, and the
/// embedded attack and POVM (when present) re-validate. Throws ParseError.
void validate_report(const Json& report);

}  // namespace sqkd

#endif  // SQKD_SERIALIZATION_HPP
