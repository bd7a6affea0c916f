/*
   Copyright 2026 the repst authors

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

/**
 * @file json_io.hpp
 * @brief JSON encodings for the public value types, for CLI input/output and
 * file formats.
 *
 * All emitters return nlohmann ordered JSON so that member order — and hence
 * the serialized bytes — is deterministic. The schemas:
 *
 *  - Rational: a JSON number when integral and within +-2^53, else the
 *    string "p/q" (round-trips through Rational::parse).
 *  - Integer: same rule (number when small, decimal string when large).
 *  - Polynomial: array of rational coefficients, ascending powers, no
 *    trailing zeros; the zero polynomial is [].
 *  - Cyclotomic: the rational encoding when the value is rational, else
 *    {"n": conductor, "c": [rational, ...]} in the power basis of
 *    the n-th root of unity (length phi(n)).
 *  - IntPartition: array of parts, e.g. [3,1,1].
 *  - MultiPartition: array of partitions, one per slot.
 *  - SetPartition: {"k":…, "l":…, "blocks":[[…],…]} where upper points are
 *    1..k and lower points are -1..-l.
 *  - DiagramMorphism: {"k":…, "l":…, "terms":[{"blocks":…, "coeff":…}]} with
 *    coeff a Polynomial; terms in canonical diagram order.
 *  - CentralizerLabel: {"factors":[{"c":…, "multipartition":…}]}.
 *  - CenterSimple: {"n":…, "mu":…, "irrep": CentralizerLabel}. Parsers also
 *    accept "triv" and "sign" as the irrep, and derive n from mu.
 *  - TowerElement / gr-K0 expansions: arrays of terms carrying "mult",
 *    sorted by (degree, cycle type, label) — the map order.
 *  - Tables and reports: flat objects mirroring the struct fields.
 *
 * Parsers validate shapes and throw ErrorCode::ParseError with context on
 * malformed input.
 */

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "repst/center_tower.hpp"
#include "repst/cyclotomic.hpp"
#include "repst/diagram.hpp"
#include "repst/half_braiding.hpp"
#include "repst/int_partition.hpp"
#include "repst/oracle.hpp"
#include "repst/polynomial.hpp"
#include "repst/rational.hpp"
#include "repst/set_partition.hpp"
#include "repst/sn_characters.hpp"
#include "repst/wreath.hpp"

namespace repst {

using Json = nlohmann::ordered_json;

// ---- emitters -------------------------------------------------------------------

Json json_of(const Integer& value);
Json json_of(const Rational& value);
Json json_of(const Polynomial& value);
Json json_of(const Cyclotomic& value);
Json json_of(const IntPartition& value);
Json json_of(const MultiPartition& value);
Json json_of(const SetPartition& value);
Json json_of(const DiagramMorphism& value);
Json json_of(const CentralizerDescriptor& value);
Json json_of(const CentralizerLabel& value);
Json json_of(const CenterSimple& value);
Json json_of(const TowerElement& value);
Json json_of(const GrK0Basis& value);
Json json_of(const std::map<GrK0Basis, long>& value);
Json json_of(const SnCharacterTable& value);
Json json_of(const WreathTable& value);
Json json_of(const CentralizerTable& value);
Json json_of(const CenterCheckReport& value);
Json json_of(const FrobeniusReport& value);
Json json_of(const std::map<BlockLabel, std::vector<CenterSimple>>& value);

// ---- parsers --------------------------------------------------------------------

/// Parses a JSON document; ParseError instead of nlohmann exceptions.
Json parse_json(const std::string& text);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
Cyclotomic cyclotomic_from_json(const Json& j);
IntPartition partition_from_json(const Json& j);
MultiPartition multipartition_from_json(const Json& j);
SetPartition set_partition_from_json(const Json& j);
DiagramMorphism morphism_from_json(const Json& j);
CentralizerLabel centralizer_label_from_json(const Json& j);

/// {"mu":…, "irrep":…} with optional "n"; irrep accepts the shortcuts
/// "triv" and "sign" besides the factors object.
CenterSimple center_simple_from_json(const Json& j);

/// {"mu0":…, "v0":…, "lambda":…}; v0 accepts the same shortcuts.
GrK0Basis grk0_from_json(const Json& j);

}  // namespace repst
