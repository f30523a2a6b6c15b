/*
   Copyright 2026 The qlift Authors

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

/**
 * @file io.hpp
 * @brief JSON encodings.
 *
 * Scalar:        [[numerator, denominator, power], ...]   meaning sum n/d z_N^power.
 *                An integer or a "p/q" string is accepted as a rational shorthand.
 * Presentation:  {"group": {"orders": [...]}, "theta": t, "g": [[...], ...],
 *                 "chi": [[...], ...], "a": [scalar, ...],
 *                 "a_off": [{"i": 1, "j": 2, "value": scalar}, ...],
 *                 "modulus": N, "r": [...]}
 *                with 1-based i < j; "a", "a_off", "modulus", "r" optional.
 * Functional:    [{"left": powers, "right": powers, "value": scalar}, ...],
 *                zero entries omitted, lexicographic order.
 * Report:        [{"check": name, "status": "pass" | "fail", "witness": {...},
 *                  "lhs": scalar, "rhs": scalar, "detail": text}, ...]
 *
 * Malformed input throws StructuralError naming the offending field.
 */

#ifndef QLIFT_IO_HPP
#define QLIFT_IO_HPP

#include <filesystem>
#include <memory>

#include <nlohmann/json.hpp>

#include "qlift/cyclotomic.hpp"
#include "qlift/functional.hpp"
#include "qlift/presentation.hpp"
#include "qlift/report.hpp"

namespace qlift {

nlohmann::json scalar_to_json(const CyclotomicScalar& s);
CyclotomicScalar scalar_from_json(const nlohmann::json& j, int modulus, const std::string& field = "scalar");

nlohmann::json presentation_to_json(const LiftingPresentation& p);
LiftingPresentation presentation_from_json(const nlohmann::json& j);

nlohmann::json functional_to_json(const BilinearFunctional& f);
BilinearFunctional functional_from_json(const nlohmann::json& j, std::shared_ptr<const Coalgebra> coalgebra);

nlohmann::json check_to_json(const CheckResult& c);
nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j, int modulus);

/// Parses a file; syntax errors carry line and column.
nlohmann::json load_json(const std::filesystem::path& path);
LiftingPresentation load_presentation(const std::filesystem::path& path);

}  // namespace qlift

#endif  // QLIFT_IO_HPP
