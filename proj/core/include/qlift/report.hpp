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

#ifndef QLIFT_REPORT_HPP
#define QLIFT_REPORT_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qlift/cyclotomic.hpp"

namespace qlift {

/// Outcome of one named check. Witness fields use 1-based generator indices.
struct CheckResult {
  std::string check;
  bool passed = true;
  nlohmann::json witness = nlohmann::json::object();
  std::optional<CyclotomicScalar> lhs;
  std::optional<CyclotomicScalar> rhs;
  std::string detail;
};

class Report {
 public:
  CheckResult& add(CheckResult result) {
    checks_.push_back(std::move(result));
    return checks_.back();
  }
  CheckResult& add(std::string name, bool passed, nlohmann::json witness = nlohmann::json::object(),
                   std::string detail = {}) {
    return add(CheckResult{std::move(name), passed, std::move(witness), std::nullopt, std::nullopt, std::move(detail)});
  }
  void append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return &c;
    return nullptr;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.check == name) return &c;
    return nullptr;
  }
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace qlift

#endif  // QLIFT_REPORT_HPP
