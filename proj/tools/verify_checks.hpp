// Copyright 2026 The sloccsim Authors
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
//
// Named closed-form-vs-oracle checks behind the `verify` subcommand.

#ifndef SLOCCSIM_TOOLS_VERIFY_CHECKS_HPP
#define SLOCCSIM_TOOLS_VERIFY_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

namespace sloccsim::verify {

struct CheckParams {
    // Testing aid: adds a small offset inside the closed forms being checked
    // so the harness itself can be validated to flag failures.
    double mutation = 0.0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double millis = 0.0;
};

struct CheckDef {
    std::string name;
    std::function<bool(const CheckParams &, std::string &)> run;
};

const std::vector<CheckDef> &all_checks();

/// Runs every check whose name contains `filter` (all when empty).
std::vector<CheckResult> run_checks(const std::string &filter, const CheckParams &params);

}  // namespace sloccsim::verify

#endif
