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

#ifndef SLOCCSIM_ERRORS_HPP
#define SLOCCSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sloccsim {

struct SingularInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotNType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotBType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooManyQubits : std::length_error {
    using std::length_error::length_error;
};

struct ZeroProbabilityBranch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllConditioned : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientDecay : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoCrossing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sloccsim

#endif
