// Copyright 2026 The genmetrics authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace genmetrics {

// Invalid input, malformed file, or violated precondition. Maps to
// process exit code 2 at the CLI boundary.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical-consistency failure (e.g. a squared distance that came out
// more negative than rounding can explain). Maps to exit code 3.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace genmetrics
