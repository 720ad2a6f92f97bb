// Copyright 2026 The murlab Authors
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

/// @file cli.hpp
/// Entry point of the mur-lab command line tool, exposed as a function so
/// the test suite can drive it in process. Commands: direct-test, circuit,
/// distance, inequality-scan. Exit codes: 0 success (including --help),
/// 1 internal/numeric failure, 2 precondition violation or unusable flags.

#pragma once

#include <ostream>

namespace murlab::cli {

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace murlab::cli
