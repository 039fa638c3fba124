// Copyright 2026 The discnep Authors.
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


#ifndef DISCNEP_INSTANCE_IO_HPP_
#define DISCNEP_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "discnep/model.hpp"

namespace discnep {

// Instance interchange format (UTF-8 JSON):
//
//   {"players": [{"Q": [[..], ..], "C": [[..], ..], "b": [..],
//                 "l": [..], "u": [..]}, ..]}
//
// Q and C are row-major lists of rows. C may be [] when there is a single
// player. Bounds must be finite integers.
Problem load_problem(std::string_view document);
Problem load_problem_file(const std::string& path);

// Inverse of load_problem; numbers are written with round-trip precision.
std::string dump_problem(const Problem& problem);

}  // namespace discnep

#endif  // DISCNEP_INSTANCE_IO_HPP_
