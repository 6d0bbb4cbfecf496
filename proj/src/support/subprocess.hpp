// Copyright 2026 The ifcpp Authors
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

#ifndef IFCPP_SUPPORT_SUBPROCESS_HPP_
#define IFCPP_SUPPORT_SUBPROCESS_HPP_

#include <string>
#include <vector>

namespace ifcpp {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
  double seconds = 0.0;
  bool started = false;  // false if the binary could not be executed
};

// Runs argv[0] with the given arguments, capturing stdout and stderr.
// No shell is involved. If stdin_path is non-empty it is fed to the child's
// stdin; otherwise stdin is /dev/null.
RunResult run_process(const std::vector<std::string>& argv,
                      const std::string& stdin_path = "");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
bool file_exists(const std::string& path);

// Creates a fresh directory under the system temp root and returns its path.
std::string make_temp_dir(const std::string& prefix);

}  // namespace ifcpp

#endif  // IFCPP_SUPPORT_SUBPROCESS_HPP_
