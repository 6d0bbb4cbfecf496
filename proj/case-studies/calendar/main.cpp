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

#include <cstdio>
#include <cstring>
#include <fstream>

#include "calendar.hpp"

namespace {

int usage() {
  std::fprintf(stderr, "usage: calendar --alice <file> --bob <file>\n");
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  const char* alice_path = nullptr;
  const char* bob_path = nullptr;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--alice") && i + 1 < argc) {
      alice_path = argv[++i];
    } else if (!std::strcmp(argv[i], "--bob") && i + 1 < argc) {
      bob_path = argv[++i];
    } else {
      return usage();
    }
  }
  if (!alice_path || !bob_path) return usage();

  try {
    std::ifstream alice_in(alice_path);
    std::ifstream bob_in(bob_path);
    if (!alice_in) throw calendar::CalendarError(
        std::string("cannot open ") + alice_path);
    if (!bob_in) throw calendar::CalendarError(
        std::string("cannot open ") + bob_path);
    auto alice = calendar::parse_availability<ifc::A>(alice_in);
    auto bob = calendar::parse_availability<ifc::B>(bob_in);
    std::printf("%d\n", calendar::mutual_availability_count(alice, bob));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "calendar: %s\n", e.what());
    return 1;
  }
  return 0;
}
