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
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "battleship.hpp"

namespace {

int usage() {
  std::fprintf(stderr,
               "usage: battleship --seed-a N --seed-b N [--transcript <file>]\n");
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  const char* seed_a = nullptr;
  const char* seed_b = nullptr;
  const char* transcript_path = nullptr;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--seed-a") && i + 1 < argc) {
      seed_a = argv[++i];
    } else if (!std::strcmp(argv[i], "--seed-b") && i + 1 < argc) {
      seed_b = argv[++i];
    } else if (!std::strcmp(argv[i], "--transcript") && i + 1 < argc) {
      transcript_path = argv[++i];
    } else {
      return usage();
    }
  }
  if (!seed_a || !seed_b) return usage();

  std::ostringstream transcript;
  battleship::play(static_cast<std::uint32_t>(std::strtoul(seed_a, nullptr, 10)),
                   static_cast<std::uint32_t>(std::strtoul(seed_b, nullptr, 10)),
                   transcript);
  std::cout << transcript.str();
  if (transcript_path) {
    std::ofstream out(transcript_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::fprintf(stderr, "battleship: cannot write %s\n", transcript_path);
      return 1;
    }
    out << transcript.str();
  }
  return 0;
}
