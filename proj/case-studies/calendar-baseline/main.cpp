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

// Mutual-availability calendar without any flow control: the unannotated
// baseline the instrumented port is measured against.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace {

std::map<std::string, bool> parse_availability(std::istream& in) {
  std::map<std::string, bool> cal;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("calendar line " + std::to_string(lineno) +
                               ": expected <day>:true|false");
    }
    std::string day = line.substr(0, colon);
    std::string flag = line.substr(colon + 1);
    if (!flag.empty() && flag.back() == '\r') flag.pop_back();
    bool value;
    if (flag == "true") {
      value = true;
    } else if (flag == "false") {
      value = false;
    } else {
      throw std::runtime_error("calendar line " + std::to_string(lineno) +
                               ": availability must be true or false");
    }
    if (!cal.emplace(day, value).second) {
      throw std::runtime_error("duplicate day: " + day);
    }
  }
  return cal;
}

int mutual_availability_count(const std::map<std::string, bool>& alice,
                              const std::map<std::string, bool>& bob) {
  for (const auto& entry : bob) {
    if (!alice.contains(entry.first)) {
      throw std::runtime_error("calendars disagree on day: " + entry.first);
    }
  }
  int count = 0;
  for (const auto& [day, alice_free] : alice) {
    auto it = bob.find(day);
    if (it == bob.end()) {
      throw std::runtime_error("calendars disagree on day: " + day);
    }
    if (alice_free && it->second) {
      count = count + 1;
    }
  }
  return count;
}

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
    if (!alice_in) throw std::runtime_error(std::string("cannot open ") +
                                            alice_path);
    if (!bob_in) throw std::runtime_error(std::string("cannot open ") +
                                          bob_path);
    auto alice = parse_availability(alice_in);
    auto bob = parse_availability(bob_in);
    std::printf("%d\n", mutual_availability_count(alice, bob));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "calendar: %s\n", e.what());
    return 1;
  }
  return 0;
}
