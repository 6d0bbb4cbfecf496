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

// Surface-syntax source: build through `ifcpp rewrite`.

#include "calendar.hpp"

namespace calendar {

int mutual_availability_count(const Availability<ifc::A>& alice,
                              const Availability<ifc::B>& bob) {
  for (const auto& entry : bob.days) {
    if (!alice.days.contains(entry.first)) {
      throw CalendarError("calendars disagree on day: " + entry.first);
    }
  }

  ifc::Labeled<int, ifc::AB> count = ifc::label_new<ifc::AB>(0);
  for (const auto& [day, alice_free] : alice.days) {
    auto it = bob.days.find(day);
    if (it == bob.days.end()) {
      throw CalendarError("calendars disagree on day: " + day);
    }
    const auto& bob_free = it->second;
    // The branch condition joins both calendars, so the whole comparison
    // runs under an AB program counter; only the final count is released.
    pc_block { (ifc::AB) {
      if (alice_free && bob_free) {
        count = count + 1;
      }
    }}
  }
  return ifc::declassify(count);
}

}  // namespace calendar
