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

#ifndef CASE_STUDIES_CALENDAR_HPP_
#define CASE_STUDIES_CALENDAR_HPP_

#include <ifc/prelude.hpp>

#include <istream>
#include <map>
#include <stdexcept>
#include <string>

// Two-party mutual availability. Each party's calendar is confidential at
// that party's label; the published result is only the count of mutually
// free days.

namespace calendar {

// Day name -> availability bit at the owner's label.
template <class P>
struct Availability {
  std::map<std::string, ifc::Labeled<bool, P>> days;
};

class CalendarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input format: one `<day>:true|false` line per day. Blank lines ignored.
template <class P>
Availability<P> parse_availability(std::istream& in) {
  Availability<P> cal;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw CalendarError("calendar line " + std::to_string(lineno) +
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
      throw CalendarError("calendar line " + std::to_string(lineno) +
                          ": availability must be true or false");
    }
    if (!cal.days.emplace(day, ifc::label_new<P>(value)).second) {
      throw CalendarError("duplicate day: " + day);
    }
  }
  return cal;
}

// Counts the days on which both parties are free and releases that count.
// Both calendars must cover the same day set; a missing day is reported by
// name. Defined in calendar_core.ifc.cpp.
int mutual_availability_count(const Availability<ifc::A>& alice,
                              const Availability<ifc::B>& bob);

}  // namespace calendar

#endif  // CASE_STUDIES_CALENDAR_HPP_
