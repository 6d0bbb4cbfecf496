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

#include "battleship.hpp"

namespace battleship {

GameResult play(std::uint32_t seed_a, std::uint32_t seed_b,
                std::ostream& out) {
  Player<ifc::A> player_a(seed_a);
  Player<ifc::B> player_b(seed_b);

  GameResult result;
  for (;;) {
    // A moves first.
    auto [ar, ac] = player_a.next_guess();
    ++result.turns;
    bool a_hit = player_b.answer_guess(ar, ac);
    out << "A guesses (" << ar << "," << ac << "): "
        << (a_hit ? "hit" : "miss") << "\n";
    if (player_b.fleet_destroyed()) {
      out << "B's fleet is destroyed. A wins after " << result.turns
          << " turns.\n";
      result.winner = 'A';
      return result;
    }

    auto [br, bc] = player_b.next_guess();
    ++result.turns;
    bool b_hit = player_a.answer_guess(br, bc);
    out << "B guesses (" << br << "," << bc << "): "
        << (b_hit ? "hit" : "miss") << "\n";
    if (player_a.fleet_destroyed()) {
      out << "A's fleet is destroyed. B wins after " << result.turns
          << " turns.\n";
      result.winner = 'B';
      return result;
    }
  }
}

}  // namespace battleship
