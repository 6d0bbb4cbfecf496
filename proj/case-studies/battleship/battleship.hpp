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

#ifndef CASE_STUDIES_BATTLESHIP_HPP_
#define CASE_STUDIES_BATTLESHIP_HPP_

#include <ifc/prelude.hpp>

#include <array>
#include <cstdint>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

// Two-player battleship. Each player's ship grid is confidential at that
// player's label; a guess answer (hit or miss) and the end-of-game check are
// the only releases, both deliberate declassifications. Guesses themselves
// are public moves. Placement randomness runs on plain data outside any
// sensitive branch, so no side-effect vetting is involved.

namespace battleship {

inline constexpr int kGridSize = 10;
inline constexpr std::array<int, 5> kShipSizes = {5, 4, 3, 3, 2};

using Grid = std::array<std::array<bool, kGridSize>, kGridSize>;

struct Placement {
  int row = 0;
  int col = 0;
  int size = 0;
  bool horizontal = true;
};

// Deterministic bounded draw on top of the fixed mt19937 stream.
inline std::uint32_t bounded(std::mt19937& rng, std::uint32_t n) {
  return static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(rng()) * n) >> 32);
}

template <class L>
class Player {
 public:
  explicit Player(std::uint32_t seed) : rng_(seed) {
    place_fleet();
    for (int r = 0; r < kGridSize; ++r) {
      for (int c = 0; c < kGridSize; ++c) {
        guess_pool_.emplace_back(r, c);
      }
    }
  }

  // Answers an opponent guess. Releasing hit/miss is the game's intentional
  // declassification; the coordinate itself is public.
  bool answer_guess(int row, int col) {
    incoming_[row][col] = true;
    return ifc::declassify(grid_[row][col].read());
  }

  // True once every occupied cell has been guessed: the second intentional
  // release, one bit per turn.
  bool fleet_destroyed() const {
    ifc::Labeled<bool, L> any_unhit = ifc::label_new<L>(false);
    for (int r = 0; r < kGridSize; ++r) {
      for (int c = 0; c < kGridSize; ++c) {
        if (!incoming_[r][c]) {
          any_unhit = any_unhit || grid_[r][c].read();
        }
      }
    }
    return !ifc::declassify(any_unhit);
  }

  // Uniform draw without repetition from this player's seeded stream.
  std::pair<int, int> next_guess() {
    std::uint32_t i =
        bounded(rng_, static_cast<std::uint32_t>(guess_pool_.size()));
    std::pair<int, int> guess = guess_pool_[i];
    guess_pool_[i] = guess_pool_.back();
    guess_pool_.pop_back();
    return guess;
  }

  const std::vector<Placement>& placements() const { return placements_; }

 private:
  void place_fleet() {
    Grid occupied{};  // plain scratch copy for the retry loop
    for (int size : kShipSizes) {
      Placement p = random_placement(occupied, size);
      placements_.push_back(p);
      for (int k = 0; k < p.size; ++k) {
        int r = p.row + (p.horizontal ? 0 : k);
        int c = p.col + (p.horizontal ? k : 0);
        occupied[r][c] = true;
        grid_[r][c] = ifc::label_new<L>(true);
      }
    }
  }

  // Draws placements until one fits without overlap.
  Placement random_placement(const Grid& occupied, int size) {
    for (;;) {
      Placement p;
      p.size = size;
      p.horizontal = bounded(rng_, 2) == 0;
      p.row = static_cast<int>(
          bounded(rng_, p.horizontal ? kGridSize : kGridSize - size + 1));
      p.col = static_cast<int>(
          bounded(rng_, p.horizontal ? kGridSize - size + 1 : kGridSize));
      bool clear = true;
      for (int k = 0; k < size; ++k) {
        int r = p.row + (p.horizontal ? 0 : k);
        int c = p.col + (p.horizontal ? k : 0);
        clear = clear && !occupied[r][c];
      }
      if (clear) return p;
    }
  }

  ifc::Labeled<Grid, L> grid_{};
  Grid incoming_{};  // opponent guesses: public information
  std::vector<Placement> placements_;
  std::vector<std::pair<int, int>> guess_pool_;
  std::mt19937 rng_;
};

struct GameResult {
  char winner = '?';
  int turns = 0;  // total guesses made by both players
};

// Plays a full game, writing the public transcript to `out`.
GameResult play(std::uint32_t seed_a, std::uint32_t seed_b, std::ostream& out);

}  // namespace battleship

#endif  // CASE_STUDIES_BATTLESHIP_HPP_
