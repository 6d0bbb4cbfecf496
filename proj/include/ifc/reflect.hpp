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

#ifndef IFC_REFLECT_HPP_
#define IFC_REFLECT_HPP_

#include <ifc/lattice.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Runtime mirror of a type-level lattice, for oracle tests and tooling.
// reflect_lattice<Ls...>() reads the FlowsTo and Join traits back into plain
// tables; the brute-force reference tables produced by the lattice oracle
// use the same LatticeTable shape so the two can be compared directly.
// Tables are immutable after construction and safe to share across threads.

namespace ifc {

struct LatticeTable {
  std::vector<std::string> levels;
  std::size_t bottom = 0;
  std::vector<std::vector<bool>> flows;        // flows[i][j]: Li flows to Lj
  std::vector<std::vector<std::size_t>> join;  // join[i][j]: index of Li ⊔ Lj

  std::size_t size() const { return levels.size(); }

  bool flows_to(std::size_t i, std::size_t j) const { return flows[i][j]; }

  std::size_t join_of(std::size_t i, std::size_t j) const {
    return join[i][j];
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] == name) return i;
    }
    throw std::out_of_range("no such level: " + name);
  }

  std::size_t flow_pair_count() const {
    std::size_t n = 0;
    for (const auto& row : flows) {
      for (bool f : row) n += f ? 1 : 0;
    }
    return n;
  }
};

namespace detail {

template <class T, class... Ls>
struct IndexOfLabel;

template <class T, class... Rest>
struct IndexOfLabel<T, T, Rest...> {
  static constexpr std::size_t value = 0;
};

template <class T, class First, class... Rest>
struct IndexOfLabel<T, First, Rest...> {
  static constexpr std::size_t value = 1 + IndexOfLabel<T, Rest...>::value;
};

}  // namespace detail

template <class... Ls>
LatticeTable reflect_lattice() {
  LatticeTable table;
  table.levels = {std::string(label_name<Ls>())...};

  auto add_flow_row = [&table]<class Li>() {
    table.flows.push_back(std::vector<bool>{bool(flows_to_v<Li, Ls>)...});
  };
  (add_flow_row.template operator()<Ls>(), ...);

  auto add_join_row = [&table]<class Li>() {
    table.join.push_back(std::vector<std::size_t>{
        detail::IndexOfLabel<join_t<Li, Ls>, Ls...>::value...});
  };
  (add_join_row.template operator()<Ls>(), ...);

  // The bottom is the unique level that flows to every level.
  for (std::size_t i = 0; i < table.size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < table.size(); ++j) {
      below_all = below_all && table.flows[i][j];
    }
    if (below_all) {
      table.bottom = i;
      break;
    }
  }
  return table;
}

}  // namespace ifc

#endif  // IFC_REFLECT_HPP_
