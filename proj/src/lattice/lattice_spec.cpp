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

#include "lattice/lattice_spec.hpp"

#include <map>
#include <sstream>

namespace ifcpp {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

LatticeSpec parse_lattice_spec(const std::string& text) {
  LatticeSpec spec;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    const std::string& kind = words[0];
    auto fail = [&](const std::string& msg) {
      throw LatticeSpecError("lattice spec line " + std::to_string(lineno) +
                             ": " + msg);
    };
    if (kind == "level") {
      if (words.size() != 2) fail("expected: level <name>");
      spec.levels.push_back(words[1]);
    } else if (kind == "edge") {
      if (words.size() != 3) fail("expected: edge <lower> <upper>");
      spec.edges.emplace_back(words[1], words[2]);
    } else if (kind == "bottom") {
      if (words.size() != 2) fail("expected: bottom <name>");
      if (!spec.bottom.empty()) fail("duplicate bottom declaration");
      spec.bottom = words[1];
    } else {
      fail("unknown declaration '" + kind + "'");
    }
  }
  if (spec.bottom.empty()) {
    throw LatticeSpecError("lattice spec: missing mandatory bottom <name>");
  }
  return spec;
}

ifc::LatticeTable lattice_oracle(const LatticeSpec& spec) {
  const std::size_t n = spec.levels.size();
  if (n == 0) throw LatticeSpecError("lattice spec declares no levels");

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(spec.levels[i], i).second) {
      throw LatticeSpecError("duplicate level '" + spec.levels[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name, const char* where) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw LatticeSpecError(std::string(where) + " references unknown level '" +
                             name + "'");
    }
    return it->second;
  };

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [lo, hi] : spec.edges) {
    std::size_t a = lookup(lo, "edge");
    std::size_t b = lookup(hi, "edge");
    if (a == b) {
      throw LatticeSpecError("self edge on level '" + lo + "'");
    }
    adj[a][b] = true;
  }
  std::size_t bottom = lookup(spec.bottom, "bottom");

  // Reflexive-transitive closure by reachability.
  std::vector<std::vector<bool>> flows(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    flows[s][s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (adj[u][v] && !flows[s][v]) {
          flows[s][v] = true;
          stack.push_back(v);
        }
      }
    }
  }

  // Antisymmetry: any two-way flow between distinct levels is a cycle.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (flows[i][j] && flows[j][i]) {
        throw LatticeSpecError("cycle between levels '" + spec.levels[i] +
                               "' and '" + spec.levels[j] + "'");
      }
    }
  }

  // The declared bottom must reach every level.
  for (std::size_t j = 0; j < n; ++j) {
    if (!flows[bottom][j]) {
      throw LatticeSpecError("no unique bottom: declared bottom '" +
                             spec.bottom + "' does not flow to '" +
                             spec.levels[j] + "'");
    }
  }

  // Pairwise joins: enumerate common upper bounds, take the minimum.
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> ubs;
      for (std::size_t k = 0; k < n; ++k) {
        if (flows[i][k] && flows[j][k]) ubs.push_back(k);
      }
      std::size_t least = n;
      for (std::size_t cand : ubs) {
        bool below_all = true;
        for (std::size_t other : ubs) {
          below_all = below_all && flows[cand][other];
        }
        if (below_all) {
          least = cand;
          break;
        }
      }
      if (least == n) {
        throw LatticeSpecError("levels '" + spec.levels[i] + "' and '" +
                               spec.levels[j] +
                               "' have no least upper bound");
      }
      join[i][j] = least;
    }
  }

  ifc::LatticeTable table;
  table.levels = spec.levels;
  table.bottom = bottom;
  table.flows = std::move(flows);
  table.join = std::move(join);
  return table;
}

std::string generate_lattice_header(const LatticeSpec& spec,
                                    const std::string& ns) {
  ifc::LatticeTable table = lattice_oracle(spec);
  const std::size_t n = table.size();
  const std::size_t bottom = table.bottom;

  auto qualified = [&](std::size_t i) {
    return ns.empty() ? table.levels[i] : ns + "::" + table.levels[i];
  };

  std::ostringstream out;
  out << "// Generated by `ifcpp lattice`; do not edit.\n"
      << "#pragma once\n\n"
      << "#include <ifc/lattice.hpp>\n"
      << "#include <ifc/reflect.hpp>\n\n";

  if (!ns.empty()) out << "namespace " << ns << " {\n\n";

  out << "// Bottom of this lattice; unlabeled data lives here.\n"
      << "using " << table.levels[bottom] << " = ifc::Public;\n\n";
  for (std::size_t i = 0; i < n; ++i) {
    if (i == bottom) continue;
    out << "struct " << table.levels[i] << " {};\n";
  }

  out << "\ninline ifc::LatticeTable lattice_table() {\n"
      << "  return ifc::reflect_lattice<";
  for (std::size_t i = 0; i < n; ++i) {
    out << (i ? ", " : "") << table.levels[i];
  }
  out << ">();\n}\n";

  if (!ns.empty()) out << "\n}  // namespace " << ns << "\n";
  out << "\n";

  for (std::size_t i = 0; i < n; ++i) {
    if (i == bottom) continue;
    out << "IFC_REGISTER_LABEL(" << qualified(i) << ", \"" << table.levels[i]
        << "\");\n";
  }
  out << "\n";

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && table.flows[i][j]) {
        out << "IFC_FLOWS_TO(" << qualified(i) << ", " << qualified(j)
            << ");\n";
      }
    }
  }
  out << "\n";

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == bottom && j == bottom) continue;  // ships with ifc::Public
      out << "IFC_JOIN(" << qualified(i) << ", " << qualified(j) << ", "
          << qualified(table.join[i][j]) << ");\n";
    }
  }
  return out.str();
}

}  // namespace ifcpp
