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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ifc/diamond.hpp>
#include <ifc/reflect.hpp>

#include "lattice/lattice_spec.hpp"

using ifcpp::LatticeSpec;
using ifcpp::LatticeSpecError;
using ifcpp::lattice_oracle;
using ifcpp::parse_lattice_spec;

namespace {

const char* kDiamondSpec = R"(
# the shipped four-level diamond
level Public
level A
level B
level AB
edge Public A
edge Public B
edge A AB
edge B AB
bottom Public
)";

// Type-level facts, checked against the brute-force closure below.
static_assert(ifc::flows_to_v<ifc::Public, ifc::A>);
static_assert(ifc::flows_to_v<ifc::A, ifc::A>);
static_assert(!ifc::flows_to_v<ifc::A, ifc::B>);
static_assert(!ifc::flows_to_v<ifc::AB, ifc::A>);
static_assert(std::is_same_v<ifc::join_t<ifc::A, ifc::B>, ifc::AB>);
static_assert(std::is_same_v<ifc::join_t<ifc::A, ifc::A>, ifc::A>);
static_assert(std::is_same_v<ifc::join_t<ifc::Public, ifc::B>, ifc::B>);
static_assert(ifc::flows_to(ifc::Public{}, ifc::AB{}));
static_assert(std::is_same_v<decltype(ifc::join(ifc::B{}, ifc::A{})), ifc::AB>);

// Type-level join commutativity and associativity over all diamond triples.
template <class X, class Y, class Z>
struct JoinAlgebra {
  static_assert(std::is_same_v<ifc::join_t<X, Y>, ifc::join_t<Y, X>>);
  static_assert(std::is_same_v<ifc::join_t<ifc::join_t<X, Y>, Z>,
                               ifc::join_t<X, ifc::join_t<Y, Z>>>);
  static constexpr bool ok = true;
};

template <class... Ls>
struct AlgebraEnum {
  template <class X, class Y>
  static constexpr bool third() {
    return (JoinAlgebra<X, Y, Ls>::ok && ...);
  }
  template <class X>
  static constexpr bool second() {
    return (third<X, Ls>() && ...);
  }
  static constexpr bool all() { return (second<Ls>() && ...); }
};

static_assert(AlgebraEnum<ifc::Public, ifc::A, ifc::B, ifc::AB>::all());

}  // namespace

TEST_CASE("diamond type-level tables equal the brute-force oracle") {
  auto reference = lattice_oracle(parse_lattice_spec(kDiamondSpec));
  auto reflected = ifc::reflect_lattice<ifc::Public, ifc::A, ifc::B, ifc::AB>();

  REQUIRE(reference.levels == reflected.levels);
  CHECK(reference.bottom == reflected.bottom);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CAPTURE(i, j);
      CHECK(reference.flows_to(i, j) == reflected.flows_to(i, j));
      CHECK(reference.join_of(i, j) == reflected.join_of(i, j));
    }
  }
  CHECK(reflected.flow_pair_count() == 9);
}

TEST_CASE("oracle sizes: diamond has 4 tags, 9 flow pairs, 16 join entries") {
  auto table = lattice_oracle(parse_lattice_spec(kDiamondSpec));
  CHECK(table.size() == 4);
  CHECK(table.flow_pair_count() == 9);
  std::size_t join_entries = 0;
  for (const auto& row : table.join) join_entries += row.size();
  CHECK(join_entries == 16);
  CHECK(table.join_of(table.index_of("AB"), table.index_of("B")) ==
        table.index_of("AB"));
}

TEST_CASE("oracle join is bottom-identity, commutative, associative") {
  auto t = lattice_oracle(parse_lattice_spec(kDiamondSpec));
  for (std::size_t x = 0; x < t.size(); ++x) {
    CHECK(t.join_of(t.bottom, x) == x);
    CHECK(t.flows_to(x, x));
    for (std::size_t y = 0; y < t.size(); ++y) {
      CHECK(t.join_of(x, y) == t.join_of(y, x));
      if (x != y) CHECK(!(t.flows_to(x, y) && t.flows_to(y, x)));
      for (std::size_t z = 0; z < t.size(); ++z) {
        CHECK(t.join_of(t.join_of(x, y), z) == t.join_of(x, t.join_of(y, z)));
      }
    }
  }
}

TEST_CASE("two-level spec: 2 tags, 3 flow pairs") {
  auto table = lattice_oracle(
      parse_lattice_spec("level Public\nlevel Secret\nedge Public Secret\n"
                         "bottom Public\n"));
  CHECK(table.size() == 2);
  CHECK(table.flow_pair_count() == 3);
  CHECK(table.join_of(0, 1) == table.index_of("Secret"));
}

TEST_CASE("spec without a flowing bottom is rejected naming the level") {
  LatticeSpec spec;
  spec.levels = {"A", "B", "C", "D"};
  spec.edges = {{"A", "C"}, {"B", "C"}, {"A", "D"}, {"B", "D"}};
  spec.bottom = "A";
  CHECK_THROWS_WITH_AS(lattice_oracle(spec),
                       doctest::Contains("does not flow to 'B'"),
                       LatticeSpecError);
}

TEST_CASE("cycles are rejected naming the pair") {
  LatticeSpec spec;
  spec.levels = {"P", "X", "Y"};
  spec.edges = {{"P", "X"}, {"X", "Y"}, {"Y", "X"}};
  spec.bottom = "P";
  CHECK_THROWS_WITH_AS(lattice_oracle(spec), doctest::Contains("cycle"),
                       LatticeSpecError);
}

TEST_CASE("pairs without a least upper bound are rejected") {
  LatticeSpec spec;
  spec.levels = {"P", "X", "Y"};
  spec.edges = {{"P", "X"}, {"P", "Y"}};
  spec.bottom = "P";
  CHECK_THROWS_WITH_AS(lattice_oracle(spec),
                       doctest::Contains("no least upper bound"),
                       LatticeSpecError);
}

TEST_CASE("spec parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_lattice_spec("level X\nedge X\nbottom X\n"),
                       doctest::Contains("line 2"), LatticeSpecError);
  CHECK_THROWS_WITH_AS(parse_lattice_spec("level X\n"),
                       doctest::Contains("missing mandatory bottom"),
                       LatticeSpecError);
  CHECK_THROWS_AS(lattice_oracle(parse_lattice_spec(
                      "level X\nlevel X\nbottom X\n")),
                  LatticeSpecError);
  CHECK_THROWS_WITH_AS(lattice_oracle(parse_lattice_spec(
                           "level X\nedge X Zap\nbottom X\n")),
                       doctest::Contains("Zap"), LatticeSpecError);
}

TEST_CASE("generated header encodes the closure and aliases the bottom") {
  auto spec = parse_lattice_spec(
      "level Low\nlevel Mid\nlevel High\nedge Low Mid\nedge Mid High\n"
      "bottom Low\n");
  std::string header = ifcpp::generate_lattice_header(spec, "duty");
  CHECK(header.find("using Low = ifc::Public;") != std::string::npos);
  CHECK(header.find("struct Mid {};") != std::string::npos);
  CHECK(header.find("IFC_FLOWS_TO(duty::Low, duty::High);") !=
        std::string::npos);  // transitive pair listed explicitly
  CHECK(header.find("IFC_JOIN(duty::Mid, duty::High, duty::High);") !=
        std::string::npos);
  // The bottom-bottom join ships with the core header, not here.
  CHECK(header.find("IFC_JOIN(duty::Low, duty::Low") == std::string::npos);
}
