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

#ifndef IFC_LATTICE_HPP_
#define IFC_LATTICE_HPP_

#include <cstddef>
#include <type_traits>

// Type-level encoding of a security lattice.
//
// Every security level is a distinct, stateless tag type. The partial order
// is the FlowsTo trait: FlowsTo<L1, L2>::value holds iff data at L1 may flow
// to L2. The join (least upper bound) is the Join trait, whose associated
// type Out names the resulting level. All three are resolved entirely at
// compile time; the runtime mirror in <ifc/reflect.hpp> exists for oracle
// tests and tooling only.
//
// Lattices are closed-world: each level ships with its full set of FlowsTo
// and Join entries, either hand-written (see <ifc/diamond.hpp>) or emitted
// by the `ifcpp lattice` generator from a lattice spec file.

namespace ifc {

// Registration trait: a type is a security label only if declared as one.
template <class L>
struct IsLabel : std::false_type {};

template <class L>
inline constexpr bool is_label_v = IsLabel<L>::value;

template <class L>
concept LabelTag = is_label_v<L>;

// User-facing level name, used verbatim in diagnostics and reflection.
template <class L>
struct LabelName;

template <class L>
constexpr const char* label_name() {
  return LabelName<L>::value;
}

// FlowsTo<L1, L2> holds iff L1 is allowed to flow to L2.
// Reflexivity is generic; every other pair of the closure is declared
// explicitly by the lattice definition.
template <class L1, class L2>
struct FlowsTo : std::false_type {};

template <class L>
struct FlowsTo<L, L> : std::true_type {};

template <class L1, class L2>
inline constexpr bool flows_to_v = FlowsTo<L1, L2>::value;

// Join<L1, L2>::Out is the least upper bound of the two levels. The primary
// template is left undefined: asking for the join of levels from different
// lattices (or unregistered tags) is a compile-time error at the use site.
template <class L1, class L2>
struct Join;

template <class L1, class L2>
using join_t = typename Join<L1, L2>::Out;

// The distinguished bottom level. Unlabeled host data is treated as Public,
// and every generated lattice aliases its declared bottom to this tag.
struct Public {};

template <>
struct IsLabel<Public> : std::true_type {};
template <>
struct LabelName<Public> {
  static constexpr const char* value = "Public";
};
template <>
struct Join<Public, Public> {
  using Out = Public;
};

// Value-level mirrors of the relations, usable with stateless tag instances:
// flows_to(A{}, AB{}), join(A{}, B{}).
template <LabelTag L1, LabelTag L2>
constexpr bool flows_to(L1, L2) {
  return flows_to_v<L1, L2>;
}

template <LabelTag L1, LabelTag L2>
constexpr auto join(L1, L2) {
  return join_t<L1, L2>{};
}

}  // namespace ifc

// Declaration helpers shared by the hand-written diamond lattice and the
// headers emitted by `ifcpp lattice`. Each expands to an explicit trait
// specialization; invoke at global scope.
#define IFC_REGISTER_LABEL(Tag, Name)              \
  template <>                                      \
  struct ifc::IsLabel<Tag> : std::true_type {};    \
  template <>                                      \
  struct ifc::LabelName<Tag> {                     \
    static constexpr const char* value = Name;     \
  }

#define IFC_FLOWS_TO(Lower, Upper) \
  template <>                      \
  struct ifc::FlowsTo<Lower, Upper> : std::true_type {}

#define IFC_JOIN(Left, Right, Result) \
  template <>                         \
  struct ifc::Join<Left, Right> {     \
    using Out = Result;               \
  }

#endif  // IFC_LATTICE_HPP_
