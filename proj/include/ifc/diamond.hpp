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

#ifndef IFC_DIAMOND_HPP_
#define IFC_DIAMOND_HPP_

#include <ifc/lattice.hpp>

// The default four-level diamond lattice:
//
//          AB
//         /  \
//        A    B
//         \  /
//        Public
//
// Public is the shared bottom from <ifc/lattice.hpp>; A and B are two
// incomparable principals; AB is their join.

namespace ifc {
struct A {};
struct B {};
struct AB {};
}  // namespace ifc

IFC_REGISTER_LABEL(ifc::A, "A");
IFC_REGISTER_LABEL(ifc::B, "B");
IFC_REGISTER_LABEL(ifc::AB, "AB");

// Flow order: the reflexive pairs come from the generic FlowsTo<L, L>.
IFC_FLOWS_TO(ifc::Public, ifc::A);
IFC_FLOWS_TO(ifc::Public, ifc::B);
IFC_FLOWS_TO(ifc::Public, ifc::AB);
IFC_FLOWS_TO(ifc::A, ifc::AB);
IFC_FLOWS_TO(ifc::B, ifc::AB);

// Full pairwise join table (Join<Public, Public> lives with the bottom tag).
IFC_JOIN(ifc::Public, ifc::A, ifc::A);
IFC_JOIN(ifc::Public, ifc::B, ifc::B);
IFC_JOIN(ifc::Public, ifc::AB, ifc::AB);
IFC_JOIN(ifc::A, ifc::Public, ifc::A);
IFC_JOIN(ifc::A, ifc::A, ifc::A);
IFC_JOIN(ifc::A, ifc::B, ifc::AB);
IFC_JOIN(ifc::A, ifc::AB, ifc::AB);
IFC_JOIN(ifc::B, ifc::Public, ifc::B);
IFC_JOIN(ifc::B, ifc::A, ifc::AB);
IFC_JOIN(ifc::B, ifc::B, ifc::B);
IFC_JOIN(ifc::B, ifc::AB, ifc::AB);
IFC_JOIN(ifc::AB, ifc::Public, ifc::AB);
IFC_JOIN(ifc::AB, ifc::A, ifc::AB);
IFC_JOIN(ifc::AB, ifc::B, ifc::AB);
IFC_JOIN(ifc::AB, ifc::AB, ifc::AB);

#endif  // IFC_DIAMOND_HPP_
