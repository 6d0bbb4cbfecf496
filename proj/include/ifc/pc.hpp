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

#ifndef IFC_PC_HPP_
#define IFC_PC_HPP_

#include <ifc/labeled.hpp>
#include <ifc/lattice.hpp>

#include <type_traits>
#include <utility>

// Program-counter label tracking: the expansion targets of the `pc_block`
// surface form.
//
// A pc_block rewrite introduces a PcEvidence<L> witness for the block's
// annotated label. Each branch or loop condition goes through
// inspect_condition, and the witness for the branch body is rebuilt by
// join_labels as a fresh lexical binding, so the outer witness is shadowed
// for exactly the branch scope and restored for free on exit. Every
// assignment is rewritten to secure_assign, which checks the explicit flow
// (value label = target label) and the implicit flow (pc label flows to the
// target label) at compile time. Nothing here runs at runtime beyond the
// assignment itself.

namespace ifc {

namespace detail {
struct PcAccess;
}

// Witness that the current control context is at label L. Only the pc_block
// expansion can mint one; client code has no way to forge it.
template <class L>
class PcEvidence {
  static_assert(is_label_v<L>,
                "ifc: the pc label must be a registered label tag");

 public:
  using label_type = L;

  PcEvidence(const PcEvidence&) = default;
  PcEvidence& operator=(const PcEvidence&) = default;

 private:
  constexpr PcEvidence() = default;

  friend struct detail::PcAccess;
};

namespace detail {

struct PcAccess {
  template <class L>
  static constexpr PcEvidence<L> make() {
    return PcEvidence<L>{};
  }
};

template <class L>
constexpr PcEvidence<L> pc_enter() {
  static_assert(is_label_v<L>,
                "ifc: the pc_block label must be a registered label tag");
  return PcAccess::make<L>();
}

// A pc_block nested inside another must not claim a context below the one it
// lexically sits in.
template <class L, class Outer>
constexpr PcEvidence<L> pc_enter_nested(PcEvidence<Outer>) {
  static_assert(flows_to_v<Outer, L>,
                "ifc: implicit flow rejected: a nested pc_block's label must "
                "absorb the enclosing pc label (FlowsTo)");
  return PcAccess::make<L>();
}

// The branch decision plus, in the type, the condition's label.
template <class Lpc, class Lc>
struct InspectedCondition {
  using cond_label = Lc;
  bool taken;
};

template <class Lpc, class Tc, class Lc>
constexpr InspectedCondition<Lpc, Lc> inspect_condition(
    PcEvidence<Lpc>, const Labeled<Tc, Lc>& cond) {
  // Unwrapping here is sound: the pc is joined with Lc before the body runs.
  return {static_cast<bool>(PayloadAccess::ref(cond))};
}

template <class Lpc, class Ec, class Lc>
constexpr InspectedCondition<Lpc, Lc> inspect_condition(
    PcEvidence<Lpc> pc, const LabeledSlot<Ec, Lc>& cond) {
  return inspect_condition(pc, cond.read());
}

template <class Lpc>
constexpr InspectedCondition<Lpc, Public> inspect_condition(PcEvidence<Lpc>,
                                                            bool cond) {
  return {cond};
}

template <class L1, class Lpc, class L2>
constexpr PcEvidence<join_t<L1, L2>> join_labels(PcEvidence<L1>,
                                                 InspectedCondition<Lpc, L2>) {
  return PcAccess::make<join_t<L1, L2>>();
}

template <class L1, LabelTag L2>
constexpr PcEvidence<join_t<L1, L2>> join_labels(PcEvidence<L1>, L2) {
  return PcAccess::make<join_t<L1, L2>>();
}

// break / continue may not jump out of a region whose pc is above the pc of
// the jump target.
template <class L1, class L2>
constexpr void require_same_pc(PcEvidence<L1>, PcEvidence<L2>) {
  static_assert(std::is_same_v<L1, L2>,
                "ifc: implicit flow rejected: an early exit would leave a "
                "raised pc region");
}

// --- secure_assign -----------------------------------------------------------
//
// One overload per (target, value) shape. The checks:
//   explicit flow: the value's label equals the target's label exactly
//                  (upgrades go through relabel, releases through declassify)
//   implicit flow: the pc label flows to the target's label

template <class Lpc, class T, class Lt, class Tv, class Lv>
constexpr void secure_assign(PcEvidence<Lpc>, Labeled<T, Lt>& target,
                             Labeled<Tv, Lv> value) {
  static_assert(std::is_same_v<Lv, Lt>,
                "ifc: explicit flow rejected: the value's label must match "
                "the assignment target's label exactly (relabel first)");
  static_assert(flows_to_v<Lpc, Lt>,
                "ifc: implicit flow rejected: the pc label does not flow to "
                "the assignment target's label (FlowsTo)");
  PayloadAccess::ref(target) = PayloadAccess::take(std::move(value));
}

template <class Lpc, class T, class Lt, class E2, class L2>
constexpr void secure_assign(PcEvidence<Lpc> pc, Labeled<T, Lt>& target,
                             const LabeledSlot<E2, L2>& value) {
  secure_assign(pc, target, value.read());
}

template <class Lpc, class T, class Lt, class U>
  requires(!carries_label_v<std::remove_cvref_t<U>>)
constexpr void secure_assign(PcEvidence<Lpc>, Labeled<T, Lt>&, U&&) {
  static_assert(dependent_false_v<U>,
                "ifc: explicit flow rejected: cannot assign an unlabeled "
                "value to a labeled target (wrap it with label_new or "
                "relabel)");
}

template <class Lpc, class Es, class Ls, class Tv, class Lv>
constexpr void secure_assign(PcEvidence<Lpc>, const LabeledSlot<Es, Ls>& slot,
                             Labeled<Tv, Lv> value) {
  static_assert(flows_to_v<Lpc, Ls>,
                "ifc: implicit flow rejected: the pc label does not flow to "
                "the labeled container's label (FlowsTo)");
  slot = std::move(value);
}

template <class Lpc, class Es, class Ls, class E2, class L2>
constexpr void secure_assign(PcEvidence<Lpc> pc, const LabeledSlot<Es, Ls>& slot,
                             const LabeledSlot<E2, L2>& value) {
  secure_assign(pc, slot, value.read());
}

template <class Lpc, class Es, class Ls, class U>
  requires(!carries_label_v<std::remove_cvref_t<U>>)
constexpr void secure_assign(PcEvidence<Lpc>, const LabeledSlot<Es, Ls>&,
                             U&&) {
  static_assert(dependent_false_v<U>,
                "ifc: explicit flow rejected: cannot write an unlabeled "
                "value into a labeled container (wrap it with label_new)");
}

template <class Lpc, class T, class Tv, class Lv>
  requires(!carries_label_v<T>)
constexpr void secure_assign(PcEvidence<Lpc>, T&, Labeled<Tv, Lv>) {
  static_assert(dependent_false_v<Tv>,
                "ifc: explicit flow rejected: cannot assign a labeled value "
                "to an unlabeled (public) target (declassify first)");
}

template <class Lpc, class T, class E2, class L2>
  requires(!carries_label_v<T>)
constexpr void secure_assign(PcEvidence<Lpc>, T&, const LabeledSlot<E2, L2>&) {
  static_assert(dependent_false_v<E2>,
                "ifc: explicit flow rejected: cannot assign a labeled value "
                "to an unlabeled (public) target (declassify first)");
}

template <class Lpc, class T, class U>
  requires(!carries_label_v<T> && !carries_label_v<std::remove_cvref_t<U>>)
constexpr void secure_assign(PcEvidence<Lpc>, T& target, U&& value) {
  // An unlabeled target is Public data.
  static_assert(flows_to_v<Lpc, Public>,
                "ifc: implicit flow rejected: the pc label does not flow to "
                "Public, so an unlabeled target cannot be written here "
                "(FlowsTo)");
  target = std::forward<U>(value);
}

}  // namespace detail

}  // namespace ifc

#endif  // IFC_PC_HPP_
