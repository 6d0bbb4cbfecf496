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

#ifndef IFC_LABELED_HPP_
#define IFC_LABELED_HPP_

#include <ifc/lattice.hpp>

#include <type_traits>
#include <utility>

// Labeled<T, L>: a value of type T classified at security level L.
//
// The label exists only in the type; the wrapper stores exactly one T and
// nothing else, so a labeled value has the same size and layout cost as the
// raw payload. The payload is private and reachable only through the
// operations in this library: construction, relabel (checked upgrade),
// declassify (deliberate release), the join-propagating operators below,
// and the call-lifting combinators in <ifc/chain.hpp>.

namespace ifc {

// Payload stand-in for "no value": what a lifted void call produces.
struct Unit {
  friend constexpr bool operator==(Unit, Unit) { return true; }
};

template <class T, class L>
class Labeled;

template <class T>
struct IsLabeledValue : std::false_type {};

template <class T, class L>
struct IsLabeledValue<Labeled<T, L>> : std::true_type {};

template <class T>
inline constexpr bool is_labeled_v = IsLabeledValue<T>::value;

template <class Elem, class L>
class LabeledSlot;

template <class T>
struct IsLabeledSlot : std::false_type {};

template <class Elem, class L>
struct IsLabeledSlot<LabeledSlot<Elem, L>> : std::true_type {};

template <class T>
inline constexpr bool is_slot_v = IsLabeledSlot<T>::value;

// Anything that already carries a label: a labeled value or a slot view.
template <class T>
inline constexpr bool carries_label_v = is_labeled_v<T> || is_slot_v<T>;

namespace detail {

template <class...>
inline constexpr bool dependent_false_v = false;

// Single gatekeeper for payload access. Everything in the library that needs
// the raw value goes through here; nothing outside the library is befriended.
struct PayloadAccess {
  template <class T, class L>
  static constexpr T& ref(Labeled<T, L>& x) {
    return x.value_;
  }
  template <class T, class L>
  static constexpr const T& ref(const Labeled<T, L>& x) {
    return x.value_;
  }
  template <class T, class L>
  static constexpr T&& take(Labeled<T, L>&& x) {
    return std::move(x.value_);
  }
  template <class Elem, class L>
  static constexpr auto make_slot(Elem* p);
};

}  // namespace detail

template <class T, class L>
class Labeled {
  static_assert(is_label_v<L>,
                "ifc: the second parameter of Labeled must be a registered "
                "security label tag");
  static_assert(!is_labeled_v<T>,
                "ifc: nesting Labeled inside Labeled is not supported; join "
                "the labels instead");

 public:
  using value_type = T;
  using label_type = L;

  constexpr explicit Labeled(T value) : value_(std::move(value)) {}

  constexpr Labeled()
    requires std::is_default_constructible_v<T>
      : value_() {}

  // Copying and moving mirror the payload; the label travels with the type.
  Labeled(const Labeled&) = default;
  Labeled(Labeled&&) = default;

  // Assignment is defined only between identically labeled values. A
  // cross-label assignment is a type mismatch; upgrade with relabel or
  // release with declassify.
  Labeled& operator=(const Labeled&) = default;
  Labeled& operator=(Labeled&&) = default;

  // Label-preserving projection into an indexable payload. Reading the slot
  // yields Labeled<Elem, L>; writing it demands a value labeled exactly L.
  template <class I>
    requires(!is_labeled_v<std::decay_t<I>>) &&
            requires(T& c, const I& i) { c[i]; }
  constexpr auto operator[](const I& i) {
    using Elem = std::remove_reference_t<decltype(value_[i])>;
    return detail::PayloadAccess::make_slot<Elem, L>(&value_[i]);
  }

  template <class I>
    requires(!is_labeled_v<std::decay_t<I>>) &&
            requires(const T& c, const I& i) { c[i]; }
  constexpr auto operator[](const I& i) const {
    using Elem = std::remove_reference_t<decltype(value_[i])>;
    return detail::PayloadAccess::make_slot<const Elem, L>(&value_[i]);
  }

 private:
  T value_;

  friend struct detail::PayloadAccess;
};

// --- Construction -----------------------------------------------------------

template <class L, class T>
constexpr Labeled<std::decay_t<T>, L> label_new(T&& value) {
  static_assert(is_label_v<L>, "ifc: label_new requires a registered label tag");
  return Labeled<std::decay_t<T>, L>(std::forward<T>(value));
}

template <class T, LabelTag L>
constexpr Labeled<std::decay_t<T>, L> label_new(T&& value, L) {
  return label_new<L>(std::forward<T>(value));
}

template <class T>
constexpr Labeled<std::decay_t<T>, Public> lift_public(T&& value) {
  return Labeled<std::decay_t<T>, Public>(std::forward<T>(value));
}

// --- Relabel (checked upgrade) ----------------------------------------------

template <class Target, class T, class Src>
constexpr Labeled<T, Target> relabel(Labeled<T, Src> x) {
  static_assert(is_label_v<Target>,
                "ifc: relabel target must be a registered label tag");
  static_assert(flows_to_v<Src, Target>,
                "ifc: relabel rejected: the source label does not flow to "
                "the target label (FlowsTo)");
  return Labeled<T, Target>(detail::PayloadAccess::take(std::move(x)));
}

template <class Target, class T>
  requires(!is_labeled_v<std::decay_t<T>>)
constexpr Labeled<std::decay_t<T>, Target> relabel(T&& value) {
  // Unlabeled data is Public, and Public flows everywhere.
  static_assert(is_label_v<Target>,
                "ifc: relabel target must be a registered label tag");
  return Labeled<std::decay_t<T>, Target>(std::forward<T>(value));
}

template <class T, class Src, LabelTag Target>
constexpr Labeled<T, Target> relabel(Labeled<T, Src> x, Target) {
  return relabel<Target>(std::move(x));
}

template <class T, LabelTag Target>
  requires(!is_labeled_v<std::decay_t<T>>)
constexpr Labeled<std::decay_t<T>, Target> relabel(T&& value, Target) {
  return relabel<Target>(std::forward<T>(value));
}

// --- Declassify (deliberate release) ----------------------------------------

// Unchecked by design: the caller takes responsibility for the release, and
// everything derived from the result is Public from here on.
template <class T, class L>
constexpr T declassify(Labeled<T, L>&& x) {
  return detail::PayloadAccess::take(std::move(x));
}

template <class T, class L>
constexpr T declassify(const Labeled<T, L>& x) {
  return detail::PayloadAccess::ref(x);
}

// --- Join-propagating operators ---------------------------------------------

// Each operator applies the payload operation and labels the result with the
// join of the operand labels; an unlabeled operand counts as Public. Payload
// semantics (overflow, division by zero, ...) are exactly the host's.
// Note that lifted && and || evaluate both payloads; there is no
// short-circuiting through a labeled operand.
#define IFC_LIFTED_BINARY_OP(op)                                               \
  template <class T1, class L1, class T2, class L2>                            \
  constexpr auto operator op(const Labeled<T1, L1>& a,                         \
                             const Labeled<T2, L2>& b) {                       \
    using R = std::decay_t<decltype(detail::PayloadAccess::ref(a)              \
                                        op detail::PayloadAccess::ref(b))>;    \
    return Labeled<R, join_t<L1, L2>>(detail::PayloadAccess::ref(a)            \
                                          op detail::PayloadAccess::ref(b));   \
  }                                                                            \
  template <class T1, class L1, class U>                                       \
    requires(!carries_label_v<std::decay_t<U>>)                                 \
  constexpr auto operator op(const Labeled<T1, L1>& a, const U& b) {           \
    using R = std::decay_t<decltype(detail::PayloadAccess::ref(a) op b)>;      \
    return Labeled<R, L1>(detail::PayloadAccess::ref(a) op b);                 \
  }                                                                            \
  template <class U, class T2, class L2>                                       \
    requires(!carries_label_v<std::decay_t<U>>)                                 \
  constexpr auto operator op(const U& a, const Labeled<T2, L2>& b) {           \
    using R = std::decay_t<decltype(a op detail::PayloadAccess::ref(b))>;      \
    return Labeled<R, L2>(a op detail::PayloadAccess::ref(b));                 \
  }

IFC_LIFTED_BINARY_OP(+)
IFC_LIFTED_BINARY_OP(-)
IFC_LIFTED_BINARY_OP(*)
IFC_LIFTED_BINARY_OP(/)
IFC_LIFTED_BINARY_OP(==)
IFC_LIFTED_BINARY_OP(!=)
IFC_LIFTED_BINARY_OP(<)
IFC_LIFTED_BINARY_OP(<=)
IFC_LIFTED_BINARY_OP(>)
IFC_LIFTED_BINARY_OP(>=)
IFC_LIFTED_BINARY_OP(&&)
IFC_LIFTED_BINARY_OP(||)

#undef IFC_LIFTED_BINARY_OP

// --- Label-preserving element slots -----------------------------------------

// A view of one element of a labeled container, produced by Labeled's
// operator[]. The slot carries the container's label: reads come back as
// Labeled<Elem, L>, and writes require a value labeled exactly L.
template <class Elem, class L>
class LabeledSlot {
 public:
  using element_type = Elem;
  using label_type = L;

  constexpr Labeled<std::remove_cv_t<Elem>, L> read() const {
    return Labeled<std::remove_cv_t<Elem>, L>(*ptr_);
  }

  constexpr operator Labeled<std::remove_cv_t<Elem>, L>() const {
    return read();
  }

  template <class I>
    requires(!is_labeled_v<std::decay_t<I>>) &&
            requires(Elem& e, const I& i) { e[i]; }
  constexpr auto operator[](const I& i) const {
    using Sub = std::remove_reference_t<decltype((*ptr_)[i])>;
    return LabeledSlot<Sub, L>(&(*ptr_)[i]);
  }

  template <class T2, class L2>
  constexpr const LabeledSlot& operator=(Labeled<T2, L2> v) const {
    static_assert(!std::is_const_v<Elem>,
                  "ifc: cannot write through a read-only labeled view");
    static_assert(std::is_same_v<L2, L>,
                  "ifc: explicit flow rejected: an indexed write must carry "
                  "exactly the container's label (relabel first)");
    *ptr_ = detail::PayloadAccess::take(std::move(v));
    return *this;
  }

  template <class E2, class L2>
  constexpr const LabeledSlot& operator=(const LabeledSlot<E2, L2>& v) const {
    return *this = v.read();
  }

  template <class U>
    requires(!carries_label_v<std::decay_t<U>>)
  constexpr const LabeledSlot& operator=(U&&) const {
    static_assert(detail::dependent_false_v<U>,
                  "ifc: explicit flow rejected: cannot write an unlabeled "
                  "value into a labeled container (wrap it with label_new)");
    return *this;
  }

 private:
  constexpr explicit LabeledSlot(Elem* p) : ptr_(p) {}

  Elem* ptr_;

  friend struct detail::PayloadAccess;
  template <class, class>
  friend class LabeledSlot;
};

namespace detail {
template <class Elem, class L>
constexpr auto PayloadAccess::make_slot(Elem* p) {
  return LabeledSlot<Elem, L>(p);
}
}  // namespace detail

}  // namespace ifc

#endif  // IFC_LABELED_HPP_
