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

#ifndef IFC_CHAIN_HPP_
#define IFC_CHAIN_HPP_

#include <ifc/labeled.hpp>
#include <ifc/lattice.hpp>

#include <optional>
#include <type_traits>
#include <utility>

// Call-lifting combinators: the expansion targets of the `fcall` and `mcall`
// surface forms (see the ifcpp rewriter), usable directly as well.
//
//   chain(x, k)   exposes x's payload to the continuation k and labels k's
//                 result with the join of x's label and the result's label.
//                 The raw payload is visible only inside k.
//   chain_mut     like chain but grants mutable access; sound only when the
//                 mutated value's label already covers everything the call
//                 could write into it, so the label must equal the join of
//                 the remaining argument labels.
//
// An fcall over f(a, b) nests one chain per argument with the innermost call
// wrapping f's result at Public, so the final label is the join of all
// argument labels. An mcall evaluates a whole method chain against the
// receiver's payload and wraps only the final result, at exactly the
// receiver's label; intermediate values are never individually labeled.

namespace ifc {

namespace detail {

template <class R>
struct IsOptionalLabeled : std::false_type {};

template <class T, class L>
struct IsOptionalLabeled<std::optional<Labeled<T, L>>> : std::true_type {};

template <class R>
inline constexpr bool is_optional_labeled_v =
    IsOptionalLabeled<std::remove_cvref_t<R>>::value;

}  // namespace detail

template <class T, class L, class K>
constexpr auto chain(const Labeled<T, L>& x, K&& k) {
  using R = std::remove_cvref_t<decltype(k(detail::PayloadAccess::ref(x)))>;
  if constexpr (is_labeled_v<R>) {
    using Out = Labeled<typename R::value_type, join_t<L, typename R::label_type>>;
    auto r = k(detail::PayloadAccess::ref(x));
    return Out(detail::PayloadAccess::take(std::move(r)));
  } else if constexpr (detail::is_optional_labeled_v<R>) {
    // Fallible continuation: failure propagates outside the label.
    using Inner = typename R::value_type;
    using Out = Labeled<typename Inner::value_type,
                        join_t<L, typename Inner::label_type>>;
    auto r = k(detail::PayloadAccess::ref(x));
    if (!r.has_value()) return std::optional<Out>{};
    return std::optional<Out>{Out(detail::PayloadAccess::take(std::move(*r)))};
  } else {
    static_assert(detail::dependent_false_v<K>,
                  "ifc: a chain continuation must return a labeled value");
  }
}

template <class E, class L, class K>
constexpr auto chain(const LabeledSlot<E, L>& slot, K&& k) {
  return chain(slot.read(), std::forward<K>(k));
}

// Unlabeled operands count as Public, and join(Public, l) = l, so the
// continuation's labeling passes through untouched.
template <class V, class K>
  requires(!carries_label_v<std::remove_cvref_t<V>>)
constexpr auto chain(V&& v, K&& k) {
  using R = std::remove_cvref_t<decltype(k(std::forward<V>(v)))>;
  static_assert(is_labeled_v<R> || detail::is_optional_labeled_v<R>,
                "ifc: a chain continuation must return a labeled value");
  return k(std::forward<V>(v));
}

template <class T, class L, class K>
constexpr auto chain_mut(Labeled<T, L>& x, K&& k) {
  using R = std::remove_cvref_t<decltype(k(detail::PayloadAccess::ref(x)))>;
  if constexpr (is_labeled_v<R>) {
    static_assert(std::is_same_v<typename R::label_type, L>,
                  "ifc: a mutable-reference argument's label must equal the "
                  "join of the other argument labels");
    return k(detail::PayloadAccess::ref(x));
  } else if constexpr (detail::is_optional_labeled_v<R>) {
    static_assert(
        std::is_same_v<typename R::value_type::label_type, L>,
        "ifc: a mutable-reference argument's label must equal the "
        "join of the other argument labels");
    return k(detail::PayloadAccess::ref(x));
  } else {
    static_assert(detail::dependent_false_v<K>,
                  "ifc: a chain continuation must return a labeled value");
  }
}

template <class V, class K>
  requires(!carries_label_v<std::remove_cvref_t<V>>)
constexpr auto chain_mut(V& v, K&& k) {
  using R = std::remove_cvref_t<decltype(k(v))>;
  if constexpr (is_labeled_v<R>) {
    static_assert(std::is_same_v<typename R::label_type, Public>,
                  "ifc: mutating an unlabeled (public) argument requires all "
                  "other arguments to be public too");
  } else if constexpr (detail::is_optional_labeled_v<R>) {
    static_assert(std::is_same_v<typename R::value_type::label_type, Public>,
                  "ifc: mutating an unlabeled (public) argument requires all "
                  "other arguments to be public too");
  } else {
    static_assert(detail::dependent_false_v<K>,
                  "ifc: a chain continuation must return a labeled value");
  }
  return k(v);
}

namespace detail {

// Labels the result of `body(payload)` at L; a void body yields Unit.
template <class L, class Payload, class F>
constexpr auto label_result_at(Payload& payload, F&& body) {
  if constexpr (std::is_void_v<decltype(body(payload))>) {
    body(payload);
    return Labeled<Unit, L>(Unit{});
  } else {
    using U = std::decay_t<decltype(body(payload))>;
    return Labeled<U, L>(body(payload));
  }
}

// Innermost step of an fcall: wrap the raw call result at Public.
template <class F>
constexpr auto lift_public_call(F&& call) {
  if constexpr (std::is_void_v<decltype(call())>) {
    call();
    return Labeled<Unit, Public>(Unit{});
  } else {
    return lift_public(call());
  }
}

// mcall expansion target: run a whole method chain against the receiver's
// payload, wrap only the final result, at the receiver's label.
template <class T, class L, class F>
constexpr auto call_preserving_label(Labeled<T, L>& receiver, F&& body) {
  return label_result_at<L>(PayloadAccess::ref(receiver),
                            std::forward<F>(body));
}

template <class T, class L, class F>
constexpr auto call_preserving_label(const Labeled<T, L>& receiver, F&& body) {
  return label_result_at<L>(PayloadAccess::ref(receiver),
                            std::forward<F>(body));
}

template <class T, class L, class F>
constexpr auto call_preserving_label(Labeled<T, L>&& receiver, F&& body) {
  auto local = std::move(receiver);
  return call_preserving_label(local, std::forward<F>(body));
}

template <class E, class L, class F>
constexpr auto call_preserving_label(const LabeledSlot<E, L>& receiver,
                                     F&& body) {
  auto local = receiver.read();
  return call_preserving_label(local, std::forward<F>(body));
}

template <class V, class F>
  requires(!carries_label_v<std::remove_cvref_t<V>>)
constexpr auto call_preserving_label(V&& receiver, F&& body) {
  return label_result_at<Public>(receiver, std::forward<F>(body));
}

// Fallible mcall: the method chain yields an optional-like wrapper; failure
// exits carrying no labeled payload, success is labeled at the receiver.
template <class L, class W>
constexpr auto wrap_fallible_at(W&& w) {
  using V = std::decay_t<decltype(*std::forward<W>(w))>;
  using Out = Labeled<V, L>;
  if (!w.has_value()) return std::optional<Out>{};
  return std::optional<Out>{Out(*std::forward<W>(w))};
}

template <class T, class L, class F>
constexpr auto call_preserving_label_try(Labeled<T, L>& receiver, F&& body) {
  return wrap_fallible_at<L>(body(PayloadAccess::ref(receiver)));
}

template <class T, class L, class F>
constexpr auto call_preserving_label_try(const Labeled<T, L>& receiver,
                                         F&& body) {
  return wrap_fallible_at<L>(body(PayloadAccess::ref(receiver)));
}

template <class V, class F>
  requires(!carries_label_v<std::remove_cvref_t<V>>)
constexpr auto call_preserving_label_try(V&& receiver, F&& body) {
  return wrap_fallible_at<Public>(body(receiver));
}

// Innermost step of a fallible fcall: unwrap the host failure wrapper, then
// label the success value at Public for the chains to join outward.
template <class W>
constexpr auto lift_fallible(W&& w) {
  return wrap_fallible_at<Public>(std::forward<W>(w));
}

}  // namespace detail

}  // namespace ifc

#endif  // IFC_CHAIN_HPP_
