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

#ifndef TESTS_COMMON_LABEL_LAWS_HPP_
#define TESTS_COMMON_LABEL_LAWS_HPP_

#include <ifc/chain.hpp>
#include <ifc/diamond.hpp>
#include <ifc/labeled.hpp>
#include <ifc/reflect.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>

// Enumerates every ordered argument-label tuple of sizes 1..3 over the
// diamond lattice (4 + 16 + 64 = 84 combinations) and checks, per tuple:
//   - the call-lifting result label equals the type-level join fold
//     (a compile-time tag-equality probe), and
//   - that fold agrees with the brute-force reference table's fold, and
//   - the payload equals the direct unlifted call on random payloads.
// The call shapes instantiated here are exactly what the fcall expansion
// emits: nested chains with the innermost result lifted at Public.

namespace label_laws {

template <class L1, class... Rest>
struct JoinFold {
  using type = L1;
};

template <class L1, class L2, class... Rest>
struct JoinFold<L1, L2, Rest...> : JoinFold<ifc::join_t<L1, L2>, Rest...> {};

template <class... Ls>
using join_fold_t = typename JoinFold<Ls...>::type;

template <class T>
using label_of_t = typename std::remove_cvref_t<T>::label_type;

// The nested-chain shapes of one-, two-, and three-argument lifted calls.
template <class F, class A0>
constexpr auto fcall_shape(F f, const A0& a0) {
  return ifc::chain(a0, [&](auto&& v0) {
    return ifc::detail::lift_public_call([&]() { return f(v0); });
  });
}

template <class F, class A0, class A1>
constexpr auto fcall_shape(F f, const A0& a0, const A1& a1) {
  return ifc::chain(a0, [&](auto&& v0) {
    return ifc::chain(a1, [&](auto&& v1) {
      return ifc::detail::lift_public_call([&]() { return f(v0, v1); });
    });
  });
}

template <class F, class A0, class A1, class A2>
constexpr auto fcall_shape(F f, const A0& a0, const A1& a1, const A2& a2) {
  return ifc::chain(a0, [&](auto&& v0) {
    return ifc::chain(a1, [&](auto&& v1) {
      return ifc::chain(a2, [&](auto&& v2) {
        return ifc::detail::lift_public_call([&]() { return f(v0, v1, v2); });
      });
    });
  });
}

struct LawStats {
  int combinations = 0;
  int oracle_mismatches = 0;
  int payload_mismatches = 0;
};

// Checks one tuple; the static_assert is the compile-time probe.
template <class... Ls>
struct TupleCheck {
  static void run(const ifc::LatticeTable& table, std::mt19937& rng,
                  LawStats* stats) {
    auto draw = [&rng] { return static_cast<int>(rng() % 1000); };
    int raw[3] = {draw(), draw(), draw()};

    if constexpr (sizeof...(Ls) == 1) {
      run1<Ls...>(table, raw, stats);
    } else if constexpr (sizeof...(Ls) == 2) {
      run2<Ls...>(table, raw, stats);
    } else {
      run3<Ls...>(table, raw, stats);
    }
  }

 private:
  template <class... Args>
  static std::size_t oracle_fold(const ifc::LatticeTable& table) {
    std::size_t indices[] = {table.index_of(ifc::label_name<Args>())...};
    std::size_t acc = indices[0];
    for (std::size_t k = 1; k < sizeof...(Args); ++k) {
      acc = table.join_of(acc, indices[k]);
    }
    return acc;
  }

  template <class Result, class... Args>
  static void tally(const ifc::LatticeTable& table, LawStats* stats) {
    ++stats->combinations;
    std::size_t expect = oracle_fold<Args...>(table);
    std::size_t got =
        table.index_of(ifc::label_name<label_of_t<Result>>());
    if (expect != got) ++stats->oracle_mismatches;
  }

  template <class L0>
  static void run1(const ifc::LatticeTable& table, const int* raw,
                   LawStats* stats) {
    auto r = fcall_shape([](int a) { return a * 3; },
                         ifc::label_new<L0>(raw[0]));
    static_assert(std::is_same_v<label_of_t<decltype(r)>, join_fold_t<L0>>);
    tally<decltype(r), L0>(table, stats);
    if (ifc::declassify(r) != raw[0] * 3) ++stats->payload_mismatches;
  }

  template <class L0, class L1>
  static void run2(const ifc::LatticeTable& table, const int* raw,
                   LawStats* stats) {
    auto r = fcall_shape([](int a, int b) { return a - b; },
                         ifc::label_new<L0>(raw[0]),
                         ifc::label_new<L1>(raw[1]));
    static_assert(
        std::is_same_v<label_of_t<decltype(r)>, join_fold_t<L0, L1>>);
    // Order independence of the fold.
    static_assert(
        std::is_same_v<join_fold_t<L0, L1>, join_fold_t<L1, L0>>);
    tally<decltype(r), L0, L1>(table, stats);
    if (ifc::declassify(r) != raw[0] - raw[1]) ++stats->payload_mismatches;
  }

  template <class L0, class L1, class L2>
  static void run3(const ifc::LatticeTable& table, const int* raw,
                   LawStats* stats) {
    auto r = fcall_shape([](int a, int b, int c) { return a + b * c; },
                         ifc::label_new<L0>(raw[0]),
                         ifc::label_new<L1>(raw[1]),
                         ifc::label_new<L2>(raw[2]));
    static_assert(
        std::is_same_v<label_of_t<decltype(r)>, join_fold_t<L0, L1, L2>>);
    static_assert(
        std::is_same_v<join_fold_t<L0, L1, L2>, join_fold_t<L2, L1, L0>>);
    // Associativity of the fold.
    static_assert(std::is_same_v<ifc::join_t<ifc::join_t<L0, L1>, L2>,
                                 ifc::join_t<L0, ifc::join_t<L1, L2>>>);
    tally<decltype(r), L0, L1, L2>(table, stats);
    if (ifc::declassify(r) != raw[0] + raw[1] * raw[2]) {
      ++stats->payload_mismatches;
    }
  }
};

template <class... All>
struct Enumerate {
  static void run(const ifc::LatticeTable& table, std::mt19937& rng,
                  LawStats* stats) {
    (TupleCheck<All>::run(table, rng, stats), ...);
    (dim2<All>(table, rng, stats), ...);
    (dim3a<All>(table, rng, stats), ...);
  }

 private:
  template <class L0>
  static void dim2(const ifc::LatticeTable& table, std::mt19937& rng,
                   LawStats* stats) {
    (TupleCheck<L0, All>::run(table, rng, stats), ...);
  }
  template <class L0, class L1>
  static void dim3b(const ifc::LatticeTable& table, std::mt19937& rng,
                    LawStats* stats) {
    (TupleCheck<L0, L1, All>::run(table, rng, stats), ...);
  }
  template <class L0>
  static void dim3a(const ifc::LatticeTable& table, std::mt19937& rng,
                    LawStats* stats) {
    (dim3b<L0, All>(table, rng, stats), ...);
  }
};

// Runs the 84-combination law suite against a reference table.
inline LawStats run_fcall_laws(const ifc::LatticeTable& table,
                               std::uint32_t seed) {
  LawStats stats;
  std::mt19937 rng(seed);
  Enumerate<ifc::Public, ifc::A, ifc::B, ifc::AB>::run(table, rng, &stats);
  return stats;
}

// mcall label preservation for chains of length 1..3 over one label.
template <class L>
struct McallCheck {
  struct Box {
    int v = 0;
    Box next() const { return Box{v + 1}; }
    int get() const { return v; }
  };

  static bool run() {
    auto boxed = ifc::label_new<L>(Box{5});
    auto r1 = ifc::detail::call_preserving_label(
        boxed, [](auto& b) { return b.get(); });
    auto r2 = ifc::detail::call_preserving_label(
        boxed, [](auto& b) { return b.next().get(); });
    auto r3 = ifc::detail::call_preserving_label(
        boxed, [](auto& b) { return b.next().next().get(); });
    static_assert(std::is_same_v<label_of_t<decltype(r1)>, L>);
    static_assert(std::is_same_v<label_of_t<decltype(r2)>, L>);
    static_assert(std::is_same_v<label_of_t<decltype(r3)>, L>);
    return ifc::declassify(r1) == 5 && ifc::declassify(r2) == 6 &&
           ifc::declassify(r3) == 7;
  }
};

inline bool run_mcall_laws() {
  return McallCheck<ifc::Public>::run() && McallCheck<ifc::A>::run() &&
         McallCheck<ifc::B>::run() && McallCheck<ifc::AB>::run();
}

}  // namespace label_laws

#endif  // TESTS_COMMON_LABEL_LAWS_HPP_
