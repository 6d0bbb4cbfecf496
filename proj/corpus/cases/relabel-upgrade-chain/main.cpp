#include <ifc/prelude.hpp>
#include <cstdio>
#include <type_traits>
using namespace ifc;

int main() {
  auto base = lift_public(5);
  auto at_a = relabel<A>(base);
  auto at_ab = relabel<AB>(at_a);
  static_assert(std::is_same_v<decltype(at_ab), Labeled<int, AB>>);
  std::printf("%d\n", declassify(at_ab));
  return 0;
}
