#include <ifc/prelude.hpp>
#include <cstdio>
#include <type_traits>
using namespace ifc;

int main() {
  auto x = label_new<A>(9);
  auto same = relabel<A>(x);
  auto tagged = relabel(11, A{});
  static_assert(std::is_same_v<decltype(same), decltype(tagged)>);
  std::printf("%d %d\n", declassify(same), declassify(tagged));
  return 0;
}
