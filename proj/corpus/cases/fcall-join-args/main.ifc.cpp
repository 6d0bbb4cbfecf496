#include <ifc/prelude.hpp>
#include <cstdio>
#include <type_traits>
using namespace ifc;

int add(int a, int b) { return a + b; }

int main() {
  auto x = label_new<A>(10);
  auto y = label_new<B>(20);
  auto z = fcall(add(x, y));
  static_assert(std::is_same_v<decltype(z), Labeled<int, AB>>);
  auto w = fcall(add(x, 5));
  static_assert(std::is_same_v<decltype(w), Labeled<int, A>>);
  std::printf("%d %d\n", declassify(z), declassify(w));
  return 0;
}
