#include <ifc/prelude.hpp>
#include <cstdio>
#include <type_traits>
using namespace ifc;

int main() {
  Labeled<int, A> x = label_new<A>(3);
  Labeled<int, A> y = label_new<A>(4);
  y = x;  // identical labels: an ordinary assignment
  auto sum = x + y;
  static_assert(std::is_same_v<decltype(sum), Labeled<int, A>>);
  std::printf("%d\n", declassify(sum));
  return 0;
}
