#include <ifc/prelude.hpp>
#include <cstdio>
#include <type_traits>
using namespace ifc;

int main() {
  auto original = label_new<B>(21);
  auto copy = original;  // copying keeps the label with the data
  static_assert(std::is_same_v<decltype(copy), Labeled<int, B>>);
  auto equal = original == copy;
  static_assert(std::is_same_v<decltype(equal), Labeled<bool, B>>);
  std::printf("%d\n", declassify(equal) ? 1 : 0);
  return 0;
}
