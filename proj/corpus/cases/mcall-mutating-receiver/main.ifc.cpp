#include <ifc/prelude.hpp>
#include <cstdio>
#include <type_traits>
#include <vector>
using namespace ifc;

int main() {
  auto seq = label_new<A>(std::vector<int>{1, 2, 3});
  auto pushed = mcall(seq.push_back(9));  // mutation keeps the label
  static_assert(std::is_same_v<decltype(pushed), Labeled<Unit, A>>);
  auto last = mcall(seq.back());
  auto count = mcall(seq.size());
  std::printf("%d %zu\n", declassify(last), declassify(count));
  return 0;
}
