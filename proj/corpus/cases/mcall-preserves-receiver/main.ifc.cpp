#include <ifc/prelude.hpp>
#include <cstdio>
#include <string>
#include <type_traits>
using namespace ifc;

struct Placement {
  int start_row;
  int start_col;
};

int main() {
  auto name = label_new<B>(std::string("alpha"));
  auto len = mcall(name.size());
  static_assert(std::is_same_v<decltype(len), Labeled<std::size_t, B>>);
  auto head = mcall(name.substr(0, 2).size());
  static_assert(std::is_same_v<decltype(head), Labeled<std::size_t, B>>);
  auto place = label_new<A>(Placement{4, 7});
  auto row = mcall(place.start_row);
  static_assert(std::is_same_v<decltype(row), Labeled<int, A>>);
  std::printf("%zu %zu %d\n", declassify(len), declassify(head),
              declassify(row));
  return 0;
}
