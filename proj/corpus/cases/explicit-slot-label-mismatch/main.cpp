#include <ifc/prelude.hpp>
#include <array>
using namespace ifc;

int main() {
  auto grid = label_new<A>(std::array<std::array<bool, 4>, 4>{});
  grid[1][2] = label_new<B>(true);  // ifc-fix: replace   grid[1][2] = label_new<A>(true);
  return 0;
}
