#include <ifc/prelude.hpp>
using namespace ifc;

int twice(int v) { return v * 2; }

int main() {
  auto x = label_new<A>(3);
  auto y = fcall(twice(x));
  int stolen = __ifc_v0;  // ifc-fix: replace   int stolen = 0;
  (void)y;
  return stolen;
}
