#include <ifc/prelude.hpp>
#include <cstdio>
using namespace ifc;

int main() {
  Labeled<bool, B> gate = label_new<B>(7 > 3);
  int taken = 0;
  if (declassify(gate)) {  // intentional release of one branch bit
    taken = 1;
  }
  std::printf("%d\n", taken);
  return 0;
}
