#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<bool, B> gate = label_new<B>(false);
  while (gate) {  // ifc-fix: replace   while (declassify(gate)) {
    break;
  }
  return 0;
}
