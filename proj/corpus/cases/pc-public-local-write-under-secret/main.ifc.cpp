#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<bool, A> secret = label_new<A>(true);
  int counter = 0;
  pc_block { (A) {
    if (secret) {
      counter = counter + 1;  // ifc-fix: remove
    }
  }}
  return counter;
}
