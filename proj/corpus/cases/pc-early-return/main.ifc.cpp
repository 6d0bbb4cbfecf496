#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<bool, A> secret = label_new<A>(true);
  pc_block { (A) {
    if (secret) {
      return 1;  // ifc-fix: remove
    }
  }}
  return 0;
}
