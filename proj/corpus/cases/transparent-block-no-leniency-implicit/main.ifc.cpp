#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<bool, A> secret = label_new<A>(true);
  int pub = 0;
  pc_block { (Public) {
    if (secret) {
      pub = 1;  // ifc-fix: remove
    }
  }}
  return pub;
}
