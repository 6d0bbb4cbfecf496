#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<int, A> secret = label_new<A>(5);
  int pub = 0;
  pc_block { (Public) {
    pub = secret;  // ifc-fix: replace     pub = declassify(secret);
  }}
  return pub;
}
