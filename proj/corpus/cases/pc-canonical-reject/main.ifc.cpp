#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<bool, A> secret = label_new<A>(true);
  Labeled<int, A> x = label_new<A>(0);
  Labeled<int, B> y = label_new<B>(0);
  pc_block { (A) {
    if (secret) {
      x = relabel(1, A{});
      y = relabel(1, B{});  // ifc-fix: remove
    }
  }}
  return 0;
}
