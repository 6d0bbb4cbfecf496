#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  auto at_a = label_new<A>(4);
  auto wrong = relabel<B>(at_a); (void)wrong;  // ifc-fix: remove
  return 0;
}
