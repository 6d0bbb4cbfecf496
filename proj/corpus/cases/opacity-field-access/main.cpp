#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  auto x = label_new<A>(1);
  int v = x.value_;  // ifc-fix: replace   int v = declassify(x);
  return v;
}
