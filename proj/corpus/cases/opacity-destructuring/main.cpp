#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  auto x = label_new<A>(7);
  auto [payload] = x;  // ifc-fix: replace   int payload = declassify(x);
  return payload;
}
