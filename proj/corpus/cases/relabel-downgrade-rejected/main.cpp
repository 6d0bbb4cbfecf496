#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  auto high = label_new<AB>(9);
  auto low = relabel<A>(high);  // ifc-fix: replace   auto low = label_new<A>(declassify(high));
  (void)low;
  return 0;
}
