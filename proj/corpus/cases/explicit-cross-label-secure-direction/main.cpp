#include <ifc/prelude.hpp>
using namespace ifc;

// Public-to-A-to-AB would be a secure flow, but the assignment is a type
// mismatch until the label is upgraded explicitly.
int main() {
  Labeled<int, A> x = label_new<A>(1);
  Labeled<int, AB> y = label_new<AB>(2);
  y = x;  // ifc-fix: replace   y = relabel<AB>(x);
  return 0;
}
