#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<int, A> data_a = label_new<A>(10);
  int pub = 0;
  pub = data_a;  // ifc-fix: replace   pub = declassify(data_a);
  return pub == 10 ? 0 : 1;
}
