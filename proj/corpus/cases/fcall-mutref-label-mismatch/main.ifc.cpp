#include <ifc/prelude.hpp>
using namespace ifc;

void accumulate(int& acc, int v) { acc = acc + v; }

int main() {
  auto total = label_new<A>(0);
  auto inc = label_new<B>(5);
  fcall(accumulate(mut_ref(total), inc));  // ifc-fix: replace   fcall(accumulate(mut_ref(total), relabel(5, A{})));
  return 0;
}
