#include <ifc/prelude.hpp>
#include <cstdio>
#include <fstream>
using namespace ifc;

int main(int argc, char** argv) {
  int raw = 0;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    in >> raw;
  }
  Labeled<bool, A> a = label_new<A>(raw > 2);
  Labeled<bool, B> b = label_new<B>(true);
  Labeled<int, AB> w = label_new<AB>(0);
  pc_block { (A) {
    if (a) {
      if (b) {
        w = relabel(5, AB{});  // pc is AB in here
      }
    }
    w = relabel(6, AB{});  // pc reverted to A
  }}
  std::printf("done\n");
  return 0;
}
