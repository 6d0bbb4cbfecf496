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
  Labeled<int, A> secret = label_new<A>(raw);
  Labeled<int, A> x = label_new<A>(0);
  pc_block { (A) {
    if (secret > 10) {
      x = relabel(1, A{});
    } else {
      x = relabel(2, A{});
    }
  }}
  std::printf("ok\n");
  return 0;
}
