#include <ifc/prelude.hpp>
#include <cstdio>
#include <fstream>
using namespace ifc;

// A public branch condition needs no pc machinery; labeled updates inside
// it are checked as ordinary explicit flows.
int main(int argc, char** argv) {
  int raw = 0;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    in >> raw;
  }
  Labeled<int, A> secret = label_new<A>(raw);
  Labeled<int, A> score = label_new<A>(0);
  bool public_flag = true;
  int updates = 0;
  if (public_flag) {
    score = secret + 1;
    updates = 1;
  }
  std::printf("updated %d\n", updates);
  return 0;
}
