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
  Labeled<bool, A> secret = label_new<A>(raw > 0);
  Labeled<int, A> tally = label_new<A>(0);
  int steps = 0;
  pc_block { (Public) {
    if (secret) {
      tally = relabel(1, A{});
    }
    steps = steps + 1;  // pc is back at Public here
  }}
  std::printf("steps %d\n", steps);
  return 0;
}
