#include <ifc/prelude.hpp>
#include <cstdio>
#include <fstream>
using namespace ifc;

// Deliberately leaky: prints the secret itself through the escape hatch.
int main(int argc, char** argv) {
  int raw = 0;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    in >> raw;
  }
  Labeled<int, A> secret = label_new<A>(raw);
  unchecked_operation(std::printf("leak %d\n", declassify(secret)));
  std::printf("done\n");
  return 0;
}
