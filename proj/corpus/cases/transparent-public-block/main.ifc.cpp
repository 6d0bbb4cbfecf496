#include <ifc/prelude.hpp>
#include <cstdio>

int main() {
  int total = 0;
  int i = 0;
  pc_block { (ifc::Public) {
    while (i < 5) {
      total = total + i;
      i = i + 1;
    }
  }}
  std::printf("total %d\n", total);
  return 0;
}
