#include <ifc/prelude.hpp>
#include <cstdio>
#include <string>
using namespace ifc;

int main() {
  std::string s = "payload";
  auto wrapped = label_new<Public>(s);
  std::printf("%s\n", declassify(wrapped).c_str());
  auto high = label_new<AB>(7);
  std::printf("%d\n", declassify(high));
  return 0;
}
