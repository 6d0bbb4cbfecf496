#include <ifc/prelude.hpp>
using namespace ifc;

int main() {
  Labeled<bool, A> secret = label_new<A>(true);
  int observed = 0;
  if (secret) {  // ifc-fix: replace   if (declassify(secret)) {
    observed = 1;
  }
  return observed;
}
