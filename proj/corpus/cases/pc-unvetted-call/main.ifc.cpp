#include <ifc/prelude.hpp>
using namespace ifc;

int g_events = 0;
void log_event() { g_events = g_events + 1; }

int main() {
  Labeled<bool, A> secret = label_new<A>(true);
  pc_block { (A) {
    if (secret) {
      log_event();  // ifc-fix: replace       unchecked_operation(log_event());
    }
  }}
  return 0;
}
