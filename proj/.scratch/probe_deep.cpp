// Scratch: deep-radius net times for composition tests.
#include <cstdio>
#include "hyperlab/limits.hpp"
using namespace hyperlab;
int main() {
  SystemSpec sys = morse_square_system();
  for (auto name : {"u1", "v1"}) {
    try {
      TimeNet net = timenet_for_idempotent(sys, table_from_name(name), {33800},
                                           std::int64_t{1} << 24);
      std::printf("%s deep: n=%lld W=%lld\n", name, (long long)net.times[0],
                  (long long)net.radii[0]);
    } catch (const EmptyNetError& e) {
      std::printf("%s deep: EMPTY %s\n", name, e.what());
    }
  }
  return 0;
}
