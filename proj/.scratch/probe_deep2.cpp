#include <cstdio>
#include "hyperlab/limits.hpp"
using namespace hyperlab;
int main() {
  setvbuf(stdout, nullptr, _IONBF, 0);
  SystemSpec sys = morse_square_system();
  for (auto name : {"u1", "v1", "u2", "id"}) {
    try {
      TimeNet net = timenet_for_idempotent(sys, table_from_name(name), {194},
                                           std::int64_t{1} << 22);
      std::printf("%s@194: n=%lld\n", name, (long long)net.times[0]);
    } catch (const EmptyNetError& e) {
      std::printf("%s@194: EMPTY %s\n", name, e.what());
    }
  }
  // identity-like net at modest radii (example: common return times of bases)
  try {
  TimeNet idn = timenet_for_idempotent(sys, identity_table(), {2, 4, 8}, 1 << 22);
  std::printf("id-net:");
  for (std::size_t i = 0; i < idn.times.size(); ++i)
    std::printf(" (%lld@%lld)", (long long)idn.times[i], (long long)idn.radii[i]);
  std::printf("\n");
  } catch (const EmptyNetError& e) {
    std::printf("id-net: EMPTY %s\n", e.what());
  }
  return 0;
}
