// Scratch probe: net feasibility and first-hit structure. Not part of the build.
#include <cstdio>

#include "hyperlab/idempotents.hpp"
#include "hyperlab/limits.hpp"
#include "hyperlab/system.hpp"

using namespace hyperlab;

int main() {
  SystemSpec sys = morse_square_system();

  // Window sanity.
  std::printf("a w4  = %s\n", window(sys.subst, make_seed_point(BaseTag::A), 4).c_str());
  std::printf("b w4  = %s\n", window(sys.subst, make_seed_point(BaseTag::B), 4).c_str());
  std::printf("ab w4 = %s\n", window(sys.subst, make_seed_point(BaseTag::ABar), 4).c_str());
  std::printf("bb w4 = %s\n", window(sys.subst, make_seed_point(BaseTag::BBar), 4).c_str());

  for (const auto& p : morse_net_panel()) std::printf("panel shift %lld\n", (long long)p.shift);

  const std::vector<std::int64_t> radii = {2, 4, 8, 12, 16, 24, 32, 48};
  for (const auto& tbl : shipped_tables()) {
    try {
      TimeNet net = timenet_for_idempotent(sys, tbl, radii, std::int64_t{1} << 22);
      std::printf("%s:", tbl.name.c_str());
      for (std::size_t i = 0; i < net.times.size(); ++i)
        std::printf(" (W=%lld,n=%lld)", (long long)net.radii[i], (long long)net.times[i]);
      std::printf(" truncated=%d %s\n", (int)net.truncated, net.note.c_str());
    } catch (const EmptyNetError& e) {
      std::printf("%s: EMPTY (%s)\n", tbl.name.c_str(), e.what());
    }
  }
  return 0;
}
