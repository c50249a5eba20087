// Scratch: how panel alignment affects joint approximating-time density.
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hyperlab/idempotents.hpp"
#include "hyperlab/system.hpp"
#include "hyperlab/limits.hpp"

using namespace hyperlab;

static Substitution S;

static std::int64_t depth_at(const IdempotentTable& tbl,
                             const std::vector<std::int64_t>& panel,
                             std::int64_t n, std::int64_t cap) {
  std::int64_t d = cap;
  for (BaseTag b : kAllBases) {
    const BaseTag target = tbl.act(b);
    std::int64_t r = 0;
    while (r < d && base_letter(S, b, n + r) == base_letter(S, target, r) &&
           base_letter(S, b, n - r - 1) == base_letter(S, target, -r - 1))
      ++r;
    d = std::min(d, r);
    if (d == 0) return d;
  }
  for (std::int64_t k : panel) {
    std::int64_t r = 0;
    while (r < d && base_letter(S, BaseTag::A, k + n + r) == base_letter(S, BaseTag::A, k + r) &&
           base_letter(S, BaseTag::A, k + n - r - 1) == base_letter(S, BaseTag::A, k - r - 1))
      ++r;
    d = std::min(d, r);
    if (d == 0) return d;
  }
  return d;
}

int main(int argc, char** argv) {
  S = morse_square();
  const std::int64_t align = argc > 1 ? std::atoll(argv[1]) : 1;
  const std::int64_t horizon = argc > 2 ? std::atoll(argv[2]) : (1 << 22);

  SplitMix64 rng(kPanelSeed ^ static_cast<std::uint64_t>(align));
  std::vector<std::int64_t> panel;
  while (panel.size() < 8) {
    std::int64_t s = rng.next_in(4097, 16384);
    s = (s / align) * align;
    if (s <= 4096) s += align;
    bool dup = false;
    for (auto t : panel) dup |= (t == s);
    if (!dup) panel.push_back(s);
  }
  std::printf("align=%lld panel:", (long long)align);
  for (auto s : panel) std::printf(" %lld", (long long)s);
  std::printf("\n");

  for (const auto& tbl : shipped_tables()) {
    std::printf("%s:", tbl.name.c_str());
    // scan both signs; print the first time reaching each depth threshold
    std::vector<std::int64_t> want = {2, 4, 8, 12, 16, 24, 32, 48, 64, 96, 128};
    std::size_t idx = 0;
    int lock = 0;
    for (std::int64_t mag = 1; mag <= horizon && idx < want.size(); ++mag) {
      for (int sgn : {+1, -1}) {
        if (lock != 0 && sgn != lock) continue;
        const std::int64_t n = sgn * mag;
        const std::int64_t d = depth_at(tbl, panel, n, want.back());
        bool rec = false;
        while (idx < want.size() && d >= want[idx]) {
          std::printf(" (W=%lld,n=%lld)", (long long)want[idx], (long long)n);
          ++idx;
          rec = true;
        }
        if (rec) lock = sgn;
        if (idx >= want.size()) break;
      }
    }
    std::printf(idx >= want.size() ? " FULL\n" : " ...stalled\n");
  }
  return 0;
}
