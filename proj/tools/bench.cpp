#include <chrono>
#include <cstdio>
#include <thread>

#include "rotsys/constructions.hpp"
#include "rotsys/reference.hpp"
#include "rotsys/solver.hpp"

// Times the parallel search against the single-worker run on the standard instances, and the
// enumeration counter against the naive closed-form reference where that is feasible.

using namespace rotsys;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_crg(const char* label, const RotationSystem& s, SearchConfig cfg, int hw) {
  cfg.jobs = 1;
  int g1 = -1, gn = -1;
  double t1 = seconds([&] { g1 = crossing_genus(s, cfg).genus.value_or(-1); });
  cfg.jobs = hw;
  double tn = seconds([&] { gn = crossing_genus(s, cfg).genus.value_or(-1); });
  std::printf("%-26s genus=%d  serial %8.3fs  %2d workers %8.3fs  speedup %.2fx%s\n", label, g1,
              t1, hw, tn, tn > 0 ? t1 / tn : 0.0, g1 == gn ? "" : "  DISAGREE");
}

}  // namespace

int main() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 2) hw = 2;
  std::printf("workers for the parallel runs: %d\n\n", hw);

  bench_crg("fig1", fig1_system(), {}, hw);
  {
    SearchConfig cfg;
    cfg.ell = 1;
    cfg.genus_budget = 2;
    bench_crg("pi_3 ell=1 budget=2", pi_n(3), cfg, hw);
  }
  {
    double t1 = seconds([&] { verify_f0(1); });
    double tn = seconds([&] { verify_f0(hw); });
    std::printf("%-26s          serial %8.3fs  %2d workers %8.3fs  speedup %.2fx\n",
                "f(0) sweep (17 systems)", t1, hw, tn, tn > 0 ? t1 / tn : 0.0);
  }
  {
    SearchConfig cfg;
    cfg.max_crossings = 3;
    long long a = 0, b = 0;
    double ts = seconds([&] {
      a = enumerate_drawings(k2n_restriction(3), cfg, [](const Drawing&) { return true; })
              .emitted;
    });
    double tr = seconds([&] { b = reference::count_drawings_naive(k2n_restriction(3), 3, {}); });
    std::printf("%-26s count=%lld  search %6.3fs  closed form %6.3fs%s\n", "k2,3 cap=3 count",
                a, ts, tr, a == b ? "" : "  DISAGREE");
  }
  return 0;
}
