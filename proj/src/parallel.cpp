#include "wva/parallel.hpp"

#include <atomic>

namespace wva::par {

namespace {
std::atomic<ExecMode> g_mode{
#ifdef _OPENMP
    ExecMode::openmp
#else
    ExecMode::serial
#endif
};
}  // namespace

ExecMode mode() { return g_mode.load(std::memory_order_relaxed); }

void set_mode(ExecMode m) { g_mode.store(m, std::memory_order_relaxed); }

bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace wva::par
