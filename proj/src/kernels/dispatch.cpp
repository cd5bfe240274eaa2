// Runtime backend selection. The choice is made once (env override first,
// then CPU probe) and can be reset programmatically for tests.

#include <atomic>
#include <cstdlib>

#include "backend_impl.hpp"

namespace qlocc::kernels {

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_initial() {
  const char* env = std::getenv("QLOCC_KERNELS");
  std::string_view want = env ? std::string_view{env} : "auto";
  if (want == "scalar") return &scalar_backend();
  if (want == "avx2" || want == "auto") {
    if (const Backend* b = avx2_backend()) return b;
  }
  return &scalar_backend();
}

}  // namespace

const Backend* avx2_backend() {
  if (!cpu_has_avx2()) return nullptr;
  return avx2_backend_impl();
}

const Backend& active_backend() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (b == nullptr) {
    b = pick_initial();
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

bool select_backend(std::string_view name) {
  if (name == "scalar") {
    g_active.store(&scalar_backend(), std::memory_order_release);
    return true;
  }
  if (name == "avx2") {
    if (const Backend* b = avx2_backend()) {
      g_active.store(b, std::memory_order_release);
      return true;
    }
    return false;
  }
  if (name == "auto") {
    g_active.store(pick_initial(), std::memory_order_release);
    return true;
  }
  return false;
}

std::vector<std::string> available_backends() {
  std::vector<std::string> out{"scalar"};
  if (avx2_backend() != nullptr) out.emplace_back("avx2");
  return out;
}

}  // namespace qlocc::kernels
