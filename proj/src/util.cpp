#include "dmlab/util.hpp"

#include <atomic>

namespace dmlab {

namespace {
std::atomic<int> g_thread_cap{1};
}

int thread_cap() { return g_thread_cap.load(); }
void set_thread_cap(int n) { g_thread_cap.store(n < 1 ? 1 : n); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const int cap = thread_cap();
  if (cap <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(cap), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dmlab
