#ifndef KCPART_PARALLEL_HPP
#define KCPART_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kcpart {

// Runs fn(i) for every i in [0, count).  With jobs <= 1 this is a plain
// loop; otherwise a pool of `jobs` workers pulls indices from a shared
// counter.  fn must be safe to call concurrently for distinct i and should
// write only to slot i of any shared output, so results are positionally
// deterministic no matter how indices land on workers.  The first exception
// thrown by fn is rethrown after all workers stop.
template <typename Fn>
void for_each_index(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = jobs < count ? jobs : static_cast<unsigned>(count);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kcpart

#endif
