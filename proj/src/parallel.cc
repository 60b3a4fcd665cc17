#include "mrr/parallel.h"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mrr {

int ThreadCount() {
  if (const char* env = std::getenv("MRR_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelForRows(int rows, const std::function<void(int)>& body) {
  const int workers = std::min(ThreadCount(), rows);
  if (workers <= 1) {
    for (int r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const int begin = rows * w / workers;
    const int end = rows * (w + 1) / workers;
    threads.emplace_back([begin, end, &body] {
      for (int r = begin; r < end; ++r) body(r);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace mrr
