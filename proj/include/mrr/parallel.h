#ifndef MRR_PARALLEL_H_
#define MRR_PARALLEL_H_

#include <functional>

namespace mrr {

// Worker count: MRR_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
int ThreadCount();

// Runs body(row) for every row in [0, rows). Rows are split into contiguous
// chunks, one per worker; body must only write state owned by its row.
void ParallelForRows(int rows, const std::function<void(int)>& body);

}  // namespace mrr

#endif  // MRR_PARALLEL_H_
