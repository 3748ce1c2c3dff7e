#pragma once

#include <cstddef>
#include <exception>
#include <limits>

namespace jordan {

// Collects the exception thrown by the lowest loop index inside an OpenMP
// region so the rethrown error does not depend on scheduling.
class ParallelErrors {
public:
  void capture(std::size_t index) {
#pragma omp critical(jordan_parallel_errors)
    {
      if (index < index_) {
        index_ = index;
        error_ = std::current_exception();
      }
    }
  }

  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

private:
  std::size_t index_ = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error_;
};

}  // namespace jordan
