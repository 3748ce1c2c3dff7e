#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/linalg/matrix.hpp"

namespace jordan {

enum class Status { verified, failed, skipped };

std::string_view to_string(Status s);

struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
  std::string where;  // optional qualifier, e.g. "order 3" or "generator H"
};

struct Report {
  std::string identity;
  std::string labels;
  Status status = Status::verified;
  std::string detail;
  std::optional<Mismatch> first_mismatch;
  double wall_ms = 0;

  bool ok() const { return status == Status::verified; }
};

template <class S>
std::optional<Mismatch> find_mismatch(const Matrix<S>& lhs, const Matrix<S>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return Mismatch{0, 0, "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()),
                    "shape " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()), {}};
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (!(lhs(i, j) == rhs(i, j))) return Mismatch{i, j, lhs(i, j).to_string(), rhs(i, j).to_string(), {}};
  return std::nullopt;
}

// Accumulates the outcome of one check and stamps the elapsed time.
class ReportBuilder {
public:
  ReportBuilder(std::string identity, std::string labels);

  // Records the first mismatch seen; later ones only bump the count.
  void compare_failed(Mismatch m);
  template <class S>
  bool compare(const Matrix<S>& lhs, const Matrix<S>& rhs, std::string where = {}) {
    ++comparisons_;
    auto m = find_mismatch(lhs, rhs);
    if (!m) return true;
    m->where = std::move(where);
    compare_failed(std::move(*m));
    return false;
  }
  // Same as compare for any value type with == and to_string().
  template <class T>
  bool compare_value(const T& lhs, const T& rhs, std::string where = {}) {
    ++comparisons_;
    if (lhs == rhs) return true;
    compare_failed(Mismatch{0, 0, lhs.to_string(), rhs.to_string(), std::move(where)});
    return false;
  }
  // Counts comparisons that were made elsewhere and agreed.
  void passed(std::size_t n = 1) { comparisons_ += n; }
  // Folds a finished sub-report into this one.
  void absorb(const Report& r);
  void note(std::string text);
  void skip(std::string reason);

  Report finish();

private:
  Report report_;
  std::vector<std::string> notes_;
  std::size_t comparisons_ = 0;
  std::size_t failures_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace jordan
