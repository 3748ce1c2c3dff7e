#include "jordan/report.hpp"

namespace jordan {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::failed: return "failed";
    case Status::skipped: return "skipped";
  }
  return "?";
}

ReportBuilder::ReportBuilder(std::string identity, std::string labels) : start_(std::chrono::steady_clock::now()) {
  report_.identity = std::move(identity);
  report_.labels = std::move(labels);
}

void ReportBuilder::compare_failed(Mismatch m) {
  ++failures_;
  report_.status = Status::failed;
  if (!report_.first_mismatch) report_.first_mismatch = std::move(m);
}

void ReportBuilder::absorb(const Report& r) {
  ++comparisons_;
  if (r.status == Status::failed) {
    Mismatch m = r.first_mismatch.value_or(Mismatch{});
    m.where = r.identity + (m.where.empty() ? "" : ": " + m.where);
    compare_failed(std::move(m));
  }
  notes_.push_back(r.identity + " [" + r.detail + "]");
}

void ReportBuilder::note(std::string text) { notes_.push_back(std::move(text)); }

void ReportBuilder::skip(std::string reason) {
  report_.status = Status::skipped;
  notes_.push_back(std::move(reason));
}

Report ReportBuilder::finish() {
  std::string detail = std::to_string(comparisons_) + " comparisons";
  if (failures_) detail += ", " + std::to_string(failures_) + " failed";
  for (const auto& n : notes_) detail += "; " + n;
  report_.detail = std::move(detail);
  report_.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  return std::move(report_);
}

}  // namespace jordan
