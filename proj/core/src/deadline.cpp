#include "curvelab/elim/deadline.hpp"

#include <string>

#include "curvelab/error.hpp"

namespace curvelab {

Deadline Deadline::after(std::chrono::milliseconds budget) {
  Deadline d;
  d.end_ = Clock::now() + budget;
  d.budget_ = budget;
  return d;
}

bool Deadline::expired() const {
  if (cancelled_->load(std::memory_order_relaxed)) return true;
  return end_ && Clock::now() >= *end_;
}

void Deadline::check(const char* what) const {
  if (!expired()) return;
  std::string message = std::string(what) + " exceeded its deadline";
  if (budget_) message += " of " + std::to_string(budget_->count()) + " ms";
  throw Error(ErrorCode::kDeadlineExceeded, message);
}

}  // namespace curvelab
