#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <optional>

namespace curvelab {

/// Cooperative cancellation token: long computations call check() at each
/// reduction step and unwind with kDeadlineExceeded once the budget is spent
/// or cancel() was called from another thread.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() : cancelled_(std::make_shared<std::atomic<bool>>(false)) {}
  static Deadline after(std::chrono::milliseconds budget);
  static Deadline unlimited() { return Deadline(); }

  bool expired() const;
  /// Throws Error(kDeadlineExceeded) naming `what` when expired.
  void check(const char* what) const;
  void cancel() const { cancelled_->store(true); }
  std::optional<std::chrono::milliseconds> budget() const { return budget_; }

 private:
  std::optional<Clock::time_point> end_;
  std::optional<std::chrono::milliseconds> budget_;
  std::shared_ptr<std::atomic<bool>> cancelled_;
};

inline constexpr std::chrono::milliseconds kDefaultEliminationBudget{60000};

}  // namespace curvelab
