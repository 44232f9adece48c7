#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "postlie/matrix.hpp"

namespace postlie {

/// Outcome of one identity over all basis tuples. A failing item carries the
/// first violating tuple (0-based indices) and the difference lhs - rhs there.
struct CheckItem {
  std::string identity;
  bool passed = true;
  std::vector<std::size_t> witness;
  Vector discrepancy;
  std::size_t failures = 0; ///< number of violating basis tuples
};

class CheckReport {
public:
  CheckReport() = default;
  explicit CheckReport(std::vector<CheckItem> items) : items_(std::move(items)) {}

  bool passed() const;
  const std::vector<CheckItem>& items() const { return items_; }
  const CheckItem* find(const std::string& identity) const;
  std::vector<const CheckItem*> failures() const;

  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void append(const CheckReport& other);

  /// One line per item, 1-based witnesses, followed by the overall verdict.
  std::string to_text() const;

private:
  std::vector<CheckItem> items_;
};

/// Accumulates the verdict for one identity while the caller sweeps tuples.
class IdentityTally {
public:
  explicit IdentityTally(std::string name) { item_.identity = std::move(name); }

  /// Records lhs - rhs at the given tuple.
  void record(std::vector<std::size_t> tuple, const Vector& lhs, const Vector& rhs);
  CheckItem finish() && { return std::move(item_); }

private:
  CheckItem item_;
};

} // namespace postlie
