#include "postlie/report.hpp"

#include <algorithm>
#include <sstream>

namespace postlie {

bool CheckReport::passed() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& i) { return i.passed; });
}

const CheckItem* CheckReport::find(const std::string& identity) const {
  for (const auto& i : items_)
    if (i.identity == identity)
      return &i;
  return nullptr;
}

std::vector<const CheckItem*> CheckReport::failures() const {
  std::vector<const CheckItem*> out;
  for (const auto& i : items_)
    if (!i.passed)
      out.push_back(&i);
  return out;
}

void CheckReport::append(const CheckReport& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& item : items_) {
    os << item.identity << ": " << (item.passed ? "PASS" : "FAIL");
    if (!item.passed) {
      os << " witness (";
      for (std::size_t k = 0; k < item.witness.size(); ++k)
        os << (k ? "," : "") << item.witness[k] + 1;
      os << ") discrepancy " << to_string(item.discrepancy) << " failing tuples "
         << item.failures;
    }
    os << '\n';
  }
  os << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

void IdentityTally::record(std::vector<std::size_t> tuple, const Vector& lhs, const Vector& rhs) {
  auto diff = lhs - rhs;
  if (is_zero(diff))
    return;
  if (item_.passed) {
    item_.passed = false;
    item_.witness = std::move(tuple);
    item_.discrepancy = std::move(diff);
  }
  ++item_.failures;
}

} // namespace postlie
