#include "dsu2/report.hpp"

#include <algorithm>

namespace dsu2 {

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

const CheckItem* CheckReport::find(std::string_view name) const {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

void CheckReport::add_matrix(std::string name, const Matrix& residual, double tol) {
  CheckItem item;
  item.name = std::move(name);
  item.residual = residual.max_abs();
  item.exact_zero = residual.mode() == Mode::Exact && residual.is_zero();
  item.passed = residual.mode() == Mode::Exact ? item.exact_zero : item.residual < tol;
  items.push_back(std::move(item));
}

void CheckReport::append(const CheckReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

}  // namespace dsu2
