#pragma once

#include <string>
#include <vector>

#include "dsu2/linalg.hpp"

namespace dsu2 {

/// One verified identity: the max-abs entry of its residual.
struct CheckItem {
  std::string name;
  double residual = 0.0;
  bool exact_zero = false;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool passed() const;
  const CheckItem* find(std::string_view name) const;

  /// Exact residuals pass only when identically zero; float ones when the
  /// largest entry is below tol.
  void add_matrix(std::string name, const Matrix& residual, double tol);
  void add(CheckItem item) { items.push_back(std::move(item)); }
  void append(const CheckReport& other);
};

}  // namespace dsu2
