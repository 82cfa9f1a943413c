#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bk/models.hpp"

namespace bk {

struct RowResult {
  bool pass = false;
  std::string detail;
};

struct AcceptanceRow {
  int id = 0;
  std::string title;
  std::function<RowResult()> run;
};

/// Every acceptance row in catalog order.
const std::vector<AcceptanceRow>& acceptance_rows();

using HellingerDistance = std::function<double(const HellingerPoint&, const HellingerPoint&)>;

/// The Hellinger row with an injectable distance formula, so that a tampered
/// formula can be shown to fail it.
RowResult hellinger_row(const HellingerDistance& distance);

}  // namespace bk
