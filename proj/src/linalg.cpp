#include "cplstab/linalg.hpp"

#include <map>

namespace cplstab {

namespace {

using Row = std::map<FockState, Rat>;

// Reduces row against the pivots; returns the surviving row (possibly empty).
Row reduce(Row row, const std::map<FockState, Row>& pivots) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto pv = pivots.find(lead->first);
    if (pv == pivots.end()) break;
    Rat factor = lead->second;  // pivot rows are normalized to leading 1
    row.erase(lead);            // cancels against the pivot's leading entry
    for (const auto& [s, c] : pv->second) {
      Rat delta(factor * c);
      auto it = row.find(s);
      if (it == row.end()) {
        if (delta != 0) row.emplace(s, -delta);
      } else {
        it->second -= delta;
        if (it->second == 0) row.erase(it);
      }
    }
  }
  return row;
}

void insert_pivot(Row row, std::map<FockState, Row>& pivots) {
  Rat lead = row.begin()->second;
  for (auto& [s, c] : row) c /= lead;
  FockState key = row.begin()->first;
  row.erase(row.begin());
  pivots.emplace(std::move(key), std::move(row));
}

}  // namespace

long exact_rank(const std::vector<FockVector>& vectors) {
  std::map<FockState, Row> pivots;
  long rank = 0;
  for (const FockVector& v : vectors) {
    Row row(v.terms().begin(), v.terms().end());
    row = reduce(std::move(row), pivots);
    if (!row.empty()) {
      insert_pivot(std::move(row), pivots);
      ++rank;
    }
  }
  return rank;
}

bool in_span(const FockVector& v, const std::vector<FockVector>& vectors) {
  std::map<FockState, Row> pivots;
  for (const FockVector& u : vectors) {
    Row row = reduce(Row(u.terms().begin(), u.terms().end()), pivots);
    if (!row.empty()) insert_pivot(std::move(row), pivots);
  }
  return reduce(Row(v.terms().begin(), v.terms().end()), pivots).empty();
}

}  // namespace cplstab
