#pragma once

// Independent exact feasibility oracle for systems of non-strict linear
// inequalities over the rationals, by Fourier-Motzkin elimination.  Used to
// cross-check the simplex-based feasibility solver; deliberately shares no
// code with it.

#include <edgesum/rational.hpp>

#include <algorithm>
#include <map>
#include <vector>

namespace oracle {

using edgesum::Rat;

/// One constraint: sum_i coef[i] * x_i <= rhs.
struct FmRow {
  std::vector<Rat> coef;
  Rat rhs;
};

namespace detail {

/// Scales the row so its largest |coefficient| is 1 (positive scaling only,
/// preserving the inequality).  Canonical form for de-duplication.
inline FmRow normalized(FmRow row) {
  Rat scale = 0;
  for (const auto& c : row.coef) {
    const Rat a = c < 0 ? Rat(-c) : c;
    if (a > scale) scale = a;
  }
  if (scale == 0) return row;
  for (auto& c : row.coef) c /= scale;
  row.rhs /= scale;
  return row;
}

}  // namespace detail

/// Returns true iff the system {row.coef . x <= row.rhs} has a rational
/// solution with all variables free.  Row count per elimination stage is
/// capped; exceeding the cap throws (never observed on the test sizes).
inline bool fm_feasible(std::vector<FmRow> rows, int nvars, std::size_t row_cap = 200000) {
  for (int var = 0; var < nvars; ++var) {
    std::vector<FmRow> pos, neg, rest;
    for (auto& row : rows) {
      const Rat c = row.coef[static_cast<std::size_t>(var)];
      if (c > 0) {
        pos.push_back(std::move(row));
      } else if (c < 0) {
        neg.push_back(std::move(row));
      } else {
        rest.push_back(std::move(row));
      }
    }
    std::map<std::vector<Rat>, Rat> dedup;  // coef -> tightest rhs
    const auto add = [&](FmRow row) {
      row = detail::normalized(std::move(row));
      auto it = dedup.find(row.coef);
      if (it == dedup.end()) {
        dedup.emplace(std::move(row.coef), std::move(row.rhs));
      } else if (row.rhs < it->second) {
        it->second = row.rhs;
      }
    };
    for (auto& row : rest) add(std::move(row));
    for (const auto& p : pos) {
      for (const auto& m : neg) {
        // Combine p (coef_var > 0) and m (coef_var < 0) to cancel x_var:
        // row = p / p_var + m / (-m_var), both positive scalings.
        const Rat pv = p.coef[static_cast<std::size_t>(var)];
        const Rat mv = -m.coef[static_cast<std::size_t>(var)];
        FmRow row;
        row.coef.resize(static_cast<std::size_t>(nvars));
        for (int q = 0; q < nvars; ++q) {
          const auto qi = static_cast<std::size_t>(q);
          row.coef[qi] = p.coef[qi] / pv + m.coef[qi] / mv;
        }
        row.rhs = p.rhs / pv + m.rhs / mv;
        add(std::move(row));
      }
    }
    rows.clear();
    rows.reserve(dedup.size());
    for (auto& [coef, rhs] : dedup) rows.push_back(FmRow{coef, rhs});
    if (rows.size() > row_cap) throw std::runtime_error("fm_feasible: row cap exceeded");
  }
  for (const auto& row : rows) {
    if (row.rhs < 0) return false;  // 0 <= negative
  }
  return true;
}

/// Feasibility of the negative-pattern system on n vertices:
///   sum_v f_v >= 0   and   sum_{v in e} f_v <= -1 for every e in pattern.
inline bool negative_pattern_feasible(long long n, const std::vector<std::vector<long long>>& pattern) {
  std::vector<FmRow> rows;
  FmRow total;
  total.coef.assign(static_cast<std::size_t>(n), Rat(-1));
  total.rhs = 0;  // -(sum f) <= 0
  rows.push_back(std::move(total));
  for (const auto& e : pattern) {
    FmRow row;
    row.coef.assign(static_cast<std::size_t>(n), Rat(0));
    for (long long v : e) row.coef[static_cast<std::size_t>(v)] += 1;
    row.rhs = -1;
    rows.push_back(std::move(row));
  }
  return fm_feasible(std::move(rows), static_cast<int>(n));
}

}  // namespace oracle
