#include "edgesum/lp.hpp"

#include "edgesum/errors.hpp"

namespace edgesum {

namespace {

/// Gauss-Jordan pivot on T[row][col], keeping the reduced-cost row z in step.
void pivot(std::vector<std::vector<Rat>>& T, std::vector<Rat>& z, std::size_t row, std::size_t col) {
  const Rat p = T[row][col];
  for (auto& cell : T[row]) cell /= p;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (i == row) continue;
    const Rat f = T[i][col];
    if (f == 0) continue;
    for (std::size_t c = 0; c < T[i].size(); ++c) T[i][c] -= f * T[row][c];
  }
  const Rat fz = z[col];
  if (fz != 0) {
    for (std::size_t c = 0; c < z.size(); ++c) z[c] -= fz * T[row][c];
  }
}

}  // namespace

LpResult solve_le_feasibility(std::size_t nvars, const std::vector<std::vector<Rat>>& rows,
                              const std::vector<Rat>& rhs) {
  if (rows.size() != rhs.size()) {
    throw UsageError("solve_le_feasibility: " + std::to_string(rows.size()) + " rows but " +
                     std::to_string(rhs.size()) + " right-hand sides");
  }
  for (const auto& row : rows) {
    if (row.size() != nvars) {
      throw UsageError("solve_le_feasibility: row with " + std::to_string(row.size()) +
                       " coefficients in a system over " + std::to_string(nvars) + " variables");
    }
  }

  LpResult result;
  const std::size_t m = rows.size();
  if (m == 0) {
    result.feasible = true;
    result.witness.assign(nvars, Rat(0));
    return result;
  }

  // Standard form with free variables split as x = xp - xm (both >= 0), one
  // slack per row, and one artificial per row; rows with negative right-hand
  // side are negated so the artificial basis starts feasible.
  // Columns: [0,n) xp, [n,2n) xm, [2n,2n+m) slack, [2n+m,2n+2m) artificial.
  const std::size_t slack0 = 2 * nvars;
  const std::size_t art0 = slack0 + m;
  const std::size_t ncols = art0 + m;

  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(ncols + 1, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nvars; ++j) {
      T[i][j] = sign * rows[i][j];
      T[i][nvars + j] = -T[i][j];
    }
    T[i][slack0 + i] = sign;
    T[i][art0 + i] = 1;
    T[i][ncols] = sign * rhs[i];
    basis[i] = art0 + i;
  }

  // Reduced-cost row for minimizing the artificial sum: z[j] holds
  // (basis cost) . (tableau column j) - cost_j, entering when positive.
  std::vector<Rat> z(ncols + 1, Rat(0));
  for (std::size_t j = 0; j <= ncols; ++j) {
    for (std::size_t i = 0; i < m; ++i) z[j] += T[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) z[art0 + i] -= 1;

  while (true) {
    // Bland's rule: smallest improving column index.
    std::size_t entering = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (z[j] > 0) {
        entering = j;
        break;
      }
    }
    if (entering == ncols) break;

    std::size_t leaving = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][entering] <= 0) continue;
      const Rat ratio = T[i][ncols] / T[i][entering];
      if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) {
      // The artificial objective is bounded below by zero, so an unbounded
      // improving direction cannot occur on well-formed input.
      throw Error("solve_le_feasibility: unbounded phase-one objective");
    }
    pivot(T, z, leaving, entering);
    basis[leaving] = entering;
    ++result.pivots;
  }

  result.feasible = (z[ncols] == 0);
  if (result.feasible) {
    std::vector<Rat> positive(nvars, Rat(0)), negative(nvars, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < nvars) {
        positive[basis[i]] = T[i][ncols];
      } else if (basis[i] < 2 * nvars) {
        negative[basis[i] - nvars] = T[i][ncols];
      }
    }
    result.witness.reserve(nvars);
    for (std::size_t j = 0; j < nvars; ++j) result.witness.push_back(positive[j] - negative[j]);
  }
  return result;
}

}  // namespace edgesum
