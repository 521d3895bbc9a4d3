#include "bomc/simplex.hpp"

#include "bomc/errors.hpp"

namespace bomc {

std::size_t PackingLp::add_column(std::vector<Rat> coefficients, Rat cost) {
  if (coefficients.size() != rhs.size()) {
    throw InvalidInput("LP column has wrong number of rows");
  }
  columns.push_back(std::move(coefficients));
  objective.push_back(std::move(cost));
  return columns.size() - 1;
}

LpResult solve_packing_lp(const PackingLp& lp) {
  const std::size_t rows = lp.rhs.size();
  const std::size_t structural = lp.columns.size();
  const std::size_t width = structural + rows;  // structural, then slacks
  if (lp.objective.size() != structural) throw InvalidInput("LP objective size mismatch");
  for (const Rat& b : lp.rhs) {
    if (b < 0) throw InvalidInput("LP right-hand side must be nonnegative");
  }

  std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(width, Rat(0)));
  std::vector<Rat> beta = lp.rhs;  // basic values
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < structural; ++j) tab[i][j] = lp.columns[j].at(i);
    tab[i][structural + i] = 1;
    basis[i] = structural + i;
  }
  // Reduced costs d_j = c_j - c_B B^-1 A_j; the slack basis has c_B = 0.
  std::vector<Rat> reduced(width, Rat(0));
  for (std::size_t j = 0; j < structural; ++j) reduced[j] = lp.objective[j];
  Rat value = 0;

  LpResult result;
  std::vector<std::size_t> pivot_nz;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (reduced[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Rat best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = beta[i] / tab[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == rows) {
      result.status = LpStatus::unbounded;
      return result;
    }

    // Normalize the pivot row, then eliminate the entering column elsewhere.
    const Rat pivot = tab[leave][enter];
    pivot_nz.clear();
    for (std::size_t j = 0; j < width; ++j) {
      if (tab[leave][j] != 0) {
        tab[leave][j] /= pivot;
        pivot_nz.push_back(j);
      }
    }
    beta[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rat factor = tab[i][enter];
      for (std::size_t j : pivot_nz) tab[i][j] -= factor * tab[leave][j];
      beta[i] -= factor * beta[leave];
    }
    const Rat factor = reduced[enter];
    for (std::size_t j : pivot_nz) reduced[j] -= factor * tab[leave][j];
    value += factor * beta[leave];
    basis[leave] = enter;
    ++result.pivots;
  }

  result.value = value;
  result.primal.assign(structural, Rat(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < structural) result.primal[basis[i]] = beta[i];
  }
  result.row_prices.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) result.row_prices[i] = -reduced[structural + i];
  return result;
}

}  // namespace bomc
