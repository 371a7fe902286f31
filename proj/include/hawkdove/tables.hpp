#ifndef HAWKDOVE_TABLES_HPP
#define HAWKDOVE_TABLES_HPP

#include <array>
#include <string>
#include <vector>

#include "hawkdove/types.hpp"

namespace hawkdove {

// Fixed points and slope magnitudes of the limiting payoff-sampling
// polynomials w_k(p) = Pr(2 X_k - Y_k < k), k = 1..20, plus the 5x5 table of
// |w_k'(p^(j))| for k,j in {1..5}.
struct LimitTable {
  std::array<Real, 20> fixed_point;
  std::array<Real, 20> slope_magnitude;
  std::array<std::array<Real, 5>, 5> cross;  // [k-1][j-1]
};

LimitTable compute_limit_table();

// Golden values as printed in the source table (3 decimals; one entry has 2).
const LimitTable& printed_limit_table();

struct TableMismatch {
  std::string entry;
  Real computed;
  Real printed;
  Real deviation;
};

// Entries of the computed table that deviate from the printed goldens by more
// than `tol` (the acceptance bound is 5e-4).
std::vector<TableMismatch> check_limit_table(const LimitTable& computed, Real tol = 5e-4);

// Human-readable report; `mismatches` as produced by check_limit_table.
std::string format_limit_table_report(const LimitTable& computed,
                                      const std::vector<TableMismatch>& mismatches);

}  // namespace hawkdove

#endif
