#include "semiq/lp.hpp"

#include <cstddef>

namespace semiq {

namespace {

using Row = std::vector<Rat>;
using Tableau = std::vector<Row>;

// Gauss-Jordan pivot on (r, c). Row r is scaled so the pivot becomes 1 and the
// pivot column is eliminated from every other row including the objective row.
void pivot(Tableau& t, std::vector<std::size_t>& basis, std::size_t r, std::size_t c) {
  Row& pr = t[r];
  Rat inv = rat_div(Rat(1), pr[c]);
  for (Rat& v : pr) v = rat_mul(v, inv);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == r || t[i][c].is_zero()) continue;
    Rat f = t[i][c];
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      t[i][j] = rat_sub(t[i][j], rat_mul(f, pr[j]));
    }
  }
  basis[r] = c;
}

// Minimizes the objective held in the last tableau row with Bland's rule.
// Columns with allowed[j] == false never enter. Returns false on unbounded.
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis, const std::vector<bool>& allowed) {
  const std::size_t m = t.size() - 1;
  const std::size_t cols = t[0].size() - 1;  // last column is the rhs
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (allowed[j] && t[m][j].is_negative()) {
        enter = j;
        break;
      }
    }
    if (enter == cols) return true;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (!t[i][enter].is_negative() && !t[i][enter].is_zero()) {
        Rat ratio = rat_div(t[i][cols], t[i][enter]);
        if (leave == m || rat_less(ratio, best) ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) return false;
    pivot(t, basis, leave, enter);
  }
}

}  // namespace

LpResult lp_solve(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c, bool maximize) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  for (const auto& row : A) {
    if (row.size() != n) throw precondition_error("lp_solve: ragged constraint matrix");
  }
  if (b.size() != m) throw precondition_error("lp_solve: rhs size mismatch");

  // Tableau columns: n structural + m artificial + rhs. Rows are normalized so
  // every rhs is nonnegative, which makes the artificial basis feasible.
  const std::size_t cols = n + m;
  Tableau t(m + 1, Row(cols + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = b[i].is_negative();
    for (std::size_t j = 0; j < n; ++j) t[i][j] = neg ? rat_neg(A[i][j]) : A[i][j];
    t[i][n + i] = Rat(1);
    t[i][cols] = neg ? rat_neg(b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Phase 1: minimize the sum of artificials.
  for (std::size_t j = 0; j <= cols; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < m; ++i) s = rat_add(s, t[i][j]);
    t[m][j] = (j >= n && j < cols) ? rat_sub(Rat(1), s) : rat_neg(s);
  }
  std::vector<bool> allowed(cols, true);
  if (!run_simplex(t, basis, allowed)) {
    throw precondition_error("lp_solve: phase 1 unbounded");  // cannot happen
  }
  Rat phase1 = rat_neg(t[m][cols]);
  if (!phase1.is_zero()) return {LpStatus::Infeasible, Rat(0)};

  // Remove artificials from the basis; a row with no structural pivot is
  // redundant and gets dropped.
  for (std::size_t i = 0; i < basis.size();) {
    if (basis[i] >= n) {
      std::size_t piv = cols;
      for (std::size_t j = 0; j < n; ++j) {
        if (!t[i][j].is_zero()) {
          piv = j;
          break;
        }
      }
      if (piv == cols) {
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(t, basis, i, piv);
    }
    ++i;
  }
  const std::size_t rows = t.size() - 1;

  // Phase 2 objective (internally always a minimization).
  for (std::size_t j = 0; j <= cols; ++j) {
    Rat cj = (j < n) ? (maximize ? rat_neg(c[j]) : c[j]) : Rat(0);
    Rat s(0);
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] < n) {
        Rat cb = maximize ? rat_neg(c[basis[i]]) : c[basis[i]];
        s = rat_add(s, rat_mul(cb, t[i][j]));
      }
    }
    t[rows][j] = rat_sub(cj, s);
  }
  for (std::size_t j = n; j < cols; ++j) allowed[j] = false;
  if (!run_simplex(t, basis, allowed)) return {LpStatus::Unbounded, Rat(0)};

  Rat value = rat_neg(t[rows][cols]);
  if (maximize) value = rat_neg(value);
  return {LpStatus::Optimal, value};
}

bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
  std::vector<Rat> c(A.empty() ? 0 : A[0].size(), Rat(0));
  return lp_solve(A, b, c, false).status == LpStatus::Optimal;
}

}  // namespace semiq
