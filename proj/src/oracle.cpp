#include "semiq/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "semiq/quotient.hpp"

namespace semiq {
namespace oracle {

bool brute_member(const std::vector<Point>& gens, const Point& x) {
  for (const Point& g : gens) {
    if (is_zero(g)) throw precondition_error("brute_member: zero generator");
  }
  require_nonnegative(x, "brute_member");
  // Breadth-first over remainders.
  std::deque<Point> queue{x};
  std::unordered_set<Point, PointHash> visited{x};
  while (!queue.empty()) {
    Point v = queue.front();
    queue.pop_front();
    if (is_zero(v)) return true;
    for (const Point& g : gens) {
      auto rest = sub_checked(v, g);
      if (rest && visited.insert(*rest).second) queue.push_back(*rest);
    }
  }
  return false;
}

std::vector<Point> brute_hilbert(const DiophantineSystem& sys, const Point& box) {
  if (box.dim() != sys.cols) throw precondition_error("brute_hilbert: box dimension mismatch");
  require_nonnegative(box, "brute_hilbert");

  // Depth-first over coordinates with row-interval pruning: a partial
  // assignment dies when some row can no longer reach zero within the box.
  std::vector<Point> solutions;
  Point x = zero_point(sys.cols);
  std::vector<Int> row_sum(static_cast<std::size_t>(sys.rows), 0);

  // Per-row reachable slack for the suffix starting at column j.
  std::vector<std::vector<Int>> suffix_min(static_cast<std::size_t>(sys.cols) + 1,
                                           std::vector<Int>(static_cast<std::size_t>(sys.rows), 0));
  std::vector<std::vector<Int>> suffix_max = suffix_min;
  for (int j = sys.cols - 1; j >= 0; --j) {
    for (int i = 0; i < sys.rows; ++i) {
      Int e = sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      Int contrib = checked_mul(e, box[j]);
      suffix_min[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          checked_add(suffix_min[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(i)],
                      std::min<Int>(0, contrib));
      suffix_max[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          checked_add(suffix_max[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(i)],
                      std::max<Int>(0, contrib));
    }
  }

  constexpr std::size_t kSolutionCeiling = 2'000'000;
  auto dfs = [&](auto&& self, int j) -> void {
    for (int i = 0; i < sys.rows; ++i) {
      Int lo = checked_add(row_sum[static_cast<std::size_t>(i)],
                           suffix_min[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
      Int hi = checked_add(row_sum[static_cast<std::size_t>(i)],
                           suffix_max[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
      if (lo > 0 || hi < 0) return;
    }
    if (j == sys.cols) {
      if (!is_zero(x)) {
        solutions.push_back(x);
        if (solutions.size() > kSolutionCeiling) {
          throw guard_error("brute_hilbert: solution ceiling exceeded");
        }
      }
      return;
    }
    for (Int v = 0; v <= box[j]; ++v) {
      x[j] = v;
      if (v > 0) {
        for (int i = 0; i < sys.rows; ++i) {
          row_sum[static_cast<std::size_t>(i)] = checked_add(
              row_sum[static_cast<std::size_t>(i)],
              sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
      }
      self(self, j + 1);
    }
    for (int i = 0; i < sys.rows; ++i) {
      row_sum[static_cast<std::size_t>(i)] = checked_sub(
          row_sum[static_cast<std::size_t>(i)],
          checked_mul(sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], box[j]));
    }
    x[j] = 0;
  };
  dfs(dfs, 0);

  // Keep the componentwise-minimal ones; sorting by grade makes a single
  // forward pass sufficient.
  std::sort(solutions.begin(), solutions.end(), [](const Point& a, const Point& b) {
    Int ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a.c < b.c;
  });
  std::vector<Point> minimal;
  for (const Point& sol : solutions) {
    bool dominated = false;
    for (const Point& m : minimal) {
      if (leq(m, sol)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(sol);
  }
  sort_points(make_order(OrderKind::GradedLex, sys.cols), minimal);
  return minimal;
}

std::vector<CSemigroup> brute_covers(const CSemigroup& s, Int d, const Point& f) {
  if (d < 1) throw precondition_error("brute_covers: d must be positive");
  std::vector<Point> window = cone_points_leq(s.cone, s.order, f);
  std::vector<Point> candidates;
  for (const Point& x : window) {
    if (!is_zero(x)) candidates.push_back(x);
  }
  if (candidates.size() > 16) {
    throw guard_error("brute_covers: candidate window too large for exhaustive search");
  }

  std::vector<CSemigroup> out;
  const std::size_t n = candidates.size();
  for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << n); ++mask) {
    std::vector<Point> gaps;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (static_cast<std::size_t>(1) << i)) gaps.push_back(candidates[i]);
    }
    if (find_violation(s.cone, gaps)) continue;
    CSemigroup t = make_semigroup(s.cone, s.order, std::move(gaps), /*check=*/false);
    if (equal(quotient_gaps(t, d), s)) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [&s](const CSemigroup& a, const CSemigroup& b) {
    const std::size_t n2 = std::min(a.gaps.size(), b.gaps.size());
    for (std::size_t i = 0; i < n2; ++i) {
      int c = order_cmp(s.order, a.gaps[i], b.gaps[i]);
      if (c != 0) return c < 0;
    }
    return a.gaps.size() < b.gaps.size();
  });
  return out;
}

}  // namespace oracle
}  // namespace semiq
