#include "semiq/hilbert.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

namespace semiq {

DiophantineSystem make_system(std::vector<std::vector<Int>> entries) {
  if (entries.empty() || entries[0].empty()) {
    throw schema_error("Diophantine system needs at least one row and one column");
  }
  DiophantineSystem sys;
  sys.rows = static_cast<int>(entries.size());
  sys.cols = static_cast<int>(entries[0].size());
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != sys.cols) {
      throw schema_error("Diophantine system rows have unequal lengths");
    }
  }
  sys.entries = std::move(entries);
  return sys;
}

namespace {

std::vector<Int> residual(const DiophantineSystem& sys, const Point& x) {
  std::vector<Int> r(static_cast<std::size_t>(sys.rows), 0);
  for (int i = 0; i < sys.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < sys.cols; ++j) {
      s = checked_add(s, checked_mul(sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], x[j]));
    }
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

bool all_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

constexpr std::size_t kFrontierCeiling = 4'000'000;
constexpr int kLevelCeiling = 512;

}  // namespace

std::vector<Point> hilbert_basis(const DiophantineSystem& sys) {
  const int n = sys.cols;

  // Column images A e_j, reused in the inner-product branching test.
  std::vector<std::vector<Int>> col(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Point ej = zero_point(n);
    ej[j] = 1;
    col[static_cast<std::size_t>(j)] = residual(sys, ej);
  }

  std::vector<Point> minimal;
  auto dominated = [&minimal](const Point& x) {
    for (const Point& m : minimal) {
      if (leq(m, x)) return true;
    }
    return false;
  };

  std::vector<Point> frontier;
  std::unordered_set<Point, PointHash> seen;
  for (int j = 0; j < n; ++j) {
    Point ej = zero_point(n);
    ej[j] = 1;
    frontier.push_back(ej);
    seen.insert(ej);
  }

  int level = 1;
  while (!frontier.empty()) {
    if (++level > kLevelCeiling) {
      throw guard_error("hilbert_basis: level ceiling exceeded");
    }
    std::vector<Point> next;
    for (const Point& t : frontier) {
      std::vector<Int> rt = residual(sys, t);
      if (all_zero(rt)) {
        if (!dominated(t)) minimal.push_back(t);
        continue;
      }
      for (int j = 0; j < n; ++j) {
        __int128 ip = 0;
        for (int i = 0; i < sys.rows; ++i) {
          ip += static_cast<__int128>(rt[static_cast<std::size_t>(i)]) *
                col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        if (ip >= 0) continue;
        Point u = t;
        u[j] = checked_add(u[j], 1);
        if (dominated(u) || seen.count(u)) continue;
        seen.insert(u);
        next.push_back(u);
      }
    }
    if (seen.size() > kFrontierCeiling) {
      throw guard_error("hilbert_basis: frontier ceiling exceeded");
    }
    frontier = std::move(next);
  }

  sort_points(make_order(OrderKind::GradedLex, n), minimal);
  return minimal;
}

bool monoid_member(const std::vector<Point>& gens, const Point& x) {
  for (const Point& g : gens) {
    if (is_zero(g)) throw precondition_error("monoid_member: zero generator");
    require_same_dim(g, x, "monoid_member");
  }
  require_nonnegative(x, "monoid_member");
  if (is_zero(x)) return true;

  // Memoized search over remainders; every subtraction strictly decreases the
  // coordinate sum, so the state space is bounded by box(0, x).
  std::unordered_set<Point, PointHash> dead;

  struct Frame {
    Point value;
    std::size_t next_gen;
  };
  std::vector<Frame> frames;
  frames.push_back({x, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (is_zero(f.value)) return true;
    bool descended = false;
    while (f.next_gen < gens.size()) {
      auto rest = sub_checked(f.value, gens[f.next_gen]);
      ++f.next_gen;
      if (!rest) continue;
      if (is_zero(*rest)) return true;
      if (dead.count(*rest)) continue;
      frames.push_back({*rest, 0});
      descended = true;
      break;
    }
    if (!descended) {
      dead.insert(f.value);
      frames.pop_back();
    }
  }
  return false;
}

std::vector<Point> reduce_generating_set(std::vector<Point> gens) {
  for (const Point& g : gens) {
    if (is_zero(g)) throw precondition_error("reduce_generating_set: zero generator");
  }
  if (gens.empty()) return gens;
  const int dim = gens[0].dim();
  sort_points(make_order(OrderKind::GradedLex, dim), gens);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Point> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (others.empty() || !monoid_member(others, gens[i])) kept.push_back(gens[i]);
  }
  return kept;
}

}  // namespace semiq
