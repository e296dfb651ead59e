#include "semiq/quotient.hpp"

#include "semiq/hilbert.hpp"

namespace semiq {

namespace {

void require_positive_d(Int d) {
  if (d < 1) throw precondition_error("quotient requires a positive integer d");
}

}  // namespace

CSemigroup quotient_gaps(const CSemigroup& s, Int d) {
  require_positive_d(d);
  std::vector<Point> gaps;
  for (const Point& h : s.gaps) {
    if (divisible(h, d)) gaps.push_back(div_exact(h, d));
  }
  return make_semigroup(s.cone, s.order, std::move(gaps), /*check=*/false);
}

std::vector<Point> quotient_generated(const GeneratedSemigroup& g, Int d) {
  require_positive_d(d);
  const int p = g.generators[0].dim();
  const int q = static_cast<int>(g.generators.size());

  // Rows index the ambient coordinates; columns are (lambda, x).
  std::vector<std::vector<Int>> entries(static_cast<std::size_t>(p),
                                        std::vector<Int>(static_cast<std::size_t>(q + p), 0));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.generators[static_cast<std::size_t>(j)][i];
    }
    entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(q + i)] = -d;
  }

  std::vector<Point> projected;
  for (const Point& sol : hilbert_basis(make_system(std::move(entries)))) {
    Point x = zero_point(p);
    for (int i = 0; i < p; ++i) x[i] = sol[q + i];
    if (!is_zero(x)) projected.push_back(x);
  }
  std::vector<Point> reduced = reduce_generating_set(std::move(projected));
  sort_points(g.order, reduced);
  return reduced;
}

std::vector<Point> fundamental_gap_transfer(const std::vector<Point>& fg, Int d) {
  require_positive_d(d);
  std::vector<Point> out;
  for (const Point& h : fg) {
    if (divisible(h, d)) out.push_back(div_exact(h, d));
  }
  return out;
}

std::vector<Point> apery_transfer(const std::vector<Point>& ap, const Point& m, Int d) {
  require_positive_d(d);
  if (!divisible(m, d)) {
    throw precondition_error("apery_transfer: d must divide every coordinate of m");
  }
  std::vector<Point> out;
  for (const Point& w : ap) {
    if (divisible(w, d)) out.push_back(div_exact(w, d));
  }
  return out;
}

}  // namespace semiq
