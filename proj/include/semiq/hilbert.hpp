#pragma once

#include <vector>

#include "semiq/order.hpp"
#include "semiq/point.hpp"

namespace semiq {

/// Homogeneous linear Diophantine system: entries * x = 0, x in N^cols.
struct DiophantineSystem {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Int>> entries;
};

DiophantineSystem make_system(std::vector<std::vector<Int>> entries);

/// Minimal nonzero nonnegative solutions, computed by Contejean-Devie
/// completion: breadth-first frontier extended by unit steps t -> t + e_j
/// only when <A t, A e_j> < 0, pruned by dominance against the minimal
/// solutions already found. Output sorted under graded-then-lex.
std::vector<Point> hilbert_basis(const DiophantineSystem& sys);

/// True iff x is a N-combination of `gens` (bounded decomposition search;
/// all generators must be nonzero).
bool monoid_member(const std::vector<Point>& gens, const Point& x);

/// The unique minimal generating set of the monoid generated by `gens`:
/// an element is dropped iff it is a N-combination of the others.
std::vector<Point> reduce_generating_set(std::vector<Point> gens);

}  // namespace semiq
