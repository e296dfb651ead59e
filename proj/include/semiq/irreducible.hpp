#pragma once

#include <optional>
#include <vector>

#include "semiq/semigroup.hpp"

namespace semiq {

enum class Irreducibility { Symmetric, PseudoSymmetric, NotIrreducible };

std::string irreducibility_name(Irreducibility k);

/// Symmetric iff PF(S) = {Fb}, pseudo-symmetric iff PF(S) = {Fb, Fb/2}.
/// Requires a nonempty gap set.
Irreducibility classify(const CSemigroup& s);

/// Exhaustive complement characterizations over {x in C : x <= Fb}:
/// symmetric iff membership of x and Fb - x always disagree; the
/// pseudo-symmetric variant additionally needs Fb even and excludes Fb/2.
bool symmetric_by_complement(const CSemigroup& s);
bool pseudo_symmetric_by_complement(const CSemigroup& s);

/// Symmetric 2-fold cover with Frobenius element f. Requires every
/// coordinate of f odd and f - f_i - f_j in S for all pseudo-Frobenius
/// elements f_i, f_j. The three postconditions (symmetric, Fb = f, T/2 = S)
/// are verified before returning.
CSemigroup symmetric_double(const CSemigroup& s, const Point& f);

/// All f below `bound` that satisfy the symmetric_double hypotheses.
std::vector<Point> admissible_double_bounds(const CSemigroup& s, const Point& bound);

/// Pseudo-symmetric 2-fold cover of an irreducible semigroup, with Frobenius
/// element 2 Fb(S). Postconditions verified before returning.
CSemigroup pseudo_symmetric_cover(const CSemigroup& s);

/// pseudo_symmetric_cover(symmetric_double(s, f)): a pseudo-symmetric T' with
/// T'/4 = S.
CSemigroup fourth_pseudo_symmetric(const CSemigroup& s, const Point& f);

/// A pseudo-symmetric T with T/2 = s when s is irreducible, nullopt
/// otherwise.
std::optional<CSemigroup> irreducible_half_witness(const CSemigroup& s);

struct HalfClassification {
  Irreducibility kind = Irreducibility::NotIrreducible;
  Point frobenius_half;
  std::vector<Int> frobenius_mod4;  // per-coordinate residues of Fb(t/2)
};

/// Classification of t/2 for pseudo-symmetric t, with the mod-4 pattern of
/// its Frobenius element reported alongside.
HalfClassification half_dichotomy(const CSemigroup& t);

}  // namespace semiq
