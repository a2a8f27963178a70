#ifndef STARLAB_CORE_OPS_HPP
#define STARLAB_CORE_OPS_HPP

#include "starlab/family.hpp"

namespace starlab {

// All 2^n subsets of [n], canonical order. n <= 20 guards memory.
Family power_set(int n);

// ([n] choose r), canonical order. r > n gives the empty family; the
// C(n,r) <= kMaxFamilyMembers guard trips a size-limit error.
Family k_subsets(int n, int r);

// { A in F : |A| = r }.
Family slice(const Family& f, int r);

// F(x) = { A in F : x in A }. Callers decide whether an empty result counts
// as a star.
Family star(const Family& f, int x);

// Every two members share an element; the empty set fails against itself,
// so any family containing it is not intersecting.
bool is_intersecting(const Family& f);

// Every member of a intersects every member of b; vacuously true when
// either family is empty. Ground sizes must match.
bool are_cross_intersecting(const Family& a, const Family& b);

} // namespace starlab

#endif
