#pragma once

#include <cstdint>
#include <vector>

#include "luinv/combinatorics.hpp"

namespace luinv {

/// r permutations of {0, ..., degree-1}, i.e. a homomorphism F_r -> S_degree.
struct PermTuple {
  int degree = 0;
  std::vector<Permutation> perms;
};

/// Default cap on the number of tuples a census may enumerate.
inline constexpr double kDefaultTupleBound = 2.0e6;

/// Whether the group generated by the tuple acts transitively on its points.
bool is_transitive(const PermTuple& t);

/// (degree!)^length, the number of tuples an enumeration visits.
double tuple_count(int length, int degree);

/// Conjugacy classes of index-d subgroups of the free group of rank r, counted
/// as transitive r-tuples in S_d up to simultaneous conjugation. Throws
/// EnumerationBoundError when d!^r exceeds `bound`.
std::uint64_t count_subgroup_classes(int rank, int index, double bound = kDefaultTupleBound);

/// Number of orbits of S_m acting by simultaneous conjugation on S_m^j,
/// counted by explicit orbit enumeration.
std::uint64_t conjugation_orbit_count(int tuple_length, int m, double bound = kDefaultTupleBound);

/// Orbit representatives (lexicographically smallest tuple of each orbit), in
/// increasing order. Same bound semantics as above.
std::vector<PermTuple> conjugation_orbit_representatives(int tuple_length, int m, bool transitive_only,
                                                         double bound = kDefaultTupleBound);

}  // namespace luinv
