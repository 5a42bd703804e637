#pragma once

#include <span>

#include "luinv/exact.hpp"

namespace luinv {

// Grading: m is the half-degree. A degree-m invariant has degree m in the
// coefficients and m in their conjugates, i.e. real degree 2m.

/// d_{k,m} = sum over cycle types a of m of z(a)^{k-2}. For k = 1 the terms
/// are summed as exact rationals; the result is asserted integral.
Integer stable_dimension(int k, int m);

/// d_{k,m} = (chi_(m), (sum_lambda chi_lambda^2)^{k-1}), computed from the character table.
Integer stable_dimension_via_characters(int k, int m);

/// Dimension for k = local_dims.size() + 1 subsystems where subsystem i has
/// dimension local_dims[i] and the last (environment) subsystem is large enough
/// (at least m, or at least the product of the others). Only partitions with at
/// most local_dims[i] rows contribute to factor i.
Integer restricted_dimension(std::span<const int> local_dims, int m);

/// Dimension of degree-m mixed-state invariants on k subsystems; equals d_{k+1,m}.
Integer mixed_dimension(int k, int m);

}  // namespace luinv
