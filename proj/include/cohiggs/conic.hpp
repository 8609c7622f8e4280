#pragma once

#include "cohiggs/sections.hpp"

#include <vector>

namespace cohiggs {

/// Rank classification of a nonzero conic q in H^0(O(2)):
///   rank 1: double line, q = l^2 (the line is returned);
///   rank 2: two distinct lines, q = l1 * l2 (both returned, exact, possibly
///           after adjoining one square root);
///   rank 3: irreducible, no factors.
struct ConicClass {
    int rank = 0;
    std::vector<HomogeneousForm3> factors;  // degree-1 forms, empty for rank 3
};

/// Symmetric 3x3 coefficient matrix of the conic (off-diagonal entries are
/// half the mixed coefficients).
ScalarMatrix conic_matrix(const SectionOk& q);

ConicClass conic_rank(const SectionOk& q);

}  // namespace cohiggs
