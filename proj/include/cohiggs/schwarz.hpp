#pragma once

#include <string>

namespace cohiggs {

enum class Splitting { OplusOm1, OplusO, Tangent, Generic };

std::string splitting_name(Splitting s);

/// Bundle data of the k-th Schwarzenberger bundle: Chern numbers, the
/// small-k splitting type and h^1(End_0). The index k = 3 is excluded.
struct SchwarzInfo {
    int k = 0;
    int c1 = 0;        // (k - 1) H
    long c2 = 0;       // k(k-1)/2 H^2
    Splitting splitting = Splitting::Generic;
    long h1_end0 = 0;  // 0 for k <= 2, k^2 - 4 for k >= 4
};

/// Throws ExcludedIndex for k = 3, std::invalid_argument for k < 0.
SchwarzInfo schwarz_info(int k);

}  // namespace cohiggs
