#include "cohiggs/schwarz.hpp"

#include "cohiggs/errors.hpp"

#include <stdexcept>

namespace cohiggs {

std::string splitting_name(Splitting s) {
    switch (s) {
        case Splitting::OplusOm1: return "O+O(-1)";
        case Splitting::OplusO: return "O+O";
        case Splitting::Tangent: return "T";
        case Splitting::Generic: return "generic";
    }
    return "?";
}

SchwarzInfo schwarz_info(int k) {
    if (k < 0) throw std::invalid_argument("Schwarzenberger index must be nonnegative");
    if (k == 3) throw ExcludedIndex("k = 3 is excluded: V_3 depends on the branch conic");
    SchwarzInfo info;
    info.k = k;
    info.c1 = k - 1;
    info.c2 = static_cast<long>(k) * (k - 1) / 2;
    switch (k) {
        case 0: info.splitting = Splitting::OplusOm1; break;
        case 1: info.splitting = Splitting::OplusO; break;
        case 2: info.splitting = Splitting::Tangent; break;
        default: info.splitting = Splitting::Generic; break;
    }
    info.h1_end0 = (k <= 2) ? 0 : static_cast<long>(k) * k - 4;
    return info;
}

}  // namespace cohiggs
