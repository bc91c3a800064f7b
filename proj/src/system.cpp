// system.cpp
#include "mub/system.hpp"

#include <cmath>

namespace mub {

UnitVectorSystem::UnitVectorSystem(int d, std::vector<CVector> vectors,
                                   std::vector<std::string> labels)
    : d_(d), vectors_(std::move(vectors)), labels_(std::move(labels)) {
    if (d_ < 1) throw InvalidInput("UnitVectorSystem: dimension must be positive");
    if (vectors_.empty()) throw InvalidInput("UnitVectorSystem: no vectors");
    for (const CVector& v : vectors_) {
        if (v.dim() != d_) throw InvalidInput("UnitVectorSystem: vector dimension mismatch");
        if (std::abs(v.norm() - 1.0) > kUnitNormTol)
            throw InvalidInput("UnitVectorSystem: vector is not unit length");
    }
    if (!labels_.empty() && labels_.size() != vectors_.size())
        throw InvalidInput("UnitVectorSystem: label count mismatch");
}

}  // namespace mub
