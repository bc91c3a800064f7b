// system.hpp — collections of unit vectors in a fixed ambient dimension.
#pragma once

#include <string>
#include <vector>

#include "mub/cxla.hpp"

namespace mub {

// Norm tolerance applied to every vector admitted into a system.
inline constexpr double kUnitNormTol = 1e-9;

// n unit vectors in C^d. Labels are optional provenance strings (empty, or one
// per vector).
class UnitVectorSystem {
public:
    UnitVectorSystem() = default;
    // Validates: d >= 1, every vector has dimension d and unit norm within
    // kUnitNormTol, labels empty or matching the vector count.
    UnitVectorSystem(int d, std::vector<CVector> vectors, std::vector<std::string> labels = {});

    int d() const { return d_; }
    int n() const { return static_cast<int>(vectors_.size()); }
    const std::vector<CVector>& vectors() const { return vectors_; }
    const CVector& vector(int i) const { return vectors_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    int d_ = 0;
    std::vector<CVector> vectors_;
    std::vector<std::string> labels_;
};

}  // namespace mub
