#pragma once

#include <map>
#include <optional>
#include <string>

#include "motstats/euler.hpp"
#include "motstats/lclass.hpp"

namespace motstats {

struct DensityReport {
    std::optional<LClass> exact;         // present when the density is a finite expression
    FilteredClass truncated;
    std::optional<EulerFactorSpec> spec; // the product that was evaluated, when one was
    std::map<std::string, std::string> metadata;
};

LClass projective_class(int n); // 1 + L + ... + L^n
LClass affine_class(int n);     // L^n

// limit density of smooth hypersurface sections: prod_j (1 - L^{j - dimX - 1})^{c_j}
DensityReport vakil_wood_density(const LClass& x, int dimX);

// prod_{j=0}^{k-1} (1 - L^{-n+j})
LClass lnk(int n, int k);

DensityReport complete_intersection_density(int n, int k, long floor);

DensityReport m_singular_density(const LClass& x, int dimX, int m, long floor);

struct SurjectionReport {
    DensityReport product_side; // Euler product evaluated by the engine
    DensityReport zeta_side;    // product of special values
    FilteredClass residual;     // difference, zero above the floor iff they agree
};
SurjectionReport surjection_density(int n, long floor);

// (L^{n+1} - 1)(L^{n+1} - L) ... (L^{n+1} - L^n)
LClass gl_class(int n);

// class of smooth degree-d binary forms
LClass p1_smooth_class(int d);

} // namespace motstats
