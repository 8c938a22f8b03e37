#pragma once

#include <cstdint>
#include <optional>

#include "carwb/catalog.hpp"

namespace carwb {

// Seed for every randomized-but-deterministic computation in the workbench.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// Orthonormal basis of {C : pi1(g) C = C pi2(g) and pi1(g)* C = C pi2(g)*},
// solved as the null space of the stacked vectorized Sylvester system.
LinearSubspace intertwiners(const Representation& pi1, const Representation& pi2,
                            double tol = kRankTol);

LinearSubspace commutant(const Representation& pi, double tol = kRankTol);

bool is_irreducible(const Representation& pi);

// The unitary polar factor of an invertible intertwiner, or nullopt when the
// representations are not unitarily equivalent. U satisfies
// U* pi1(g) U = pi2(g) within 1e-8 for every generator.
std::optional<Mat> are_equivalent(const Representation& pi1, const Representation& pi2,
                                  std::uint64_t seed = kDefaultSeed);

struct DecompositionReport {
    struct Block {
        Representation rep;
        int multiplicity = 1;
    };
    std::vector<Block> blocks;
    Mat change_of_basis;   // Q with Q* pi(g) Q = direct sum of the blocks in order
    double residual = 0.0; // worst off-block / reconstruction error
};

// Decomposition into irreducibles via spectral projections of a seeded random
// self-adjoint commutant element; equivalent blocks are grouped with
// multiplicities.
DecompositionReport decompose(const Representation& pi, std::uint64_t seed = kDefaultSeed);

// Linear dimension of the span of all words (with adjoints, including 1) in
// the selected generators, grown by word length until stable.
int generated_dim(const Representation& pi, const std::vector<int>& subset);

// lambda when the evaluated expression equals lambda * I within 1e-9.
std::optional<Complex> central_value(const Representation& pi, const std::vector<Term>& expr);

// Block-diagonal direct sum of representations of the same presentation.
Representation direct_sum(const Representation& a, const Representation& b);

// The 4x4 unitary carrying the x1 = 1/2 slice of the global family at
// (r1, x2, phi, phi1, phi2) onto its r1 = 0 normal form; the identity at r1 = 0.
Mat find_intertwining_unitary_l12(double r1, double x2, double phi, double phi1, double phi2);

}  // namespace carwb
