#pragma once

#include <string>
#include <vector>

#include "cerf/error.hpp"
#include "cerf/integer_matrix.hpp"
#include "cerf/surface.hpp"

namespace cerf {

/// Finitely generated abelian group Z^rank + sum of Z/t.
struct AbelianGroupDescriptor {
    int rank = 0;
    std::vector<Integer> torsion; // invariant factors > 1, each dividing the next

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const AbelianGroupDescriptor&) const = default;
};

/// Cokernel of the homomorphism Z^rows -> Z^cols given by the row lattice of m.
AbelianGroupDescriptor row_cokernel(const IntMatrix& m);

/// g x g matrix [<alpha_i, beta_j>].
IntMatrix pairing_matrix(const CutSystem& alpha, const CutSystem& beta, const SymplecticLattice& lattice);

/// H1 of the 3-manifold obtained by gluing the two handlebodies.
AbelianGroupDescriptor heegaard_h1(const CutSystem& alpha, const CutSystem& beta, const SymplecticLattice& lattice);

struct TrisectionDiagram {
    int g = 0;
    int k = 0;
    CutSystem alpha, beta, gamma;

    SymplecticLattice lattice() const { return SymplecticLattice(g); }
    bool operator==(const TrisectionDiagram&) const = default;
};

ValidationReport validate_trisection(const TrisectionDiagram& t);

int trisection_euler_characteristic(int g, int k);

/// H1(X) = Z^2g / (L_alpha + L_beta + L_gamma).
AbelianGroupDescriptor trisection_h1(const TrisectionDiagram& t);

/// Signature of the Wall form on {(a,b,c) : a+b+c = 0} with Psi = <a, b'>.
int wall_signature(const LagrangianSublattice& la, const LagrangianSublattice& lb, const LagrangianSublattice& lc,
                   const SymplecticLattice& lattice);
/// Same form, for three isotropic row bases (rows need not be saturated).
int wall_signature(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const SymplecticLattice& lattice);

/// Global orientation sign applied to trisection signatures. Fixed so the
/// diagram (a1, b1, a1+b1) has signature +1.
inline constexpr int kSignatureOrientation = 1;

int trisection_signature(const TrisectionDiagram& t);

/// Signature of a closed loop of handlebodies L0, L1, ..., L(n-1), L0 by the
/// fan sum over triangles (L0, Li, Li+1).
int loop_signature(const std::vector<LagrangianSublattice>& loop, const SymplecticLattice& lattice);

} // namespace cerf
