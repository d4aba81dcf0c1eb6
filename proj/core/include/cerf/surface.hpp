#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cerf/error.hpp"
#include "cerf/integer_matrix.hpp"

namespace cerf {

/// H1 class of a curve on the genus-g surface, in the basis a1,b1,...,ag,bg.
class HomologyClass {
public:
    HomologyClass() = default;
    explicit HomologyClass(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
    HomologyClass(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) {}

    static HomologyClass zero(std::size_t rank) { return HomologyClass(std::vector<Integer>(rank, 0)); }

    std::size_t size() const noexcept { return coeffs_.size(); }
    Integer operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    HomologyClass operator-() const;
    friend HomologyClass operator+(const HomologyClass& x, const HomologyClass& y);
    friend HomologyClass operator-(const HomologyClass& x, const HomologyClass& y);
    friend HomologyClass operator*(Integer s, const HomologyClass& x);

    auto operator<=>(const HomologyClass&) const = default;

    /// Human-readable form such as "a1+2b2".
    std::string label() const;

private:
    std::vector<Integer> coeffs_;
};

/// Equal up to sign: a cut curve and its reverse bound the same disk.
bool same_up_to_sign(const HomologyClass& x, const HomologyClass& y);

/// H1 of a closed oriented genus-g surface with the standard skew form
/// <a_i, b_i> = +1 and all other basis pairings zero.
class SymplecticLattice {
public:
    explicit SymplecticLattice(int genus);

    int genus() const noexcept { return genus_; }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(2 * genus_); }

    // 0-based handle index.
    HomologyClass a(int i) const;
    HomologyClass b(int i) const;
    std::string basis_label(std::size_t k) const;

    /// The 2g x 2g Gram matrix J.
    IntMatrix form() const;

    bool operator==(const SymplecticLattice&) const = default;

private:
    int genus_;
};

Integer intersection_pairing(const HomologyClass& x, const HomologyClass& y, const SymplecticLattice& lattice);

/// g curves spanning a unimodular Lagrangian; the homology shadow of a handlebody.
struct CutSystem {
    std::vector<HomologyClass> curves;
    /// Optional per-curve tags (e.g. the level circle a curve came from).
    std::vector<std::string> provenance;

    std::size_t size() const noexcept { return curves.size(); }
    IntMatrix matrix(std::size_t rank) const;
    bool operator==(const CutSystem&) const = default;
};

CutSystem standard_cut_system(const SymplecticLattice& lattice); // {a1,...,ag}

/// Curve-list equality up to per-curve sign (provenance ignored).
bool equal_up_to_signs(const CutSystem& x, const CutSystem& y);

ValidationReport validate_cut_system(const CutSystem& cs, const SymplecticLattice& lattice);

/// Canonical (Hermite-reduced) basis of a saturated isotropic sublattice.
class LagrangianSublattice {
public:
    LagrangianSublattice() = default;
    LagrangianSublattice(int genus, IntMatrix hermite_basis) : genus_(genus), basis_(std::move(hermite_basis)) {}

    int genus() const noexcept { return genus_; }
    const IntMatrix& basis() const noexcept { return basis_; }
    bool contains(const HomologyClass& x) const;

    bool operator==(const LagrangianSublattice&) const = default;

private:
    int genus_ = 0;
    IntMatrix basis_;
};

LagrangianSublattice lagrangian_span(const CutSystem& cs, const SymplecticLattice& lattice);

/// curve[target] <- curve[target] + sign * curve[source].
CutSystem slide(const CutSystem& cs, std::size_t target, std::size_t source, int sign, const SymplecticLattice& lattice);

/// Integer coordinates of x in the basis given by the curves of cs, if x
/// lies in their span.
std::optional<std::vector<Integer>> coordinates_in(const CutSystem& cs, const HomologyClass& x,
                                                   const SymplecticLattice& lattice);

} // namespace cerf
