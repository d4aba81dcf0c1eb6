#include "cerf/surface.hpp"

#include <algorithm>
#include <string>

namespace cerf {

bool HomologyClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Integer x) { return x == 0; });
}

HomologyClass HomologyClass::operator-() const {
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(0, coeffs_[i]);
    return HomologyClass(std::move(out));
}

HomologyClass operator+(const HomologyClass& x, const HomologyClass& y) {
    if (x.size() != y.size()) throw Error("DIMENSION_MISMATCH", "adding classes of different rank");
    std::vector<Integer> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(x[i], y[i]);
    return HomologyClass(std::move(out));
}

HomologyClass operator-(const HomologyClass& x, const HomologyClass& y) { return x + (-y); }

HomologyClass operator*(Integer s, const HomologyClass& x) {
    std::vector<Integer> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(s, x[i]);
    return HomologyClass(std::move(out));
}

std::string HomologyClass::label() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer c = coeffs_[k];
        if (c == 0) continue;
        if (c < 0) out += '-';
        else if (!out.empty()) out += '+';
        if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
        out += (k % 2 == 0 ? 'a' : 'b');
        out += std::to_string(k / 2 + 1);
    }
    return out.empty() ? "0" : out;
}

bool same_up_to_sign(const HomologyClass& x, const HomologyClass& y) {
    return x == y || x == -y;
}

SymplecticLattice::SymplecticLattice(int genus) : genus_(genus) {
    if (genus < 0) throw Error("INVALID_GENUS", "genus must be non-negative");
}

HomologyClass SymplecticLattice::a(int i) const {
    if (i < 0 || i >= genus_) throw Error("INDEX_OUT_OF_RANGE", "handle index out of range");
    auto x = HomologyClass::zero(rank());
    std::vector<Integer> c = x.coeffs();
    c[2 * i] = 1;
    return HomologyClass(std::move(c));
}

HomologyClass SymplecticLattice::b(int i) const {
    if (i < 0 || i >= genus_) throw Error("INDEX_OUT_OF_RANGE", "handle index out of range");
    std::vector<Integer> c(rank(), 0);
    c[2 * i + 1] = 1;
    return HomologyClass(std::move(c));
}

std::string SymplecticLattice::basis_label(std::size_t k) const {
    return std::string(1, k % 2 == 0 ? 'a' : 'b') + std::to_string(k / 2 + 1);
}

IntMatrix SymplecticLattice::form() const {
    IntMatrix j(rank(), rank());
    for (int i = 0; i < genus_; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

Integer intersection_pairing(const HomologyClass& x, const HomologyClass& y, const SymplecticLattice& lattice) {
    if (x.size() != lattice.rank() || y.size() != lattice.rank())
        throw Error("DIMENSION_MISMATCH", "class length does not match lattice rank " + std::to_string(lattice.rank()));
    Integer total = 0;
    for (int i = 0; i < lattice.genus(); ++i) {
        const std::size_t a = 2 * i, b = 2 * i + 1;
        total = checked_add(total, checked_sub(checked_mul(x[a], y[b]), checked_mul(x[b], y[a])));
    }
    return total;
}

IntMatrix CutSystem::matrix(std::size_t rank) const {
    IntMatrix m(curves.size(), rank);
    for (std::size_t r = 0; r < curves.size(); ++r) {
        if (curves[r].size() != rank) throw Error("DIMENSION_MISMATCH", "curve length does not match lattice rank");
        std::copy(curves[r].coeffs().begin(), curves[r].coeffs().end(), m.row(r).begin());
    }
    return m;
}

CutSystem standard_cut_system(const SymplecticLattice& lattice) {
    CutSystem cs;
    for (int i = 0; i < lattice.genus(); ++i) cs.curves.push_back(lattice.a(i));
    return cs;
}

bool equal_up_to_signs(const CutSystem& x, const CutSystem& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!same_up_to_sign(x.curves[i], y.curves[i])) return false;
    return true;
}

ValidationReport validate_cut_system(const CutSystem& cs, const SymplecticLattice& lattice) {
    ValidationReport report;
    const auto g = static_cast<std::size_t>(lattice.genus());
    if (cs.size() != g)
        report.add("WRONG_CURVE_COUNT",
                   "expected " + std::to_string(g) + " curves, found " + std::to_string(cs.size()));
    if (!cs.provenance.empty() && cs.provenance.size() != cs.size())
        report.add("PROVENANCE_SIZE", "provenance list length differs from curve count");

    bool dims_ok = true;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs.curves[i].size() != lattice.rank()) {
            report.add("DIMENSION_MISMATCH", "curve " + std::to_string(i) + " has length " +
                                                 std::to_string(cs.curves[i].size()) + ", expected " +
                                                 std::to_string(lattice.rank()));
            dims_ok = false;
        }
    if (!dims_ok) return report;

    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const Integer p = intersection_pairing(cs.curves[i], cs.curves[j], lattice);
            if (p != 0)
                report.add("NOT_ISOTROPIC", "curves " + std::to_string(i) + " and " + std::to_string(j) +
                                                " have algebraic intersection " + std::to_string(p));
        }

    if (cs.size() > 0) {
        const auto factors = invariant_factors(cs.matrix(lattice.rank()));
        const bool unit = std::all_of(factors.begin(), factors.end(), [](Integer d) { return d == 1; });
        if (factors.size() != cs.size())
            report.add("RANK_DEFICIENT", "curves span rank " + std::to_string(factors.size()) + " < " +
                                             std::to_string(cs.size()));
        else if (!unit)
            report.add("NOT_SATURATED", "curve span is not a primitive sublattice");
    }
    return report;
}

bool LagrangianSublattice::contains(const HomologyClass& x) const {
    if (basis_.rows() == 0) return x.is_zero();
    IntMatrix extended(basis_.rows() + 1, basis_.cols());
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        std::copy(basis_.row(r).begin(), basis_.row(r).end(), extended.row(r).begin());
    if (x.size() != basis_.cols()) throw Error("DIMENSION_MISMATCH", "class length does not match sublattice");
    std::copy(x.coeffs().begin(), x.coeffs().end(), extended.row(basis_.rows()).begin());
    return hermite_normal_form(extended) == basis_;
}

LagrangianSublattice lagrangian_span(const CutSystem& cs, const SymplecticLattice& lattice) {
    auto report = validate_cut_system(cs, lattice);
    if (!report.ok()) throw Error("INVALID_CUT_SYSTEM", report.issues().front().message);
    if (cs.size() == 0) return LagrangianSublattice(lattice.genus(), IntMatrix(0, lattice.rank()));
    return LagrangianSublattice(lattice.genus(), hermite_normal_form(cs.matrix(lattice.rank())));
}

CutSystem slide(const CutSystem& cs, std::size_t target, std::size_t source, int sign, const SymplecticLattice& lattice) {
    if (target == source) throw Error("SLIDE_SAME_INDEX", "a curve cannot slide over itself");
    if (target >= cs.size() || source >= cs.size()) throw Error("INDEX_OUT_OF_RANGE", "slide index out of range");
    if (sign != 1 && sign != -1) throw Error("BAD_SIGN", "slide sign must be +1 or -1");
    const auto before = lagrangian_span(cs, lattice);

    CutSystem out = cs;
    out.curves[target] = cs.curves[target] + static_cast<Integer>(sign) * cs.curves[source];
    if (!out.provenance.empty() && !cs.provenance[target].empty() && !cs.provenance[source].empty())
        out.provenance[target] = cs.provenance[target] + (sign > 0 ? "+" : "-") + cs.provenance[source];

    if (lagrangian_span(out, lattice) != before) throw Error("INTERNAL", "slide changed the Lagrangian span");
    return out;
}

std::optional<std::vector<Integer>> coordinates_in(const CutSystem& cs, const HomologyClass& x,
                                                   const SymplecticLattice& lattice) {
    const std::size_t g = cs.size();
    if (x.size() != lattice.rank()) throw Error("DIMENSION_MISMATCH", "class length does not match lattice rank");
    if (g == 0) {
        if (x.is_zero()) return std::vector<Integer>{};
        return std::nullopt;
    }
    // U C V = [I | 0] gives the right inverse R = V [I; 0] U.
    const IntMatrix c = cs.matrix(lattice.rank());
    const auto snf = smith_normal_form(c);
    for (std::size_t i = 0; i < g; ++i)
        if (snf.D(i, i) != 1) throw Error("INVALID_CUT_SYSTEM", "curves do not span a primitive sublattice");
    IntMatrix embed(lattice.rank(), g);
    for (std::size_t i = 0; i < g; ++i) embed(i, i) = 1;
    const IntMatrix right_inverse = snf.V * embed * snf.U;

    IntMatrix row(1, lattice.rank());
    std::copy(x.coeffs().begin(), x.coeffs().end(), row.row(0).begin());
    const IntMatrix lambda = row * right_inverse;
    if (lambda * c != row) return std::nullopt;
    return lambda.row_vector(0);
}

} // namespace cerf
