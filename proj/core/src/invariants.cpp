#include "cerf/invariants.hpp"

#include <algorithm>

namespace cerf {

std::string AbelianGroupDescriptor::to_string() const {
    std::string out;
    if (rank > 0) out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (Integer t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(t);
    }
    return out.empty() ? "0" : out;
}

AbelianGroupDescriptor row_cokernel(const IntMatrix& m) {
    AbelianGroupDescriptor group;
    if (m.rows() == 0) {
        group.rank = static_cast<int>(m.cols());
        return group;
    }
    const auto factors = invariant_factors(m);
    group.rank = static_cast<int>(m.cols() - factors.size());
    for (Integer d : factors)
        if (d > 1) group.torsion.push_back(d);
    return group;
}

IntMatrix pairing_matrix(const CutSystem& alpha, const CutSystem& beta, const SymplecticLattice& lattice) {
    IntMatrix m(alpha.size(), beta.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < beta.size(); ++j)
            m(i, j) = intersection_pairing(alpha.curves[i], beta.curves[j], lattice);
    return m;
}

AbelianGroupDescriptor heegaard_h1(const CutSystem& alpha, const CutSystem& beta, const SymplecticLattice& lattice) {
    validate_cut_system(alpha, lattice).throw_if_failed();
    validate_cut_system(beta, lattice).throw_if_failed();
    return row_cokernel(pairing_matrix(alpha, beta, lattice));
}

ValidationReport validate_trisection(const TrisectionDiagram& t) {
    ValidationReport report;
    if (t.g < 0 || t.k < 0) {
        report.add("INVALID_GENUS", "g and k must be non-negative");
        return report;
    }
    if (t.k > t.g) report.add("K_EXCEEDS_G", "k = " + std::to_string(t.k) + " exceeds g = " + std::to_string(t.g));
    const SymplecticLattice lattice(t.g);
    const char* names[] = {"alpha", "beta", "gamma"};
    const CutSystem* systems[] = {&t.alpha, &t.beta, &t.gamma};
    bool all_valid = true;
    for (int i = 0; i < 3; ++i) {
        auto r = validate_cut_system(*systems[i], lattice);
        all_valid = all_valid && r.ok();
        report.merge(r, std::string(names[i]) + ": ");
    }
    if (!all_valid) return report;

    AbelianGroupDescriptor expected;
    expected.rank = t.k;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const auto h1 = row_cokernel(pairing_matrix(*systems[i], *systems[j], lattice));
        if (h1 != expected)
            report.add("NOT_A_TRISECTION", std::string("(") + names[i] + "," + names[j] + ") presents " +
                                               h1.to_string() + ", expected " + expected.to_string());
    }
    return report;
}

int trisection_euler_characteristic(int g, int k) {
    if (k < 0 || g < k) throw Error("K_EXCEEDS_G", "need g >= k >= 0");
    return g - 3 * k + 2;
}

AbelianGroupDescriptor trisection_h1(const TrisectionDiagram& t) {
    validate_trisection(t).throw_if_failed();
    const SymplecticLattice lattice(t.g);
    IntMatrix stacked(3 * t.alpha.size(), lattice.rank());
    std::size_t r = 0;
    for (const CutSystem* cs : {&t.alpha, &t.beta, &t.gamma})
        for (const auto& c : cs->curves) {
            std::copy(c.coeffs().begin(), c.coeffs().end(), stacked.row(r).begin());
            ++r;
        }
    return row_cokernel(stacked);
}

namespace {

void check_isotropic(const IntMatrix& m, const SymplecticLattice& lattice) {
    if (m.cols() != lattice.rank()) throw Error("DIMENSION_MISMATCH", "basis width does not match lattice rank");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.rows(); ++j)
            if (intersection_pairing(HomologyClass(m.row_vector(i)), HomologyClass(m.row_vector(j)), lattice) != 0)
                throw Error("NOT_ISOTROPIC", "Wall form needs isotropic subspaces");
}

std::vector<Rational> combine(const std::vector<Rational>& coeffs, std::size_t offset, const IntMatrix& basis) {
    std::vector<Rational> out(basis.cols(), 0);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const Rational& c = coeffs[offset + i];
        if (c == 0) continue;
        for (std::size_t k = 0; k < basis.cols(); ++k) out[k] += c * basis(i, k);
    }
    return out;
}

Rational rational_pairing(const std::vector<Rational>& x, const std::vector<Rational>& y, int genus) {
    Rational total = 0;
    for (int i = 0; i < genus; ++i) total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
    return total;
}

} // namespace

int wall_signature(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const SymplecticLattice& lattice) {
    check_isotropic(a, lattice);
    check_isotropic(b, lattice);
    check_isotropic(c, lattice);
    const std::size_t n = lattice.rank();
    const std::size_t total = a.rows() + b.rows() + c.rows();
    if (total == 0 || n == 0) return 0;

    IntMatrix stacked(total, n);
    std::size_t r = 0;
    for (const IntMatrix* m : {&a, &b, &c})
        for (std::size_t i = 0; i < m->rows(); ++i, ++r)
            std::copy(m->row(i).begin(), m->row(i).end(), stacked.row(r).begin());

    // Each kernel vector (x | y | z) gives a = x.A, b = y.B, c = z.C with a+b+c = 0.
    const RationalMatrix kernel = rational_left_kernel(stacked);
    const std::size_t d = kernel.size();
    if (d == 0) return 0;
    std::vector<std::vector<Rational>> as, bs;
    for (const auto& v : kernel) {
        as.push_back(combine(v, 0, a));
        bs.push_back(combine(v, a.rows(), b));
    }
    RationalMatrix gram(d, std::vector<Rational>(d, 0));
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) gram[s][t] = rational_pairing(as[s], bs[t], lattice.genus());
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = s + 1; t < d; ++t)
            if (gram[s][t] != gram[t][s]) throw Error("INTERNAL", "Wall form is not symmetric");
    return symmetric_inertia(std::move(gram)).signature();
}

int wall_signature(const LagrangianSublattice& la, const LagrangianSublattice& lb, const LagrangianSublattice& lc,
                   const SymplecticLattice& lattice) {
    if (la.genus() != lattice.genus() || lb.genus() != lattice.genus() || lc.genus() != lattice.genus())
        throw Error("LATTICE_MISMATCH", "Lagrangians live on different lattices");
    return wall_signature(la.basis(), lb.basis(), lc.basis(), lattice);
}

int trisection_signature(const TrisectionDiagram& t) {
    validate_trisection(t).throw_if_failed();
    const SymplecticLattice lattice(t.g);
    return kSignatureOrientation * wall_signature(lagrangian_span(t.alpha, lattice), lagrangian_span(t.beta, lattice),
                                                  lagrangian_span(t.gamma, lattice), lattice);
}

int loop_signature(const std::vector<LagrangianSublattice>& loop, const SymplecticLattice& lattice) {
    int total = 0;
    for (std::size_t i = 1; i + 1 < loop.size(); ++i) total += wall_signature(loop[0], loop[i], loop[i + 1], lattice);
    return kSignatureOrientation * total;
}

} // namespace cerf
