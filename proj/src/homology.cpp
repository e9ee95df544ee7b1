#include "strathom/homology.hpp"

#include <algorithm>

#include "strathom/errors.hpp"

namespace strathom {

void IntegerChainComplex::validate() const {
    for (int d = 0; d <= top_degree(); ++d) {
        const IntMatrix& del = boundaries[static_cast<std::size_t>(d)];
        if (d == 0) {
            if (del.rows() != 0) throw ValidationError("boundary in degree 0 must have zero rows");
            continue;
        }
        const IntMatrix& prev = boundaries[static_cast<std::size_t>(d - 1)];
        if (prev.cols() != del.rows()) throw ValidationError("boundary shapes mismatch at degree " + std::to_string(d));
        if (prev.cols() > 0 && del.cols() > 0) {
            IntMatrix square = prev * del;
            if (!square.isZero())
                throw ValidationError("boundary squared is nonzero at degree " + std::to_string(d));
        }
    }
}

IntegerChainComplex chain_complex(const SimplicialComplex& k) {
    IntegerChainComplex c;
    for (int d = 0; d <= k.dim(); ++d) c.boundaries.push_back(boundary_matrix(k, d));
    return c;
}

std::string HomologySummary::str() const {
    std::string out = "(";
    for (int d = 0; d < size(); ++d) {
        if (d) out += "; ";
        const Entry e = at(d);
        out += std::to_string(e.betti);
        for (const Integer& t : e.torsion) out += "+Z/" + t.str();
    }
    return out + ")";
}

HomologySummary homology(const IntegerChainComplex& c) {
    c.validate();
    HomologySummary h;
    const int top = c.top_degree();
    if (top < 0) return h;
    std::vector<SmithDecomposition<Integer>> snf(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) snf[static_cast<std::size_t>(d)] = smith_normal_form(c.boundaries[static_cast<std::size_t>(d)]);
    h.degrees.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        const Index n = c.rank(d);
        const Index rank_out = snf[static_cast<std::size_t>(d)].rank();
        const Index rank_in = d < top ? snf[static_cast<std::size_t>(d + 1)].rank() : 0;
        HomologySummary::Entry& e = h.degrees[static_cast<std::size_t>(d)];
        e.betti = static_cast<long long>(n - rank_out - rank_in);
        if (d < top) {
            for (const Integer& f : snf[static_cast<std::size_t>(d + 1)].diagonal)
                if (f > 1) e.torsion.push_back(f);
            std::sort(e.torsion.begin(), e.torsion.end());
        }
    }
    while (!h.degrees.empty() && h.degrees.back().is_zero()) h.degrees.pop_back();
    return h;
}

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

std::vector<long long> homology_field(const IntegerChainComplex& c, long long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw ValidationError("field characteristic must be 0 or a prime");
    c.validate();
    const int top = c.top_degree();
    std::vector<long long> dims(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
    for (int d = 0; d <= top; ++d) {
        const Index n = c.rank(d);
        const Index rank_out = smith_normal_form(c.boundaries[static_cast<std::size_t>(d)]).rank_over(characteristic);
        const Index rank_in =
            d < top ? smith_normal_form(c.boundaries[static_cast<std::size_t>(d + 1)]).rank_over(characteristic) : 0;
        dims[static_cast<std::size_t>(d)] = static_cast<long long>(n - rank_out - rank_in);
    }
    return dims;
}

HomologySummary truncate(const HomologySummary& h, long long ell) {
    HomologySummary out;
    if (ell < 0) return out;
    for (int d = 0; d <= std::min<long long>(ell, h.size() - 1); ++d) out.degrees.push_back(h.at(d));
    while (!out.degrees.empty() && out.degrees.back().is_zero()) out.degrees.pop_back();
    return out;
}

HomologySummary::Entry group_entry(const PresentedGroup& g) {
    auto snf = smith_normal_form(g.relations);
    HomologySummary::Entry e;
    e.betti = static_cast<long long>(g.generators - snf.rank());
    for (const Integer& f : snf.diagonal)
        if (f > 1) e.torsion.push_back(f);
    std::sort(e.torsion.begin(), e.torsion.end());
    return e;
}

bool GroupHom::well_defined() const {
    if (domain->relations.cols() == 0) return true;
    IntMatrix image = matrix * domain->relations;
    return lattice_contains<Integer>(codomain->relations, image);
}

bool GroupHom::injective() const {
    // kernel: preimage of the codomain relations, which must lie in the
    // domain relations
    IntMatrix kernel = preimage_lattice<Integer>(matrix, codomain->relations);
    return lattice_contains<Integer>(domain->relations, kernel);
}

bool GroupHom::surjective() const {
    IntMatrix generated = lattice_sum<Integer>(matrix, codomain->relations);
    IntMatrix everything = IntMatrix::Identity(codomain->generators, codomain->generators);
    return lattice_equal<Integer>(generated, everything);
}

bool exact_at(const GroupHom& f, const GroupHom& g) {
    // image of f and kernel of g, both as lattices in the middle group's
    // generator space, compared after adding the middle relations
    const PresentedGroup& middle = *f.codomain;
    IntMatrix image = lattice_sum<Integer>(f.matrix, middle.relations);
    IntMatrix kernel_raw = preimage_lattice<Integer>(g.matrix, g.codomain->relations);
    IntMatrix kernel = lattice_sum<Integer>(kernel_raw, middle.relations);
    return lattice_equal<Integer>(image, kernel);
}

HomologyPresentation homology_presentation(const IntegerChainComplex& c) {
    c.validate();
    HomologyPresentation out;
    const int top = c.top_degree();
    if (top < 0) return out;
    out.cycle_bases.resize(static_cast<std::size_t>(top + 1));
    out.groups.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        const IntMatrix& del = c.boundaries[static_cast<std::size_t>(d)];
        IntMatrix cycles = d == 0 ? IntMatrix(IntMatrix::Identity(c.rank(0), c.rank(0))) : kernel_basis(del);
        IntMatrix image =
            d < top ? IntMatrix(c.boundaries[static_cast<std::size_t>(d + 1)]) : IntMatrix(c.rank(d), 0);
        PresentedGroup g;
        g.generators = cycles.cols();
        g.relations = coordinates_in_basis(cycles, image);
        out.cycle_bases[static_cast<std::size_t>(d)] = std::move(cycles);
        out.groups[static_cast<std::size_t>(d)] = std::move(g);
    }
    return out;
}

IntMatrix coordinates_in_basis(const IntMatrix& basis, const IntMatrix& vectors) {
    if (vectors.cols() == 0) return IntMatrix(basis.cols(), 0);
    auto solved = solve_integer<Integer>(basis, vectors);
    if (!solved) throw ValidationError("vector does not lie in the spanned subgroup");
    return *solved;
}

}  // namespace strathom
