#include "strathom/mayer_vietoris.hpp"

#include <algorithm>
#include <set>

#include "strathom/errors.hpp"

namespace strathom {

namespace {

/// A chain complex presented by per-degree bases inside the ambient
/// simplicial chain groups of the total complex.
struct BasedComplex {
    std::vector<IntMatrix> bases;  // bases[d]: C_d(X) coordinates x rank
    IntegerChainComplex reduced;
};

BasedComplex make_based(const IntegerChainComplex& ambient, std::vector<IntMatrix> bases) {
    BasedComplex out;
    out.bases = std::move(bases);
    out.reduced.boundaries.resize(out.bases.size());
    if (out.bases.empty()) return out;
    out.reduced.boundaries[0] = IntMatrix(0, out.bases[0].cols());
    for (std::size_t d = 1; d < out.bases.size(); ++d) {
        const IntMatrix image = ambient.boundaries[d] * out.bases[d];
        out.reduced.boundaries[d] = coordinates_in_basis(out.bases[d - 1], image);
    }
    out.reduced.validate();
    return out;
}

/// 0/1 inclusion of the chain group of a subcomplex into the ambient one.
IntMatrix inclusion_matrix(const SimplicialComplex& x, const SimplicialComplex& sub, int d) {
    IntMatrix incl = IntMatrix::Zero(x.count(d), sub.count(d));
    const auto& simplices = sub.simplices(d);
    for (Index c = 0; c < sub.count(d); ++c) incl(x.index_of(simplices[static_cast<std::size_t>(c)]), c) = 1;
    return incl;
}

SimplicialComplex intersection_of(const SimplicialComplex& x, const SimplicialComplex& u, const SimplicialComplex& v) {
    std::vector<Simplex> common;
    for (int d = 0; d <= std::min(u.dim(), v.dim()); ++d)
        for (const Simplex& s : u.simplices(d))
            if (v.contains(s)) common.push_back(s);
    return build_complex(x.vertex_count(), common);
}

struct Pieces {
    BasedComplex w, u, v, pair, sum, total;
};

GroupHom induced_map(const HomologyPresentation& dom, const HomologyPresentation& cod,
                     const IntMatrix& chain_map, int degree, const PresentedGroup& zero) {
    GroupHom h;
    const bool dom_has = degree >= 0 && degree < static_cast<int>(dom.groups.size());
    const bool cod_has = degree >= 0 && degree < static_cast<int>(cod.groups.size());
    h.domain = dom_has ? &dom.groups[static_cast<std::size_t>(degree)] : &zero;
    h.codomain = cod_has ? &cod.groups[static_cast<std::size_t>(degree)] : &zero;
    if (!dom_has || !cod_has) {
        h.matrix = IntMatrix(h.codomain->generators, h.domain->generators);
        return h;
    }
    const IntMatrix image = chain_map * dom.cycle_bases[static_cast<std::size_t>(degree)];
    h.matrix = coordinates_in_basis(cod.cycle_bases[static_cast<std::size_t>(degree)], image);
    return h;
}

MayerVietorisPart run_part(const IntegerChainComplex& ambient, const Pieces& pieces) {
    MayerVietorisPart part;
    const int top = static_cast<int>(ambient.boundaries.size()) - 1;

    part.intersection_homology = homology(pieces.w.reduced);
    part.left_homology = homology(pieces.u.reduced);
    part.right_homology = homology(pieces.v.reduced);
    part.sum_homology = homology(pieces.sum.reduced);
    part.total_homology = homology(pieces.total.reduced);

    // chain maps in the reduced coordinates
    std::vector<IntMatrix> to_pair(static_cast<std::size_t>(top + 1));
    std::vector<IntMatrix> to_sum(static_cast<std::size_t>(top + 1));
    std::vector<IntMatrix> to_total(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        const std::size_t sd = static_cast<std::size_t>(d);
        const IntMatrix& bw = pieces.w.bases[sd];
        const IntMatrix& bu = pieces.u.bases[sd];
        const IntMatrix& bv = pieces.v.bases[sd];
        IntMatrix signed_diag(bw.rows() * 2, bw.cols());
        signed_diag << bw, -bw;
        to_pair[sd] = coordinates_in_basis(pieces.pair.bases[sd], signed_diag);
        IntMatrix added(bu.rows(), bu.cols() + bv.cols());
        added << bu, bv;
        to_sum[sd] = coordinates_in_basis(pieces.sum.bases[sd], added);
        to_total[sd] = coordinates_in_basis(pieces.total.bases[sd], pieces.sum.bases[sd]);
    }

    HomologyPresentation w_pres = homology_presentation(pieces.w.reduced);
    HomologyPresentation pair_pres = homology_presentation(pieces.pair.reduced);
    HomologyPresentation sum_pres = homology_presentation(pieces.sum.reduced);
    HomologyPresentation total_pres = homology_presentation(pieces.total.reduced);
    const PresentedGroup zero{0, IntMatrix(0, 0)};

    // connecting homomorphisms: split a cycle of the sum, take the boundary
    // of the left half, read it in the intersection
    std::vector<GroupHom> delta(static_cast<std::size_t>(top + 2));
    for (int k = 0; k <= top + 1; ++k) {
        GroupHom h;
        const bool dom_has = k <= top && k < static_cast<int>(sum_pres.groups.size());
        const bool cod_has = k >= 1 && k - 1 < static_cast<int>(w_pres.groups.size());
        h.domain = dom_has ? &sum_pres.groups[static_cast<std::size_t>(k)] : &zero;
        h.codomain = cod_has ? &w_pres.groups[static_cast<std::size_t>(k - 1)] : &zero;
        if (!dom_has || !cod_has) {
            h.matrix = IntMatrix(h.codomain->generators, h.domain->generators);
            delta[static_cast<std::size_t>(k)] = std::move(h);
            continue;
        }
        const std::size_t sk = static_cast<std::size_t>(k);
        const IntMatrix cycles = pieces.sum.bases[sk] * sum_pres.cycle_bases[sk];  // ambient coords
        const IntMatrix& bu = pieces.u.bases[sk];
        const IntMatrix& bv = pieces.v.bases[sk];
        IntMatrix joined(bu.rows(), bu.cols() + bv.cols());
        joined << bu, bv;
        auto split = solve_integer<Integer>(joined, cycles);
        if (!split) throw ValidationError("sum cycle failed to split across the cover");
        const IntMatrix left = bu * split->topRows(bu.cols());
        const IntMatrix boundary = ambient.boundaries[sk] * left;
        const IntMatrix in_w = coordinates_in_basis(pieces.w.bases[sk - 1], boundary);
        h.matrix = coordinates_in_basis(w_pres.cycle_bases[sk - 1], in_w);
        delta[static_cast<std::size_t>(k)] = std::move(h);
    }

    for (int d = 0; d <= top; ++d) {
        const std::size_t sd = static_cast<std::size_t>(d);
        MayerVietorisDegree row;
        row.degree = d;

        // short exactness at the chain level
        row.chain_injective = kernel_basis(to_pair[sd]).cols() == 0;
        const IntMatrix ker_j = kernel_basis(to_sum[sd]);
        row.chain_middle_exact = lattice_equal<Integer>(to_pair[sd], ker_j);
        const IntMatrix everything = IntMatrix::Identity(pieces.sum.reduced.rank(d), pieces.sum.reduced.rank(d));
        row.chain_surjective = lattice_equal<Integer>(to_sum[sd], everything);

        GroupHom i_star = induced_map(w_pres, pair_pres, to_pair[sd], d, zero);
        GroupHom j_star = induced_map(pair_pres, sum_pres, to_sum[sd], d, zero);
        row.exact_at_pair = exact_at(i_star, j_star);
        row.exact_at_union = exact_at(j_star, delta[sd]);
        row.exact_at_intersection = exact_at(delta[static_cast<std::size_t>(d + 1)], i_star);
        part.degrees.push_back(row);
    }

    part.sum_inclusion_quasi_iso = true;
    for (int d = 0; d <= top; ++d) {
        GroupHom incl = induced_map(sum_pres, total_pres, to_total[static_cast<std::size_t>(d)], d, zero);
        if (!incl.isomorphism()) part.sum_inclusion_quasi_iso = false;
    }
    return part;
}

std::vector<IntMatrix> inclusion_bases(const SimplicialComplex& x, const SimplicialComplex& sub, int top) {
    std::vector<IntMatrix> bases(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) bases[static_cast<std::size_t>(d)] = inclusion_matrix(x, sub, d);
    return bases;
}

std::vector<IntMatrix> pushed_bases(const SimplicialComplex& x, const SimplicialComplex& sub,
                                    const IntersectionChainComplex& ic, int top) {
    std::vector<IntMatrix> bases(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        const std::size_t sd = static_cast<std::size_t>(d);
        if (d < static_cast<int>(ic.basis.size()))
            bases[sd] = inclusion_matrix(x, sub, d) * ic.basis[sd];
        else
            bases[sd] = IntMatrix(x.count(d), 0);
    }
    return bases;
}

std::vector<IntMatrix> summed_bases(const std::vector<IntMatrix>& a, const std::vector<IntMatrix>& b) {
    std::vector<IntMatrix> out(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) out[d] = lattice_sum<Integer>(a[d], b[d]);
    return out;
}

std::vector<IntMatrix> block_diagonal_bases(const std::vector<IntMatrix>& a, const std::vector<IntMatrix>& b) {
    std::vector<IntMatrix> out(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) {
        const IntMatrix& ba = a[d];
        const IntMatrix& bb = b[d];
        IntMatrix block = IntMatrix::Zero(ba.rows() + bb.rows(), ba.cols() + bb.cols());
        block.topLeftCorner(ba.rows(), ba.cols()) = ba;
        block.bottomRightCorner(bb.rows(), bb.cols()) = bb;
        out[d] = std::move(block);
    }
    return out;
}

/// The ambient complex doubled, for the direct-sum column of the sequence.
IntegerChainComplex doubled(const IntegerChainComplex& ambient) {
    IntegerChainComplex out;
    out.boundaries.resize(ambient.boundaries.size());
    for (std::size_t d = 0; d < ambient.boundaries.size(); ++d) {
        const IntMatrix& del = ambient.boundaries[d];
        IntMatrix block = IntMatrix::Zero(del.rows() * 2, del.cols() * 2);
        block.topLeftCorner(del.rows(), del.cols()) = del;
        block.bottomRightCorner(del.rows(), del.cols()) = del;
        out.boundaries[d] = std::move(block);
    }
    return out;
}

}  // namespace

MayerVietorisReport mayer_vietoris_check(const StratifiedComplex& x, const SimplicialComplex& u,
                                         const SimplicialComplex& v, const Perversity& p) {
    if (!is_subcomplex(x.complex, u) || u.vertex_count() != x.complex.vertex_count() ||
        !is_subcomplex(x.complex, v) || v.vertex_count() != x.complex.vertex_count())
        throw ValidationError("cover pieces must be subcomplexes on the same vertex set");
    for (int d = 0; d <= x.complex.dim(); ++d)
        for (const Simplex& s : x.complex.simplices(d))
            if (!u.contains(s) && !v.contains(s))
                throw ValidationError("cover condition fails: the pieces do not cover the complex");
    validate_perversity(x, p);

    const SimplicialComplex w = intersection_of(x.complex, u, v);
    const IntegerChainComplex ambient = chain_complex(x.complex);
    const IntegerChainComplex ambient2 = doubled(ambient);
    const int top = x.complex.dim();

    MayerVietorisReport report;
    if (top < 0) return report;

    {  // ordinary chains
        Pieces pieces;
        auto bw = inclusion_bases(x.complex, w, top);
        auto bu = inclusion_bases(x.complex, u, top);
        auto bv = inclusion_bases(x.complex, v, top);
        pieces.w = make_based(ambient, bw);
        pieces.u = make_based(ambient, bu);
        pieces.v = make_based(ambient, bv);
        pieces.pair = make_based(ambient2, block_diagonal_bases(bu, bv));
        pieces.sum = make_based(ambient, summed_bases(bu, bv));
        std::vector<IntMatrix> identity(static_cast<std::size_t>(top + 1));
        for (int d = 0; d <= top; ++d)
            identity[static_cast<std::size_t>(d)] = IntMatrix::Identity(x.complex.count(d), x.complex.count(d));
        pieces.total = make_based(ambient, identity);
        report.ordinary = run_part(ambient, pieces);
    }

    {  // intersection chains with induced perversities
        RestrictionResult ru = restrict_to(x, u);
        RestrictionResult rv = restrict_to(x, v);
        RestrictionResult rw = restrict_to(x, w);
        IntersectionChainComplex icu = intersection_chain_complex(ru.space, induced_perversity(ru, x, p));
        IntersectionChainComplex icv = intersection_chain_complex(rv.space, induced_perversity(rv, x, p));
        IntersectionChainComplex icw = intersection_chain_complex(rw.space, induced_perversity(rw, x, p));
        IntersectionChainComplex icx = intersection_chain_complex(x, p);

        Pieces pieces;
        auto bw = pushed_bases(x.complex, w, icw, top);
        auto bu = pushed_bases(x.complex, u, icu, top);
        auto bv = pushed_bases(x.complex, v, icv, top);
        pieces.w = make_based(ambient, bw);
        pieces.u = make_based(ambient, bu);
        pieces.v = make_based(ambient, bv);
        pieces.pair = make_based(ambient2, block_diagonal_bases(bu, bv));
        pieces.sum = make_based(ambient, summed_bases(bu, bv));
        std::vector<IntMatrix> bx(static_cast<std::size_t>(top + 1));
        for (int d = 0; d <= top; ++d) {
            const std::size_t sd = static_cast<std::size_t>(d);
            bx[sd] = d < static_cast<int>(icx.basis.size()) ? icx.basis[sd] : IntMatrix(x.complex.count(d), 0);
        }
        pieces.total = make_based(ambient, bx);
        report.intersection = run_part(ambient, pieces);
    }
    return report;
}

}  // namespace strathom
