#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strathom/complex.hpp"
#include "strathom/linalg.hpp"

namespace strathom {

/// A chain complex of finitely generated free abelian groups with integer
/// boundary matrices. boundaries[d] maps degree-d chains to degree-(d-1)
/// chains; boundaries[0] has zero rows.
struct IntegerChainComplex {
    std::vector<IntMatrix> boundaries;

    int top_degree() const { return static_cast<int>(boundaries.size()) - 1; }
    Index rank(int d) const {
        if (d < 0 || d > top_degree()) return 0;
        return boundaries[static_cast<std::size_t>(d)].cols();
    }
    /// Shape consistency and boundary-squared-zero; throws naming the degree.
    void validate() const;
};

/// The simplicial chain complex of a complex.
IntegerChainComplex chain_complex(const SimplicialComplex& k);

/// Integer homology of one chain complex, reported per degree as the Betti
/// rank together with the torsion coefficients in divisibility order.
struct HomologySummary {
    struct Entry {
        long long betti = 0;
        std::vector<Integer> torsion;

        bool operator==(const Entry&) const = default;
        bool is_zero() const { return betti == 0 && torsion.empty(); }
    };
    std::vector<Entry> degrees;

    Entry at(int d) const {
        if (d < 0 || d >= static_cast<int>(degrees.size())) return Entry{};
        return degrees[static_cast<std::size_t>(d)];
    }
    int size() const { return static_cast<int>(degrees.size()); }

    friend bool operator==(const HomologySummary& a, const HomologySummary& b) {
        const int top = std::max(a.size(), b.size());
        for (int d = 0; d < top; ++d)
            if (!(a.at(d) == b.at(d))) return false;
        return true;
    }

    std::string str() const;
};

HomologySummary homology(const IntegerChainComplex& c);
inline HomologySummary homology(const SimplicialComplex& k) { return homology(chain_complex(k)); }

/// Per-degree dimensions over Q (characteristic 0) or F_q (q prime).
std::vector<long long> homology_field(const IntegerChainComplex& c, long long characteristic);

/// Degrees <= ell copied, everything above zeroed; negative ell gives the
/// zero summary.
HomologySummary truncate(const HomologySummary& h, long long ell);

/// A finitely generated abelian group presented as Z^generators modulo the
/// column lattice of the relation matrix.
struct PresentedGroup {
    Index generators = 0;
    IntMatrix relations;  // generators x (number of relations)
};

HomologySummary::Entry group_entry(const PresentedGroup& g);

/// A homomorphism of presented groups: a matrix on generators that carries
/// the domain relations into the codomain relation lattice.
struct GroupHom {
    const PresentedGroup* domain = nullptr;
    const PresentedGroup* codomain = nullptr;
    IntMatrix matrix;  // codomain.generators x domain.generators

    bool well_defined() const;
    bool injective() const;
    bool surjective() const;
    bool isomorphism() const { return injective() && surjective(); }
};

/// Exactness of A --f--> B --g--> C at B: image of f equals kernel of g as
/// subgroups of B.
bool exact_at(const GroupHom& f, const GroupHom& g);

/// Homology with explicit cycle generators: degree d is presented on the
/// columns of cycle_bases[d] (a saturated basis of the cycle subgroup in
/// chain coordinates), with relations the boundaries expressed in it.
struct HomologyPresentation {
    std::vector<IntMatrix> cycle_bases;
    std::vector<PresentedGroup> groups;
};

HomologyPresentation homology_presentation(const IntegerChainComplex& c);

/// Coordinates of the given vectors in a saturated basis; throws when a
/// vector is outside the spanned subgroup.
IntMatrix coordinates_in_basis(const IntMatrix& basis, const IntMatrix& vectors);

}  // namespace strathom
