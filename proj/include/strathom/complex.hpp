#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/linalg.hpp"

namespace strathom {

/// A simplex is a strictly increasing tuple of vertex indices.
using Simplex = std::vector<int>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// All nonempty proper faces of a simplex, in (dimension, lex) order not
/// guaranteed; callers sort when they need determinism.
std::vector<Simplex> proper_faces(const Simplex& s);

/// Codimension-one faces in omission order: facet i omits the i-th vertex.
std::vector<Simplex> facets(const Simplex& s);

/// A finite abstract simplicial complex over vertices 0..vertex_count-1.
/// Simplices are stored face-closed, grouped by dimension and ordered
/// lexicographically within each dimension.
class SimplicialComplex {
public:
    SimplicialComplex() : vertex_count_(0) {}
    SimplicialComplex(int vertex_count, std::vector<Simplex> closed_simplices);

    int vertex_count() const { return vertex_count_; }
    /// Dimension of the complex; -1 when there are no simplices.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    Index simplex_count() const;
    Index count(int d) const {
        return d >= 0 && d <= dim() ? static_cast<Index>(by_dim_[static_cast<std::size_t>(d)].size()) : 0;
    }

    const std::vector<Simplex>& simplices(int d) const;
    /// Every simplex, ascending dimension, lexicographic within a dimension.
    std::vector<Simplex> all_simplices() const;

    bool contains(const Simplex& s) const;
    /// Position of s within its dimension class; throws if absent.
    Index index_of(const Simplex& s) const;

    /// Maximal simplices (those that are not a proper face of another).
    std::vector<Simplex> maximal_simplices() const;

    long long euler_characteristic() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
    }

private:
    int vertex_count_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, Index>> index_;
};

/// Face closure of the given simplices. Tuples may be listed in any order
/// but must consist of distinct in-range vertices; they are sorted here.
SimplicialComplex build_complex(int vertex_count, const std::vector<Simplex>& maximal_simplices);

/// Boundary homomorphism from d-chains to (d-1)-chains: columns indexed by
/// the d-simplices, rows by the (d-1)-simplices, entry (-1)^i for omission
/// of the i-th vertex. Degrees without simplices give empty matrices.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// A simplicial map given on vertices; simplices may collapse, the image of
/// a simplex is the simplex spanned by the image vertex set.
struct SimplicialMap {
    SimplicialComplex domain;
    SimplicialComplex codomain;
    std::vector<int> vertex_images;  // vertex_images[v] = image vertex

    /// Throws unless every domain simplex maps onto a codomain simplex.
    void validate() const;
    Simplex image_simplex(const Simplex& s) const;
};

SimplicialMap identity_map(const SimplicialComplex& k);
SimplicialMap constant_map(const SimplicialComplex& k);  // to a single point

struct LinkResult {
    SimplicialComplex complex;
    std::vector<int> vertex_map;  // link vertex -> original vertex
};

/// Simplices s with v not in s and s + {v} in k, densely re-indexed.
LinkResult combinatorial_link(const SimplicialComplex& k, int v);

struct ConeResult {
    SimplicialComplex complex;
    int apex;  // = k.vertex_count(); the base embeds by identity indices
};

/// Cone with a fresh apex; cone(empty) is the apex alone.
ConeResult cone(const SimplicialComplex& k);

struct ProductResult {
    SimplicialComplex complex;
    int left_vertex_count;
    int right_vertex_count;
    int vertex_index(int a, int b) const { return a * right_vertex_count + b; }
};

/// Staircase triangulation of |a| x |b|: vertices are pairs in lexicographic
/// order, simplices the chains in the componentwise order whose projections
/// are simplices of the factors.
ProductResult ordered_product(const SimplicialComplex& a, const SimplicialComplex& b);

struct CylinderResult {
    SimplicialComplex complex;
    std::vector<int> domain_vertices;    // bottom copy of the domain
    std::vector<int> codomain_vertices;  // embedded codomain
};

/// Triangulated mapping cylinder of f over the global vertex order. The
/// domain sits as the bottom copy, the codomain as a deformation retract.
CylinderResult mapping_cylinder(const SimplicialMap& f);

struct DoubleCylinderResult {
    SimplicialComplex complex;
    std::vector<int> domain_vertices;      // shared copy of the common domain
    std::vector<int> left_codomain_vertices;   // codomain of f
    std::vector<int> right_codomain_vertices;  // codomain of g
};

/// Combinatorial homotopy pushout: cylinders of f and g glued along their
/// common domain copy.
DoubleCylinderResult double_mapping_cylinder(const SimplicialMap& f, const SimplicialMap& g);

struct SubdivisionResult {
    SimplicialComplex complex;
    std::vector<Simplex> vertex_carrier;  // subdivision vertex -> original simplex

    /// Minimal original simplex containing a subdivision simplex: the top of
    /// its flag, which is the last vertex because vertices are ordered by
    /// (dimension, lex).
    const Simplex& carrier(const Simplex& subdivided) const { return vertex_carrier[static_cast<std::size_t>(subdivided.back())]; }
};

/// Barycentric subdivision; vertices are the simplices of k, simplices the
/// flags of faces.
SubdivisionResult barycentric_subdivision(const SimplicialComplex& k);

/// True when every simplex of sub is a simplex of k (same vertex indexing).
bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& sub);

}  // namespace strathom
