#include <doctest.h>

#include "strathom/homology.hpp"
#include "support.hpp"

using namespace strathom;
using namespace strathom::testing;

TEST_CASE("build_complex closes faces and orders deterministically") {
    const SimplicialComplex full = build_complex(3, {{0, 1, 2}});
    CHECK(full.simplex_count() == 7);
    CHECK(full.count(0) == 3);
    CHECK(full.count(1) == 3);
    CHECK(full.count(2) == 1);

    const SimplicialComplex boundary = circle();
    CHECK(boundary.simplex_count() == 6);
    CHECK(boundary.dim() == 1);

    const SimplicialComplex pt = point();
    CHECK(pt.simplex_count() == 1);

    CHECK_THROWS_AS(build_complex(2, {{0, 2}}), ValidationError);
    CHECK_THROWS_AS(build_complex(3, {{1, 1}}), ValidationError);
}

TEST_CASE("boundary matrices carry the omission sign convention") {
    const SimplicialComplex disk = triangle_disk();
    const IntMatrix del2 = boundary_matrix(disk, 2);
    REQUIRE(del2.rows() == 3);
    REQUIRE(del2.cols() == 1);
    // edges in lexicographic order: {0,1}, {0,2}, {1,2}
    CHECK(del2(0, 0) == 1);
    CHECK(del2(1, 0) == -1);
    CHECK(del2(2, 0) == 1);

    const IntMatrix del1 = boundary_matrix(circle(), 1);
    REQUIRE(del1.rows() == 3);
    REQUIRE(del1.cols() == 3);
    for (Index c = 0; c < 3; ++c) {
        Integer sum = 0;
        for (Index r = 0; r < 3; ++r) sum += del1(r, c);
        CHECK(sum == 0);
    }
}

TEST_CASE("boundary squared vanishes on every fixture") {
    for (const SimplicialComplex& k :
         {circle(), sphere2(), torus7(), projective_plane6(), cone(circle()).complex,
          ordered_product(circle(), circle()).complex}) {
        for (int d = 1; d <= k.dim(); ++d) {
            const IntMatrix a = boundary_matrix(k, d);
            const IntMatrix b = boundary_matrix(k, d + 1);
            if (a.cols() == 0 || b.cols() == 0) continue;
            CHECK(IntMatrix(a * b).isZero());
        }
    }
}

TEST_CASE("combinatorial links") {
    const ConeResult c = cone(circle());
    const LinkResult link = combinatorial_link(c.complex, c.apex);
    CHECK(link.complex == circle());

    // vertex of the 2-sphere: link is the opposite boundary triangle
    const LinkResult sphere_link = combinatorial_link(sphere2(), 0);
    CHECK(sphere_link.complex == circle());
    CHECK(sphere_link.vertex_map == std::vector<int>{1, 2, 3});

    const SimplicialComplex lonely = build_complex(2, {{0}, {1}});
    CHECK(combinatorial_link(lonely, 0).complex.simplex_count() == 0);

    CHECK_THROWS_AS(combinatorial_link(circle(), 7), ValidationError);
}

TEST_CASE("cones") {
    const ConeResult c = cone(circle());
    CHECK(c.complex.simplex_count() == 13);
    CHECK(c.apex == 3);
    CHECK(is_subcomplex(c.complex, circle()));

    CHECK(cone(point()).complex == edge());
    CHECK(cone(SimplicialComplex{}).complex == point());
}

TEST_CASE("ordered products") {
    // point x B is B on the nose after the dense lexicographic re-indexing
    const ProductResult unit = ordered_product(point(), torus7());
    CHECK(unit.complex == torus7());

    const ProductResult square = ordered_product(edge(), edge());
    CHECK(square.complex.count(2) == 2);
    CHECK(square.complex.count(1) == 5);
    CHECK(square.complex.count(0) == 4);

    const ProductResult torus = ordered_product(circle(), circle());
    CHECK(torus.complex.count(2) == 18);
    CHECK(torus.complex.euler_characteristic() == 0);
    CHECK(homology(torus.complex).str() == homology(torus7()).str());
}

TEST_CASE("staircase top-cell counts follow the binomial formula") {
    const SimplicialComplex d1 = build_complex(2, {{0, 1}});
    const SimplicialComplex d2 = build_complex(3, {{0, 1, 2}});
    const SimplicialComplex d3 = build_complex(4, {{0, 1, 2, 3}});
    CHECK(ordered_product(d1, d2).complex.count(3) == 3);   // C(3,1)
    CHECK(ordered_product(d2, d2).complex.count(4) == 6);   // C(4,2)
    CHECK(ordered_product(d1, d3).complex.count(4) == 4);   // C(4,1)
}

TEST_CASE("mapping cylinders retract onto the codomain") {
    const CylinderResult identity_cyl = mapping_cylinder(identity_map(circle()));
    CHECK(homology(identity_cyl.complex) == homology(circle()));
    // prism over the circle: 6 vertices, squares split in two
    CHECK(identity_cyl.complex.count(2) == 6);

    const CylinderResult collapse = mapping_cylinder(constant_map(circle()));
    CHECK(homology(collapse.complex) == homology(point()));

    // double cover of the circle: hexagon onto triangle
    SimplicialMap cover{hexagon(), circle(), {0, 1, 2, 0, 1, 2}};
    const CylinderResult cover_cyl = mapping_cylinder(cover);
    CHECK(homology(cover_cyl.complex) == homology(circle()));

    SimplicialMap broken{circle(), build_complex(3, {{0, 1}, {1, 2}}), {0, 1, 2}};
    CHECK_THROWS_AS(mapping_cylinder(broken), ValidationError);  // {0,2} has no image simplex
}

TEST_CASE("double mapping cylinders are combinatorial homotopy pushouts") {
    // identity pushout: homology of the domain
    const DoubleCylinderResult same = double_mapping_cylinder(identity_map(torus7()), identity_map(torus7()));
    CHECK(homology(same.complex) == homology(torus7()));

    // two collapses: the suspension, with H_2 = Z
    const DoubleCylinderResult susp = double_mapping_cylinder(constant_map(circle()), constant_map(circle()));
    const HomologySummary h = homology(susp.complex);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).betti == 0);
    CHECK(h.at(2).betti == 1);
    CHECK(h.at(2).torsion.empty());

    // pushout along the identity: homology of the other codomain
    SimplicialMap cover{hexagon(), circle(), {0, 1, 2, 0, 1, 2}};
    const DoubleCylinderResult along_id = double_mapping_cylinder(identity_map(hexagon()), cover);
    CHECK(homology(along_id.complex) == homology(circle()));

    SimplicialMap other_domain = identity_map(circle());
    CHECK_THROWS_AS(double_mapping_cylinder(identity_map(hexagon()), other_domain), ValidationError);
}

TEST_CASE("barycentric subdivision") {
    const SubdivisionResult path = barycentric_subdivision(edge());
    CHECK(path.complex.count(0) == 3);
    CHECK(path.complex.count(1) == 2);

    const SubdivisionResult hex = barycentric_subdivision(circle());
    CHECK(hex.complex == hexagon());

    for (const SimplicialComplex& k : {circle(), sphere2(), torus7(), projective_plane6()}) {
        const SubdivisionResult sd = barycentric_subdivision(k);
        CHECK(homology(sd.complex) == homology(k));
        CHECK(sd.complex.euler_characteristic() == k.euler_characteristic());
    }

    // carriers: the top of each flag
    const SubdivisionResult disk = barycentric_subdivision(triangle_disk());
    const Simplex whole{0, 1, 2};
    int carried_by_triangle = 0;
    for (int d = 0; d <= disk.complex.dim(); ++d)
        for (const Simplex& s : disk.complex.simplices(d))
            if (disk.carrier(s) == whole) ++carried_by_triangle;
    CHECK(carried_by_triangle > 0);
}

TEST_CASE("euler characteristic equals the alternating betti sum on every fixture") {
    for (const SimplicialComplex& k :
         {circle(), sphere2(), torus7(), projective_plane6(), cone(torus7()).complex,
          ordered_product(circle(), circle()).complex}) {
        const std::vector<long long> dims = homology_field(chain_complex(k), 0);
        long long alternating = 0;
        for (std::size_t d = 0; d < dims.size(); ++d) alternating += (d % 2 == 0 ? 1 : -1) * dims[d];
        CHECK(alternating == k.euler_characteristic());
    }
}
