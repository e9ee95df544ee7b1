#include "strathom/complex.hpp"

#include <algorithm>
#include <set>

#include "strathom/errors.hpp"

namespace strathom {

std::vector<Simplex> proper_faces(const Simplex& s) {
    std::vector<Simplex> out;
    const std::size_t n = s.size();
    if (n <= 1) return out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        out.push_back(std::move(face));
    }
    return out;
}

std::vector<Simplex> facets(const Simplex& s) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> closed_simplices)
    : vertex_count_(vertex_count) {
    int d_max = -1;
    for (const Simplex& s : closed_simplices) d_max = std::max(d_max, simplex_dim(s));
    by_dim_.resize(static_cast<std::size_t>(d_max + 1));
    for (Simplex& s : closed_simplices) by_dim_[static_cast<std::size_t>(simplex_dim(s))].push_back(std::move(s));
    index_.resize(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        std::sort(by_dim_[d].begin(), by_dim_[d].end());
        by_dim_[d].erase(std::unique(by_dim_[d].begin(), by_dim_[d].end()), by_dim_[d].end());
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i) index_[d][by_dim_[d][i]] = static_cast<Index>(i);
    }
}

Index SimplicialComplex::simplex_count() const {
    Index total = 0;
    for (const auto& level : by_dim_) total += static_cast<Index>(level.size());
    return total;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> empty;
    if (d < 0 || d > dim()) return empty;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(static_cast<std::size_t>(simplex_count()));
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const int d = simplex_dim(s);
    if (d < 0 || d > dim()) return false;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    return idx.find(s) != idx.end();
}

Index SimplicialComplex::index_of(const Simplex& s) const {
    const int d = simplex_dim(s);
    if (d >= 0 && d <= dim()) {
        const auto& idx = index_[static_cast<std::size_t>(d)];
        auto it = idx.find(s);
        if (it != idx.end()) return it->second;
    }
    throw ValidationError("simplex not present in complex");
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        const auto& above = simplices(d + 1);
        std::set<Simplex> faces_of_above;
        for (const Simplex& s : above)
            for (const Simplex& f : facets(s)) faces_of_above.insert(f);
        // a d-simplex is maximal iff it is a facet of no (d+1)-simplex; faces
        // of higher-codimension cofaces are faces of facets, so this suffices
        for (const Simplex& s : simplices(d))
            if (faces_of_above.find(s) == faces_of_above.end()) out.push_back(s);
    }
    return out;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
    return chi;
}

SimplicialComplex build_complex(int vertex_count, const std::vector<Simplex>& maximal_simplices) {
    if (vertex_count < 0) throw ValidationError("negative vertex count");
    std::set<Simplex> closed;
    for (const Simplex& raw : maximal_simplices) {
        Simplex s = raw;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("duplicate vertex within a simplex tuple");
        for (int v : s) {
            if (v < 0 || v >= vertex_count) throw ValidationError("vertex index " + std::to_string(v) + " out of range");
        }
        if (s.empty()) continue;
        closed.insert(s);
        for (Simplex& f : proper_faces(s)) closed.insert(std::move(f));
    }
    return SimplicialComplex(vertex_count, std::vector<Simplex>(closed.begin(), closed.end()));
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 0) throw ValidationError("boundary degree must be nonnegative");
    const Index rows = k.count(d - 1);
    const Index cols = k.count(d);
    IntMatrix del = IntMatrix::Zero(rows, cols);
    if (d == 0) return del;  // zero rows
    const auto& domain = k.simplices(d);
    for (Index c = 0; c < cols; ++c) {
        const Simplex& s = domain[static_cast<std::size_t>(c)];
        const auto fs = facets(s);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const Index r = k.index_of(fs[i]);
            del(r, c) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return del;
}

void SimplicialMap::validate() const {
    if (static_cast<int>(vertex_images.size()) != domain.vertex_count())
        throw ValidationError("simplicial map must assign an image to every domain vertex");
    for (int img : vertex_images)
        if (img < 0 || img >= codomain.vertex_count()) throw ValidationError("map image vertex out of range");
    for (int d = 0; d <= domain.dim(); ++d)
        for (const Simplex& s : domain.simplices(d))
            if (!codomain.contains(image_simplex(s))) throw ValidationError("vertex images do not span a codomain simplex");
}

Simplex SimplicialMap::image_simplex(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (int v : s) img.push_back(vertex_images[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

SimplicialMap identity_map(const SimplicialComplex& k) {
    SimplicialMap f{k, k, {}};
    f.vertex_images.resize(static_cast<std::size_t>(k.vertex_count()));
    for (int v = 0; v < k.vertex_count(); ++v) f.vertex_images[static_cast<std::size_t>(v)] = v;
    return f;
}

SimplicialMap constant_map(const SimplicialComplex& k) {
    SimplicialMap f{k, build_complex(1, {{0}}), {}};
    f.vertex_images.assign(static_cast<std::size_t>(k.vertex_count()), 0);
    return f;
}

LinkResult combinatorial_link(const SimplicialComplex& k, int v) {
    if (v < 0 || v >= k.vertex_count()) throw ValidationError("link vertex out of range");
    if (!k.contains({v})) throw ValidationError("link vertex is not a simplex of the complex");
    std::vector<Simplex> members;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.simplices(d)) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex with_v = s;
            with_v.insert(std::lower_bound(with_v.begin(), with_v.end(), v), v);
            if (k.contains(with_v)) members.push_back(s);
        }
    }
    std::set<int> used;
    for (const Simplex& s : members) used.insert(s.begin(), s.end());
    LinkResult out;
    out.vertex_map.assign(used.begin(), used.end());
    std::map<int, int> dense;
    for (std::size_t i = 0; i < out.vertex_map.size(); ++i) dense[out.vertex_map[i]] = static_cast<int>(i);
    std::vector<Simplex> renamed;
    renamed.reserve(members.size());
    for (const Simplex& s : members) {
        Simplex t;
        t.reserve(s.size());
        for (int w : s) t.push_back(dense[w]);
        renamed.push_back(std::move(t));
    }
    out.complex = build_complex(static_cast<int>(out.vertex_map.size()), renamed);
    return out;
}

ConeResult cone(const SimplicialComplex& k) {
    const int apex = k.vertex_count();
    std::vector<Simplex> generators;
    generators.push_back({apex});
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.simplices(d)) {
            generators.push_back(s);
            Simplex coned = s;
            coned.push_back(apex);
            generators.push_back(std::move(coned));
        }
    }
    return ConeResult{build_complex(apex + 1, generators), apex};
}

namespace {

/// Monotone staircase paths through the (|sa|) x (|sb|) grid of vertex pairs.
void staircase_paths(const Simplex& sa, const Simplex& sb, int right_count, std::size_t ia, std::size_t ib,
                     Simplex& path, std::vector<Simplex>& out) {
    if (ia + 1 == sa.size() && ib + 1 == sb.size()) {
        out.push_back(path);
        return;
    }
    if (ia + 1 < sa.size()) {
        path.push_back(sa[ia + 1] * right_count + sb[ib]);
        staircase_paths(sa, sb, right_count, ia + 1, ib, path, out);
        path.pop_back();
    }
    if (ib + 1 < sb.size()) {
        path.push_back(sa[ia] * right_count + sb[ib + 1]);
        staircase_paths(sa, sb, right_count, ia, ib + 1, path, out);
        path.pop_back();
    }
}

}  // namespace

ProductResult ordered_product(const SimplicialComplex& a, const SimplicialComplex& b) {
    ProductResult out;
    out.left_vertex_count = a.vertex_count();
    out.right_vertex_count = b.vertex_count();
    std::vector<Simplex> generators;
    for (const Simplex& sa : a.maximal_simplices()) {
        for (const Simplex& sb : b.maximal_simplices()) {
            Simplex path{sa[0] * b.vertex_count() + sb[0]};
            staircase_paths(sa, sb, b.vertex_count(), 0, 0, path, generators);
        }
    }
    out.complex = build_complex(a.vertex_count() * b.vertex_count(), generators);
    return out;
}

namespace {

/// Pieces {x_0..x_i} + {f(x_i)..f(x_k)} of the triangulated cylinder of f,
/// with codomain vertices shifted by the given offset.
void cylinder_pieces(const SimplicialMap& f, int codomain_offset, std::vector<Simplex>& out) {
    for (int d = 0; d <= f.domain.dim(); ++d) {
        for (const Simplex& s : f.domain.simplices(d)) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex piece(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                std::set<int> top;
                for (std::size_t j = i; j < s.size(); ++j)
                    top.insert(codomain_offset + f.vertex_images[static_cast<std::size_t>(s[j])]);
                piece.insert(piece.end(), top.begin(), top.end());
                out.push_back(std::move(piece));
            }
        }
    }
}

std::vector<int> index_range(int first, int count) {
    std::vector<int> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = first + i;
    return out;
}

}  // namespace

CylinderResult mapping_cylinder(const SimplicialMap& f) {
    f.validate();
    const int dn = f.domain.vertex_count();
    const int cn = f.codomain.vertex_count();
    std::vector<Simplex> generators;
    cylinder_pieces(f, dn, generators);
    for (int d = 0; d <= f.codomain.dim(); ++d)
        for (const Simplex& s : f.codomain.simplices(d)) {
            Simplex shifted = s;
            for (int& v : shifted) v += dn;
            generators.push_back(std::move(shifted));
        }
    CylinderResult out;
    out.complex = build_complex(dn + cn, generators);
    out.domain_vertices = index_range(0, dn);
    out.codomain_vertices = index_range(dn, cn);
    return out;
}

DoubleCylinderResult double_mapping_cylinder(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.domain == g.domain)) throw ValidationError("double mapping cylinder requires a common domain");
    f.validate();
    g.validate();
    const int dn = f.domain.vertex_count();
    const int fn = f.codomain.vertex_count();
    const int gn = g.codomain.vertex_count();
    std::vector<Simplex> generators;
    cylinder_pieces(f, dn, generators);
    cylinder_pieces(g, dn + fn, generators);
    for (int d = 0; d <= f.codomain.dim(); ++d)
        for (const Simplex& s : f.codomain.simplices(d)) {
            Simplex shifted = s;
            for (int& v : shifted) v += dn;
            generators.push_back(std::move(shifted));
        }
    for (int d = 0; d <= g.codomain.dim(); ++d)
        for (const Simplex& s : g.codomain.simplices(d)) {
            Simplex shifted = s;
            for (int& v : shifted) v += dn + fn;
            generators.push_back(std::move(shifted));
        }
    DoubleCylinderResult out;
    out.complex = build_complex(dn + fn + gn, generators);
    out.domain_vertices = index_range(0, dn);
    out.left_codomain_vertices = index_range(dn, fn);
    out.right_codomain_vertices = index_range(dn + fn, gn);
    return out;
}

namespace {

void full_flags(const SimplicialComplex& k, const Simplex& top, Simplex& flag,
                const std::vector<std::map<Simplex, int>>& vertex_ids, std::vector<Simplex>& out) {
    flag.push_back(vertex_ids[static_cast<std::size_t>(simplex_dim(top))].at(top));
    if (top.size() == 1) {
        Simplex rev(flag.rbegin(), flag.rend());
        out.push_back(std::move(rev));
    } else {
        for (const Simplex& f : facets(top)) full_flags(k, f, flag, vertex_ids, out);
    }
    flag.pop_back();
}

}  // namespace

SubdivisionResult barycentric_subdivision(const SimplicialComplex& k) {
    SubdivisionResult out;
    std::vector<std::map<Simplex, int>> vertex_ids(static_cast<std::size_t>(k.dim() + 1));
    int next = 0;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.simplices(d)) {
            vertex_ids[static_cast<std::size_t>(d)][s] = next++;
            out.vertex_carrier.push_back(s);
        }
    }
    std::vector<Simplex> generators;
    Simplex flag;
    for (const Simplex& top : k.maximal_simplices()) full_flags(k, top, flag, vertex_ids, generators);
    out.complex = build_complex(next, generators);
    return out;
}

bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& sub) {
    if (sub.vertex_count() > k.vertex_count()) return false;
    for (int d = 0; d <= sub.dim(); ++d)
        for (const Simplex& s : sub.simplices(d))
            if (!k.contains(s)) return false;
    return true;
}

}  // namespace strathom
