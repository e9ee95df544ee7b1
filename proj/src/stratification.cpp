#include "strathom/stratification.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "strathom/errors.hpp"

namespace strathom {

namespace {

std::string simplex_text(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

}  // namespace

Filtration uniform_filtration(const SimplicialComplex& k, int formal_dim) {
    Filtration f;
    f.formal_dim = formal_dim;
    f.levels.resize(static_cast<std::size_t>(k.dim() + 1));
    for (int d = 0; d <= k.dim(); ++d)
        f.levels[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(k.count(d)), formal_dim);
    return f;
}

Filtration filtration_from_levels(const SimplicialComplex& k, int formal_dim, const std::map<Simplex, int>& given) {
    Filtration f = uniform_filtration(k, formal_dim);
    for (const auto& [s, level] : given) {
        if (!k.contains(s)) throw ValidationError("filtration level given for unknown simplex " + simplex_text(s));
        f.levels[static_cast<std::size_t>(simplex_dim(s))][static_cast<std::size_t>(k.index_of(s))] = level;
    }
    validate_filtration(k, f);
    return f;
}

Filtration filtration_from_generators(const SimplicialComplex& k, int formal_dim,
                                      const std::vector<std::pair<int, std::vector<Simplex>>>& generators) {
    Filtration f = uniform_filtration(k, formal_dim);
    auto lower = [&](const Simplex& s, int level) {
        int& slot = f.levels[static_cast<std::size_t>(simplex_dim(s))][static_cast<std::size_t>(k.index_of(s))];
        slot = std::min(slot, level);
    };
    for (const auto& [level, gens] : generators) {
        if (level < 0 || level > formal_dim)
            throw ValidationError("filtration level " + std::to_string(level) + " outside [0, formal_dim]");
        for (const Simplex& g : gens) {
            if (!k.contains(g)) throw ValidationError("filtration generator " + simplex_text(g) + " is not a simplex");
            lower(g, level);
            for (const Simplex& face : proper_faces(g)) lower(face, level);
        }
    }
    validate_filtration(k, f);
    return f;
}

void validate_filtration(const SimplicialComplex& k, const Filtration& f) {
    if (f.formal_dim < 0) throw ValidationError("formal dimension must be nonnegative");
    if (static_cast<int>(f.levels.size()) != k.dim() + 1)
        throw ValidationError("filtration tables do not match the complex");
    for (int d = 0; d <= k.dim(); ++d) {
        const auto& table = f.levels[static_cast<std::size_t>(d)];
        if (table.size() != static_cast<std::size_t>(k.count(d)))
            throw ValidationError("filtration tables do not match the complex");
        const auto& simplices = k.simplices(d);
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            const int level = table[i];
            if (level < 0 || level > f.formal_dim)
                throw ValidationError("level " + std::to_string(level) + " of simplex " + simplex_text(simplices[i]) +
                                      " outside [0, formal_dim]");
            if (d == 0) continue;
            for (const Simplex& face : facets(simplices[i])) {
                if (f.level_of(k, face) > level)
                    throw ValidationError("filtration not monotone under faces: level(" + simplex_text(face) + ") = " +
                                          std::to_string(f.level_of(k, face)) + " > level(" + simplex_text(simplices[i]) +
                                          ") = " + std::to_string(level));
            }
        }
    }
}

const Stratum& StratifiedComplex::stratum_by_id(const std::string& id) const {
    for (const Stratum& s : strata)
        if (s.id == id) return s;
    throw ValidationError("unknown stratum id '" + id + "'");
}

bool StratifiedComplex::has_singular_strata() const {
    for (const Stratum& s : strata)
        if (!s.regular) return true;
    return false;
}

StratifiedComplex compute_strata(const SimplicialComplex& k, const Filtration& f) {
    validate_filtration(k, f);
    StratifiedComplex x;
    x.complex = k;
    x.filtration = f;

    // simplices grouped by level, in (dimension, lex) order
    std::map<int, std::vector<Simplex>> level_sets;
    for (int d = 0; d <= k.dim(); ++d) {
        const auto& simplices = k.simplices(d);
        for (std::size_t i = 0; i < simplices.size(); ++i)
            level_sets[f.levels[static_cast<std::size_t>(d)][i]].push_back(simplices[i]);
    }

    for (const auto& [level, members] : level_sets) {
        // face-adjacency components within the level set
        std::map<Simplex, int> position;
        for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<int>(i);
        std::vector<int> component(members.size(), -1);
        int components = 0;
        for (std::size_t seed = 0; seed < members.size(); ++seed) {
            if (component[seed] >= 0) continue;
            const int c = components++;
            std::queue<std::size_t> queue;
            queue.push(seed);
            component[seed] = c;
            while (!queue.empty()) {
                const Simplex s = members[queue.front()];
                queue.pop();
                auto visit = [&](const Simplex& t) {
                    auto it = position.find(t);
                    if (it == position.end()) return;
                    if (component[static_cast<std::size_t>(it->second)] >= 0) return;
                    component[static_cast<std::size_t>(it->second)] = c;
                    queue.push(static_cast<std::size_t>(it->second));
                };
                for (const Simplex& face : proper_faces(s)) visit(face);
                // cofaces within the set: anything having s as a face
                for (const auto& [t, pos] : position) {
                    (void)pos;
                    if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) visit(t);
                }
            }
        }
        std::vector<std::vector<Simplex>> groups(static_cast<std::size_t>(components));
        for (std::size_t i = 0; i < members.size(); ++i)
            groups[static_cast<std::size_t>(component[i])].push_back(members[i]);
        for (auto& g : groups) {
            std::sort(g.begin(), g.end(), [](const Simplex& a, const Simplex& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
            });
        }
        // index order by lexicographically smallest member
        std::vector<Simplex> smallest(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g) smallest[g] = *std::min_element(groups[g].begin(), groups[g].end());
        std::vector<std::size_t> order(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g) order[g] = g;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return smallest[a] < smallest[b]; });
        int index = 0;
        for (std::size_t g : order) {
            Stratum s;
            s.level = level;
            s.index = index;
            s.id = "s" + std::to_string(level) + "." + std::to_string(index);
            s.simplices = groups[g];
            s.formal_dim = level;
            s.codim = f.formal_dim - level;
            x.strata.push_back(std::move(s));
            ++index;
        }
    }

    // simplex -> stratum lookup
    x.stratum_index.resize(static_cast<std::size_t>(k.dim() + 1));
    for (int d = 0; d <= k.dim(); ++d)
        x.stratum_index[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(k.count(d)), -1);
    for (std::size_t si = 0; si < x.strata.size(); ++si)
        for (const Simplex& s : x.strata[si].simplices)
            x.stratum_index[static_cast<std::size_t>(simplex_dim(s))][static_cast<std::size_t>(k.index_of(s))] =
                static_cast<int>(si);

    // closure order: i <= j when every simplex of i lies in the closure of j
    const std::size_t count = x.strata.size();
    std::vector<std::set<Simplex>> closures(count);
    for (std::size_t j = 0; j < count; ++j) {
        for (const Simplex& s : x.strata[j].simplices) {
            closures[j].insert(s);
            for (const Simplex& face : proper_faces(s)) closures[j].insert(face);
        }
    }
    x.closure_order.assign(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            bool inside = true;
            for (const Simplex& s : x.strata[i].simplices) {
                if (closures[j].find(s) == closures[j].end()) {
                    inside = false;
                    break;
                }
            }
            x.closure_order[i][j] = inside;
        }
    }

    // regular strata are the maximal elements of the order
    for (std::size_t i = 0; i < count; ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < count && maximal; ++j)
            if (j != i && x.closure_order[i][j]) maximal = false;
        x.strata[i].regular = maximal;
        if (maximal && x.strata[i].codim > 0)
            x.warnings.push_back("maximal stratum " + x.strata[i].id + " has positive codimension " +
                                 std::to_string(x.strata[i].codim) + "; perversities must still vanish on it");
    }
    return x;
}

StratifiedComplex stratify_trivially(const SimplicialComplex& k, int formal_dim) {
    return compute_strata(k, uniform_filtration(k, formal_dim));
}

FrontierVerdict check_frontier(const StratifiedComplex& x) {
    const std::size_t count = x.strata.size();
    std::vector<std::set<Simplex>> closures(count);
    for (std::size_t j = 0; j < count; ++j) {
        for (const Simplex& s : x.strata[j].simplices) {
            closures[j].insert(s);
            for (const Simplex& face : proper_faces(s)) closures[j].insert(face);
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j) continue;
            Simplex meeting, missing;
            for (const Simplex& s : x.strata[i].simplices) {
                if (closures[j].find(s) != closures[j].end()) {
                    if (meeting.empty()) meeting = s;
                } else if (missing.empty()) {
                    missing = s;
                }
            }
            if (!meeting.empty() && !missing.empty()) {
                FrontierVerdict v;
                v.pass = false;
                v.lower_id = x.strata[i].id;
                v.upper_id = x.strata[j].id;
                v.meeting_simplex = meeting;
                v.missing_simplex = missing;
                return v;
            }
        }
    }
    return FrontierVerdict{};
}

StratifiedComplex stratify_cone(const StratifiedComplex& x) {
    ConeResult c = cone(x.complex);
    std::map<Simplex, int> levels;
    levels[{c.apex}] = 0;
    for (int d = 0; d <= x.complex.dim(); ++d) {
        const auto& simplices = x.complex.simplices(d);
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            const int lifted = x.filtration.levels[static_cast<std::size_t>(d)][i] + 1;
            levels[simplices[i]] = lifted;
            Simplex coned = simplices[i];
            coned.push_back(c.apex);
            levels[coned] = lifted;
        }
    }
    Filtration f = filtration_from_levels(c.complex, x.formal_dim() + 1, levels);
    return compute_strata(c.complex, f);
}

Filtration filtration_from_covering_generators(const SimplicialComplex& k, int formal_dim,
                                               const std::vector<std::pair<Simplex, int>>& generator_levels) {
    std::map<Simplex, int> best;
    auto lower = [&](const Simplex& s, int level) {
        auto it = best.find(s);
        if (it == best.end())
            best[s] = level;
        else
            it->second = std::min(it->second, level);
    };
    for (const auto& [g, level] : generator_levels) {
        lower(g, level);
        for (const Simplex& face : proper_faces(g)) lower(face, level);
    }
    if (static_cast<Index>(best.size()) != k.simplex_count())
        throw ValidationError("level generators do not cover the complex");
    Filtration f = uniform_filtration(k, formal_dim);
    for (const auto& [s, level] : best)
        f.levels[static_cast<std::size_t>(simplex_dim(s))][static_cast<std::size_t>(k.index_of(s))] = level;
    validate_filtration(k, f);
    return f;
}

StratifiedComplex stratify_cylinder(const SimplicialMap& f, const StratifiedComplex& domain_space,
                                    const StratifiedComplex& codomain_space) {
    if (!(f.domain == domain_space.complex) || !(f.codomain == codomain_space.complex))
        throw ValidationError("stratify_cylinder: map endpoints do not match the given stratified spaces");
    const int n_dom = domain_space.formal_dim();
    const int n_cod = codomain_space.formal_dim();
    if (n_cod > n_dom + 1)
        throw ValidationError("inconsistent formal dimensions: codomain formal dimension exceeds cylinder dimension");
    const int n = std::max(n_dom + 1, n_cod);
    const int shift = n - n_dom;

    CylinderResult cyl = mapping_cylinder(f);
    const int offset = f.domain.vertex_count();

    std::vector<std::pair<Simplex, int>> generator_levels;
    for (int d = 0; d <= f.domain.dim(); ++d) {
        const auto& simplices = f.domain.simplices(d);
        for (std::size_t c = 0; c < simplices.size(); ++c) {
            const Simplex& s = simplices[c];
            const int level = domain_space.filtration.levels[static_cast<std::size_t>(d)][c] + shift;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex piece(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                std::set<int> top;
                for (std::size_t j = i; j < s.size(); ++j)
                    top.insert(offset + f.vertex_images[static_cast<std::size_t>(s[j])]);
                piece.insert(piece.end(), top.begin(), top.end());
                generator_levels.emplace_back(std::move(piece), level);
            }
        }
    }
    for (int d = 0; d <= f.codomain.dim(); ++d) {
        const auto& simplices = f.codomain.simplices(d);
        for (std::size_t c = 0; c < simplices.size(); ++c) {
            Simplex shifted = simplices[c];
            for (int& v : shifted) v += offset;
            generator_levels.emplace_back(std::move(shifted), codomain_space.filtration.levels[static_cast<std::size_t>(d)][c]);
        }
    }
    Filtration filt = filtration_from_covering_generators(cyl.complex, n, generator_levels);
    return compute_strata(cyl.complex, filt);
}

RestrictionResult restrict_to(const StratifiedComplex& x, const SimplicialComplex& sub) {
    if (sub.vertex_count() != x.complex.vertex_count() || !is_subcomplex(x.complex, sub))
        throw ValidationError("restriction target is not a subcomplex");
    Filtration f = uniform_filtration(sub, x.formal_dim());
    for (int d = 0; d <= sub.dim(); ++d) {
        const auto& simplices = sub.simplices(d);
        for (std::size_t i = 0; i < simplices.size(); ++i)
            f.levels[static_cast<std::size_t>(d)][i] = x.filtration.level_of(x.complex, simplices[i]);
    }
    RestrictionResult out;
    out.space = compute_strata(sub, f);
    for (const Stratum& s : out.space.strata) {
        const int target = x.stratum_of(s.simplices.front());
        for (const Simplex& member : s.simplices) {
            if (x.stratum_of(member) != target)
                throw ValidationError("restricted stratum spans several ambient strata");  // cannot happen
        }
        out.stratum_target[s.id] = x.strata[static_cast<std::size_t>(target)].id;
    }
    return out;
}

SimplicialComplex regular_subcomplex(const StratifiedComplex& x) {
    std::vector<Simplex> keep;
    for (int d = 0; d <= x.complex.dim(); ++d) {
        for (const Simplex& s : x.complex.simplices(d)) {
            bool all_regular = x.strata[static_cast<std::size_t>(x.stratum_of(s))].regular;
            if (all_regular) {
                for (const Simplex& face : proper_faces(s)) {
                    if (!x.strata[static_cast<std::size_t>(x.stratum_of(face))].regular) {
                        all_regular = false;
                        break;
                    }
                }
            }
            if (all_regular) keep.push_back(s);
        }
    }
    return build_complex(x.complex.vertex_count(), keep);
}

}  // namespace strathom
