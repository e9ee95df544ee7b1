#include "strathom/perversity.hpp"

namespace strathom {

void validate_perversity(const StratifiedComplex& x, const Perversity& p) {
    for (const auto& [id, value] : p.values) {
        const Stratum& s = x.stratum_by_id(id);
        if (s.regular && value != ExtendedInt(0))
            throw ValidationError("perversity must vanish on regular stratum " + id);
    }
    for (const Stratum& s : x.strata)
        if (!s.regular) (void)p.at(s);
}

Perversity top_perversity(const StratifiedComplex& x) {
    Perversity t;
    for (const Stratum& s : x.strata)
        if (!s.regular) t.values[s.id] = ExtendedInt(s.codim - 2);
    return t;
}

Perversity zero_perversity(const StratifiedComplex& x) {
    Perversity z;
    for (const Stratum& s : x.strata)
        if (!s.regular) z.values[s.id] = ExtendedInt(0);
    return z;
}

Perversity complement(const StratifiedComplex& x, const Perversity& p) {
    validate_perversity(x, p);
    Perversity d;
    for (const Stratum& s : x.strata)
        if (!s.regular) d.values[s.id] = ExtendedInt(s.codim - 2) - p.at(s);
    return d;
}

bool is_classical(const StratifiedComplex& x, const Perversity& p) {
    for (const Stratum& s : x.strata) {
        if (s.regular) continue;
        const ExtendedInt v = p.at(s);
        if (v < ExtendedInt(0) || v > ExtendedInt(s.codim - 2)) return false;
    }
    return true;
}

Perversity pullback(const SimplicialMap& f, const StratifiedComplex& domain_space,
                    const StratifiedComplex& codomain_space, const Perversity& p,
                    std::vector<std::string>* warnings) {
    validate_perversity(codomain_space, p);
    f.validate();
    Perversity out;
    for (const Stratum& s : domain_space.strata) {
        // the image must stay inside a single codomain stratum
        int target = -1;
        for (const Simplex& member : s.simplices) {
            const int t = codomain_space.stratum_of(f.image_simplex(member));
            if (target < 0) target = t;
            if (t != target)
                throw ValidationError("map is not stratified: stratum " + s.id + " meets several codomain strata");
        }
        const Stratum& image = codomain_space.strata[static_cast<std::size_t>(target)];
        if (s.regular) {
            if (!image.regular && warnings != nullptr)
                warnings->push_back("regular stratum " + s.id + " maps into singular stratum " + image.id +
                                    "; keeping the value 0");
            continue;
        }
        out.values[s.id] = p.at(image);
    }
    return out;
}

Perversity induced_perversity(const RestrictionResult& restriction, const StratifiedComplex& ambient,
                              const Perversity& p) {
    validate_perversity(ambient, p);
    Perversity out;
    for (const Stratum& s : restriction.space.strata) {
        if (s.regular) continue;
        const std::string& target = restriction.stratum_target.at(s.id);
        out.values[s.id] = p.at(ambient.stratum_by_id(target));
    }
    return out;
}

bool perversity_leq(const StratifiedComplex& x, const Perversity& p, const Perversity& q) {
    for (const Stratum& s : x.strata) {
        if (s.regular) continue;
        if (!(p.at(s) <= q.at(s))) return false;
    }
    return true;
}

}  // namespace strathom
