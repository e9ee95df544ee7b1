#pragma once

#include <map>
#include <string>
#include <vector>

#include "strathom/extended_int.hpp"
#include "strathom/stratification.hpp"

namespace strathom {

/// A perversity assigns an extended integer to every stratum and is zero on
/// the regular ones. Values are keyed by stratum id; absent singular strata
/// are an error at validation time, absent regular strata are implicitly 0.
struct Perversity {
    std::map<std::string, ExtendedInt> values;

    ExtendedInt at(const Stratum& s) const {
        if (s.regular) return ExtendedInt(0);
        auto it = values.find(s.id);
        if (it == values.end()) throw ValidationError("perversity has no value for singular stratum " + s.id);
        return it->second;
    }
};

/// Checks coverage of the singular strata and the zero-on-regular rule.
void validate_perversity(const StratifiedComplex& x, const Perversity& p);

/// The top perversity: codim - 2 on singular strata, 0 on regular strata.
Perversity top_perversity(const StratifiedComplex& x);
Perversity zero_perversity(const StratifiedComplex& x);

/// The complementary perversity Dp with Dp + p equal to the top perversity
/// on singular strata (saturating on infinities).
Perversity complement(const StratifiedComplex& x, const Perversity& p);

/// True when 0 <= p <= top perversity on every singular stratum.
bool is_classical(const StratifiedComplex& x, const Perversity& p);

/// Pullback along a stratified map: each domain stratum receives the value
/// of the stratum its image lies in. A domain-regular stratum sent into a
/// singular one keeps the value 0 and emits a warning, since the
/// zero-on-regular invariant takes precedence.
Perversity pullback(const SimplicialMap& f, const StratifiedComplex& domain_space,
                    const StratifiedComplex& codomain_space, const Perversity& p,
                    std::vector<std::string>* warnings = nullptr);

/// Induced perversity along a restriction, keyed through the stratum
/// translation table.
Perversity induced_perversity(const RestrictionResult& restriction, const StratifiedComplex& ambient,
                              const Perversity& p);

/// Stratum-wise comparison; defined only when both cover the same strata.
bool perversity_leq(const StratifiedComplex& x, const Perversity& p, const Perversity& q);

}  // namespace strathom
