#include "wedge/boson.hpp"

#include <cstdlib>

namespace wedge {

namespace {

BosonState strip_sum(int k, const BosonState& w, StripDirection dir) {
    BosonState out;
    for (const auto& [key, coeff] : w.terms()) {
        for (const auto& strip : enumerate_border_strips(key.shape, k, dir)) {
            Rational sign = (strip.height % 2 == 0) ? 1 : -1;
            out.add({key.zexp, strip.shape}, coeff * sign);
        }
    }
    return out;
}

} // namespace

BosonState power_sum_times(int k, const BosonState& w) {
    if (k < 1) throw DomainError("power sum index must be positive");
    return strip_sum(k, w, StripDirection::Add);
}

BosonState power_sum_adjoint(int k, const BosonState& w) {
    if (k < 1) throw DomainError("power sum index must be positive");
    return strip_sum(k, w, StripDirection::Remove);
}

BosonState boson_create(int i, const BosonState& w) {
    BosonState out;
    for (const auto& [key, coeff] : w.terms()) {
        if (has_beta(key.zexp, i, key.shape)) continue;
        Rational sign = (count_above(key.zexp, i, key.shape) % 2 == 0) ? 1 : -1;
        out.add({key.zexp + 1, insert_beta(key.zexp, i, key.shape)}, coeff * sign);
    }
    return out;
}

BosonState boson_annihilate(int i, const BosonState& w) {
    BosonState out;
    for (const auto& [key, coeff] : w.terms()) {
        if (!has_beta(key.zexp, i, key.shape)) continue;
        Rational sign = (count_above(key.zexp, i, key.shape) % 2 == 0) ? 1 : -1;
        out.add({key.zexp - 1, remove_beta(key.zexp, i, key.shape)}, coeff * sign);
    }
    return out;
}

BosonState boson_action(const GlElement& x, const BosonState& w) {
    BosonState out = w.scaled(x.central);
    for (const auto& [key, coeff] : x.matrix.finite()) {
        int i = key.first, j = key.second;
        BosonState part = boson_create(i, boson_annihilate(j, w));
        if (i == j && i <= 0) part -= w;
        out += part.scaled(coeff);
    }
    if (x.matrix.periodic()) {
        const PeriodicPart& periodic = *x.matrix.periodic();
        if (periodic.period != 1)
            throw UnsupportedElement("bosonic action is defined for period-1 families only, got "
                                     "period " +
                                     std::to_string(periodic.period));
        for (const auto& [entry, coeff] : periodic.entries) {
            int k = entry.shift;
            if (k > 0) {
                out += power_sum_adjoint(k, w).scaled(coeff);
            } else if (k < 0) {
                out += power_sum_times(-k, w).scaled(coeff);
            } else {
                BosonState graded;
                for (const auto& [key, c] : w.terms())
                    graded.add(key, c * Rational(key.zexp));
                out += graded.scaled(coeff);
            }
        }
    }
    return out;
}

Rational inner_product(const BosonState& a, const BosonState& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    Rational total;
    for (const auto& [key, coeff] : small.terms()) total += coeff * large.coefficient(key);
    return total;
}

} // namespace wedge
