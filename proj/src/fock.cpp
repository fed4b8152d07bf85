#include "wedge/fock.hpp"

#include <cstdlib>

namespace wedge {

FockVector create(int j, const FockVector& v) {
    FockVector out;
    for (const auto& [key, coeff] : v.terms()) {
        MayaDiagram s(key.charge, key.shape);
        if (s.contains(j)) continue;
        Rational sign = (s.count_above(j) % 2 == 0) ? 1 : -1;
        MayaDiagram t = s.with_inserted(j);
        out.add({t.charge(), t.shape()}, coeff * sign);
    }
    return out;
}

FockVector annihilate(int j, const FockVector& v) {
    FockVector out;
    for (const auto& [key, coeff] : v.terms()) {
        MayaDiagram s(key.charge, key.shape);
        if (!s.contains(j)) continue;
        Rational sign = (s.count_above(j) % 2 == 0) ? 1 : -1;
        MayaDiagram t = s.with_removed(j);
        out.add({t.charge(), t.shape()}, coeff * sign);
    }
    return out;
}

FockVector elementary_action(int i, int j, const FockVector& v) {
    FockVector out = create(i, annihilate(j, v));
    if (i == j && i <= 0) out -= v;
    return out;
}

namespace {

// Exceptional bound of a basis diagram: no members above it, every integer
// below its negation is a member.
int exceptional_bound(const FockIndex& key) {
    MayaDiagram s(key.charge, key.shape);
    int top = s.member(1);
    int tail = key.charge - key.shape.length();
    return std::max({std::abs(top), std::abs(tail), 1});
}

} // namespace

FockVector fock_action(const GlElement& x, const FockVector& v) {
    FockVector out = v.scaled(x.central);
    for (const auto& [key, coeff] : x.matrix.finite())
        out += elementary_action(key.first, key.second, v).scaled(coeff);

    if (x.matrix.periodic()) {
        const PeriodicPart& part = *x.matrix.periodic();
        int n = part.period;
        for (const auto& [key, coeff] : v.terms()) {
            FockVector single = FockVector::basis(key, coeff);
            int bound = exceptional_bound(key);
            for (const auto& [entry, value] : part.entries) {
                // Columns beyond the window are either absent from the
                // diagram or deep in the regular tail, where the normal
                // ordered elementary action vanishes.
                int window = bound + n * (std::abs(entry.shift) + 1);
                for (int col = -window; col <= window; ++col) {
                    int diff = col - entry.j;
                    if (((diff % n) + n) % n != 0) continue;
                    int k = diff / n;
                    int row = n * (k - entry.shift) + entry.i;
                    out += elementary_action(row, col, single).scaled(value);
                }
            }
        }
    }
    return out;
}

} // namespace wedge
