#pragma once

#include "wedge/glinf.hpp"
#include "wedge/linear.hpp"
#include "wedge/maya.hpp"

namespace wedge {

/// Basis label of the fermionic space: a charge sector and a partition.
struct FockIndex {
    int charge = 0;
    Partition shape;
    friend bool operator==(const FockIndex&, const FockIndex&) = default;
};

struct FockIndexLess {
    bool operator()(const FockIndex& a, const FockIndex& b) const {
        if (a.charge != b.charge) return a.charge < b.charge;
        return Partition::lex_less(b.shape, a.shape);
    }
};

using FockVector = SparseVector<FockIndex, FockIndexLess>;

// The wedging/contracting operators act through Maya-diagram membership and
// sign counting only.  Keeping this code path free of the beta-number
// operators is what makes the correspondence check a genuine comparison of
// two independent computations.

/// Wedging operator: adjoins index j with sign (-1)^{#members above j};
/// kills basis terms already containing j.  Raises the charge by one.
FockVector create(int j, const FockVector& v);

/// Contracting operator: removes index j with the same sign convention;
/// kills basis terms not containing j.  Lowers the charge by one.
FockVector annihilate(int j, const FockVector& v);

/// Normal-ordered action of the elementary matrix E_ij: the composite
/// create(i) annihilate(j), with the identity subtracted when i = j <= 0.
FockVector elementary_action(int i, int j, const FockVector& v);

/// Action of a full element: central part as a scalar, finite entries
/// entrywise, periodic families as windowed sums of elementary actions (the
/// window is wide enough that everything outside acts by zero after normal
/// ordering).
FockVector fock_action(const GlElement& x, const FockVector& v);

} // namespace wedge
