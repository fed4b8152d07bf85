#pragma once

#include "wedge/glinf.hpp"
#include "wedge/linear.hpp"
#include "wedge/partition.hpp"

namespace wedge {

/// Basis label of the bosonic space: a Laurent exponent and a Schur label,
/// representing z^zexp * s_shape.
struct BosonIndex {
    int zexp = 0;
    Partition shape;
    friend bool operator==(const BosonIndex&, const BosonIndex&) = default;
};

struct BosonIndexLess {
    bool operator()(const BosonIndex& a, const BosonIndex& b) const {
        if (a.zexp != b.zexp) return a.zexp < b.zexp;
        return Partition::lex_less(b.shape, a.shape);
    }
};

using BosonState = SparseVector<BosonIndex, BosonIndexLess>;

// All operators below act through the border-strip and beta-number
// combinatorics of the partition module, never through Maya diagrams; the
// fermionic module is the mirror-image implementation.

/// Multiplication by the k-th power sum in the Schur basis
/// (Murnaghan-Nakayama rule): signed sum over added k-strips.
BosonState power_sum_times(int k, const BosonState& w);

/// Adjoint of power_sum_times with respect to the Schur-orthonormal inner
/// product: signed sum over removed k-strips.
BosonState power_sum_adjoint(int k, const BosonState& w);

/// Charged raising operator: inserts beta value i, raises zexp by one, with
/// sign (-1)^{count above i}; terms whose beta set already contains i die.
BosonState boson_create(int i, const BosonState& w);

/// Charged lowering operator: removes beta value i, lowers zexp by one; terms
/// whose beta set lacks i die.
BosonState boson_annihilate(int i, const BosonState& w);

/// Action of a full element on the bosonic side: central part as a scalar,
/// finite entries through boson_create/boson_annihilate with normal ordering
/// on the non-positive diagonal, period-1 families as power sums (positive
/// shift), multiplication operators (negative shift) and the z-degree
/// operator (zero shift).  Throws UnsupportedElement for periodic parts with
/// period > 1.
BosonState boson_action(const GlElement& x, const BosonState& w);

/// Inner product with orthonormal basis keys; distinct Laurent exponents are
/// orthogonal.
Rational inner_product(const BosonState& a, const BosonState& b);

} // namespace wedge
