#pragma once

#include <string>
#include <vector>

#include "wedge/boson.hpp"
#include "wedge/fock.hpp"

namespace wedge {

// The charge/partition keys of the fermionic space and the zexp/partition
// keys of the bosonic space coincide, so the correspondence map itself is a
// relabeling.  The substance is that the fermionic operators act through
// Maya sign counting and the bosonic ones through beta-number and
// border-strip combinatorics: check_equivariance compares the two
// independent computations exactly.  Refactors must not merge those paths.

/// v_{(m, lambda)} -> z^m s_lambda, extended linearly.
BosonState to_boson(const FockVector& v);

/// Inverse relabeling.
FockVector to_fermion(const BosonState& w);

struct OscillatorTerm {
    MayaDiagram diagram;
    int sign = 1; // +1 or -1
    friend bool operator==(const OscillatorTerm&, const OscillatorTerm&) = default;
};

/// Expansion of the shift-family action sum_l f_l f*_{l+k} on a single basis
/// diagram, evaluated literally over the finite window of surviving l.  For
/// k > 0 the results remove a k-strip from the shape, for k < 0 they add a
/// |k|-strip; signs are the fermionic signs.
std::vector<OscillatorTerm> oscillator_strip_expansion(int k, const MayaDiagram& s);

struct EquivarianceReport {
    std::string element; // short printable description
    FockVector input;
    BosonState fermionic_then_sigma;
    BosonState sigma_then_bosonic;
    bool equal = false;
};

/// Pushes v through the fermionic action followed by the relabeling, and
/// through the relabeling followed by the bosonic action, and compares.
EquivarianceReport check_equivariance(const GlElement& x, const FockVector& v);

} // namespace wedge
