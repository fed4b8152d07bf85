#pragma once

#include <string>
#include <vector>

namespace wedge::verify {

struct SweepResult {
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> failure_samples; // at most a handful, in sweep order

    void record(bool ok, const std::string& what);
    void merge(const SweepResult& o);
};

/// Worker count: WEDGE_THREADS when set, hardware concurrency otherwise.
int thread_budget();

/// Murnaghan-Nakayama against the polynomial oracle, plus the adjointness
/// identity between the two strip directions.
SweepResult mn_suite(int weight_max, int k_max);

/// Fermionic and bosonic anticommutation relations and composite-operator
/// commutators, exhaustively on basis vectors.
SweepResult relations_suite(int charge_max, int weight_max, int pair_index_max,
                            int quad_index_max, bool fermionic, bool bosonic);

/// Central cocycle checks: elementary sign table, trace form, cocycle
/// identity on triples (finite and shift families), and the closed form for
/// the pullback to periodic matrices.
SweepResult cocycle_suite(int index_max, int osc_max, int period_max, int power_max);

/// Garland cocycle versus pulled-back central cocycle for the bundled
/// algebras, on all basis pairs with powers up to power_max.
SweepResult universal_suite(int power_max, bool use_sl2, bool use_sl3);

/// Equivariance of the fermionic/bosonic actions under the relabeling, and
/// coherence of the oscillator strip expansion with direct strip enumeration.
SweepResult correspondence_suite(int charge_max, int weight_max, int index_max, int k_max,
                                 bool equivariance, bool coherence);

} // namespace wedge::verify
