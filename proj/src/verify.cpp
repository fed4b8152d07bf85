#include "wedge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "wedge/boson.hpp"
#include "wedge/correspondence.hpp"
#include "wedge/fock.hpp"
#include "wedge/glinf.hpp"
#include "wedge/symfunc.hpp"

namespace wedge::verify {

namespace {

constexpr size_t kMaxFailureSamples = 8;

// Runs fn(i) for i in [0, n) on up to thread_budget() workers and merges the
// results in index order, so the outcome is independent of scheduling.
SweepResult parallel_outer(int n, const std::function<SweepResult(int)>& fn) {
    int workers = std::min(thread_budget(), std::max(n, 1));
    std::vector<SweepResult> results(static_cast<size_t>(n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) results[static_cast<size_t>(i)] = fn(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                    results[static_cast<size_t>(i)] = fn(i);
            });
        }
        for (auto& t : pool) t.join();
    }
    SweepResult merged;
    for (const auto& r : results) merged.merge(r);
    return merged;
}

std::vector<FockIndex> fock_basis(int charge_max, int weight_max) {
    std::vector<FockIndex> out;
    for (int m = -charge_max; m <= charge_max; ++m)
        for (const Partition& p : partitions_up_to_weight(weight_max)) out.push_back({m, p});
    return out;
}

} // namespace

void SweepResult::record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
        ++failures;
        if (failure_samples.size() < kMaxFailureSamples) failure_samples.push_back(what);
    }
}

void SweepResult::merge(const SweepResult& o) {
    checked += o.checked;
    failures += o.failures;
    for (const auto& s : o.failure_samples)
        if (failure_samples.size() < kMaxFailureSamples) failure_samples.push_back(s);
}

int thread_budget() {
    if (const char* env = std::getenv("WEDGE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepResult mn_suite(int weight_max, int k_max) {
    SweepResult result;
    auto shapes = partitions_up_to_weight(weight_max);

    // Expansion checks against the polynomial oracle (sequential: the oracle
    // keeps shared caches behind one lock, so threads would serialize anyway).
    for (const Partition& lambda : shapes) {
        for (int k = 1; k <= k_max; ++k) {
            BosonState expansion = power_sum_times(k, BosonState::basis({0, lambda}));
            std::vector<std::pair<Partition, long long>> claim;
            for (const auto& [key, coeff] : expansion.terms()) {
                if (coeff.den() != 1)
                    throw DomainError("expansion coefficients must be integral");
                claim.emplace_back(key.shape, coeff.num());
            }
            bool ok = oracle::verify_expansion(lambda.weight() + k, k, lambda, claim);
            result.record(ok, "mn expansion lambda=" + lambda.str() + " k=" + std::to_string(k));
        }
    }

    // Adjointness of the two strip directions through the inner product.
    for (int k = 1; k <= k_max; ++k) {
        std::vector<BosonState> raised, lowered;
        raised.reserve(shapes.size());
        lowered.reserve(shapes.size());
        for (const Partition& p : shapes) {
            raised.push_back(power_sum_times(k, BosonState::basis({0, p})));
            lowered.push_back(power_sum_adjoint(k, BosonState::basis({0, p})));
        }
        for (size_t a = 0; a < shapes.size(); ++a) {
            for (size_t b = 0; b < shapes.size(); ++b) {
                Rational lhs = raised[a].coefficient({0, shapes[b]});
                Rational rhs = lowered[b].coefficient({0, shapes[a]});
                result.record(lhs == rhs, "mn adjointness lambda=" + shapes[a].str() +
                                              " nu=" + shapes[b].str() + " k=" + std::to_string(k));
            }
        }
    }
    return result;
}

namespace {

SweepResult fermionic_relations(const FockIndex& key, int pair_max, int quad_max) {
    SweepResult r;
    FockVector v = FockVector::basis(key);
    std::string tag = " at (" + std::to_string(key.charge) + ", " + key.shape.str() + ")";

    for (int i = -pair_max; i <= pair_max; ++i) {
        for (int j = -pair_max; j <= pair_max; ++j) {
            FockVector mixed = create(i, annihilate(j, v)) + annihilate(j, create(i, v));
            FockVector expected = (i == j) ? v : FockVector();
            r.record(mixed == expected,
                     "fermi {f_i, f_j*} i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
            FockVector both = create(i, create(j, v)) + create(j, create(i, v));
            r.record(both.is_zero(),
                     "fermi {f_i, f_j} i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
            FockVector stars = annihilate(i, annihilate(j, v)) + annihilate(j, annihilate(i, v));
            r.record(stars.is_zero(),
                     "fermi {f_i*, f_j*} i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
        }
    }

    int q = quad_max;
    std::vector<std::vector<FockVector>> comp(
        static_cast<size_t>(2 * q + 1), std::vector<FockVector>(static_cast<size_t>(2 * q + 1)));
    for (int a = -q; a <= q; ++a)
        for (int b = -q; b <= q; ++b)
            comp[static_cast<size_t>(a + q)][static_cast<size_t>(b + q)] =
                create(a, annihilate(b, v));
    auto composite = [&](int a, int b, const FockVector& u) { return create(a, annihilate(b, u)); };
    for (int i = -q; i <= q; ++i)
        for (int j = -q; j <= q; ++j)
            for (int l = -q; l <= q; ++l)
                for (int k = -q; k <= q; ++k) {
                    FockVector lhs =
                        composite(i, j, comp[static_cast<size_t>(l + q)][static_cast<size_t>(k + q)]) -
                        composite(l, k, comp[static_cast<size_t>(i + q)][static_cast<size_t>(j + q)]);
                    FockVector rhs;
                    if (j == l) rhs += comp[static_cast<size_t>(i + q)][static_cast<size_t>(k + q)];
                    if (i == k) rhs -= comp[static_cast<size_t>(l + q)][static_cast<size_t>(j + q)];
                    r.record(lhs == rhs, "fermi commutator (" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(l) + "," +
                                             std::to_string(k) + ")" + tag);
                }
    return r;
}

SweepResult bosonic_relations(const BosonIndex& key, int pair_max, int quad_max) {
    SweepResult r;
    BosonState v = BosonState::basis(key);
    std::string tag = " at (" + std::to_string(key.zexp) + ", " + key.shape.str() + ")";

    for (int i = -pair_max; i <= pair_max; ++i) {
        for (int j = -pair_max; j <= pair_max; ++j) {
            BosonState mixed = boson_create(i, boson_annihilate(j, v)) +
                               boson_annihilate(j, boson_create(i, v));
            BosonState expected = (i == j) ? v : BosonState();
            r.record(mixed == expected,
                     "bose {b_i, b_j*} i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
            BosonState both = boson_create(i, boson_create(j, v)) +
                              boson_create(j, boson_create(i, v));
            r.record(both.is_zero(),
                     "bose {b_i, b_j} i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
            BosonState stars = boson_annihilate(i, boson_annihilate(j, v)) +
                               boson_annihilate(j, boson_annihilate(i, v));
            r.record(stars.is_zero(),
                     "bose {b_i*, b_j*} i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
        }
    }

    int q = quad_max;
    std::vector<std::vector<BosonState>> comp(
        static_cast<size_t>(2 * q + 1), std::vector<BosonState>(static_cast<size_t>(2 * q + 1)));
    for (int a = -q; a <= q; ++a)
        for (int b = -q; b <= q; ++b)
            comp[static_cast<size_t>(a + q)][static_cast<size_t>(b + q)] =
                boson_create(a, boson_annihilate(b, v));
    auto composite = [&](int a, int b, const BosonState& u) {
        return boson_create(a, boson_annihilate(b, u));
    };
    for (int i = -q; i <= q; ++i)
        for (int j = -q; j <= q; ++j)
            for (int l = -q; l <= q; ++l)
                for (int k = -q; k <= q; ++k) {
                    BosonState lhs =
                        composite(i, j, comp[static_cast<size_t>(l + q)][static_cast<size_t>(k + q)]) -
                        composite(l, k, comp[static_cast<size_t>(i + q)][static_cast<size_t>(j + q)]);
                    BosonState rhs;
                    if (j == l) rhs += comp[static_cast<size_t>(i + q)][static_cast<size_t>(k + q)];
                    if (i == k) rhs -= comp[static_cast<size_t>(l + q)][static_cast<size_t>(j + q)];
                    r.record(lhs == rhs, "bose commutator (" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(l) + "," +
                                             std::to_string(k) + ")" + tag);
                }
    return r;
}

} // namespace

SweepResult relations_suite(int charge_max, int weight_max, int pair_index_max, int quad_index_max,
                            bool fermionic, bool bosonic) {
    auto basis = fock_basis(charge_max, weight_max);
    SweepResult result;
    if (fermionic) {
        result.merge(parallel_outer(static_cast<int>(basis.size()), [&](int i) {
            return fermionic_relations(basis[static_cast<size_t>(i)], pair_index_max,
                                       quad_index_max);
        }));
    }
    if (bosonic) {
        result.merge(parallel_outer(static_cast<int>(basis.size()), [&](int i) {
            const FockIndex& key = basis[static_cast<size_t>(i)];
            return bosonic_relations({key.charge, key.shape}, pair_index_max, quad_index_max);
        }));
    }
    return result;
}

SweepResult cocycle_suite(int index_max, int osc_max, int period_max, int power_max) {
    SweepResult result;
    int I = index_max;

    // Elementary sign table and agreement with the trace form.
    std::vector<std::pair<int, int>> units;
    for (int i = -I; i <= I; ++i)
        for (int j = -I; j <= I; ++j) units.emplace_back(i, j);
    result.merge(parallel_outer(static_cast<int>(units.size()), [&](int a) {
        SweepResult r;
        auto [i, j] = units[static_cast<size_t>(a)];
        BandMatrix A = BandMatrix::unit(i, j);
        for (auto [k, l] : units) {
            BandMatrix B = BandMatrix::unit(k, l);
            Rational direct = central_cocycle(A, B);
            Rational expected = 0;
            if (i == l && j == k) {
                if (i > 0 && j <= 0) expected = -1;
                if (i <= 0 && j > 0) expected = 1;
            }
            std::string tag = "cocycle table E[" + std::to_string(i) + "," + std::to_string(j) +
                              "] E[" + std::to_string(k) + "," + std::to_string(l) + "]";
            r.record(direct == expected, tag);
            r.record(direct == trace_form_cocycle(A, B), tag + " trace form");
        }
        return r;
    }));

    // Trace form on a non-elementary pair as a spot check of bilinearity.
    {
        BandMatrix A = BandMatrix::unit(0, 2, Rational(2, 3)) + BandMatrix::unit(-1, 1, -1) +
                       BandMatrix::unit(1, -2, Rational(5));
        BandMatrix B = BandMatrix::unit(2, 0, Rational(7, 2)) + BandMatrix::unit(1, -1, 1) +
                       BandMatrix::unit(-2, 1, Rational(-4, 5));
        result.record(central_cocycle(A, B) == trace_form_cocycle(A, B),
                      "cocycle trace form on composite matrices");
    }

    // Cocycle identity on finite elementary triples.
    result.merge(parallel_outer(static_cast<int>(units.size()), [&](int a) {
        SweepResult r;
        auto [i1, j1] = units[static_cast<size_t>(a)];
        BandMatrix A = BandMatrix::unit(i1, j1);
        for (auto [i2, j2] : units) {
            BandMatrix B = BandMatrix::unit(i2, j2);
            BandMatrix AB = A * B - B * A;
            for (auto [i3, j3] : units) {
                BandMatrix C = BandMatrix::unit(i3, j3);
                Rational total = central_cocycle(AB, C) +
                                 central_cocycle(B * C - C * B, A) +
                                 central_cocycle(C * A - A * C, B);
                r.record(total.is_zero(), "cocycle identity E[" + std::to_string(i1) + "," +
                                              std::to_string(j1) + "] E[" + std::to_string(i2) +
                                              "," + std::to_string(j2) + "] E[" +
                                              std::to_string(i3) + "," + std::to_string(j3) + "]");
            }
        }
        return r;
    }));

    // Cocycle identity on shift families.
    for (int a = -osc_max; a <= osc_max; ++a)
        for (int b = -osc_max; b <= osc_max; ++b)
            for (int c = -osc_max; c <= osc_max; ++c) {
                BandMatrix A = BandMatrix::shift_family(a);
                BandMatrix B = BandMatrix::shift_family(b);
                BandMatrix C = BandMatrix::shift_family(c);
                Rational total = central_cocycle(A * B - B * A, C) +
                                 central_cocycle(B * C - C * B, A) +
                                 central_cocycle(C * A - A * C, B);
                result.record(total.is_zero(), "cocycle identity shift families (" +
                                                   std::to_string(a) + "," + std::to_string(b) +
                                                   "," + std::to_string(c) + ")");
            }

    // Closed form of the pullback to N-periodic matrices.
    for (int n = 1; n <= period_max; ++n) {
        for (int m = -power_max; m <= power_max; ++m)
            for (int p = -power_max; p <= power_max; ++p)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        for (int k = 1; k <= n; ++k)
                            for (int l = 1; l <= n; ++l) {
                                BandMatrix A;
                                A.add_periodic(n, m, i, j, 1);
                                BandMatrix B;
                                B.add_periodic(n, p, k, l, 1);
                                Rational expected = 0;
                                if (m == -p && j == k && i == l) expected = m;
                                result.record(central_cocycle(A, B) == expected,
                                              "closed form N=" + std::to_string(n) +
                                                  " m=" + std::to_string(m) +
                                                  " n=" + std::to_string(p) + " e[" +
                                                  std::to_string(i) + "," + std::to_string(j) +
                                                  "] e[" + std::to_string(k) + "," +
                                                  std::to_string(l) + "]");
                            }
    }
    return result;
}

SweepResult universal_suite(int power_max, bool use_sl2, bool use_sl3) {
    SweepResult result;
    std::vector<const StructureLieAlgebra*> algebras;
    if (use_sl2) algebras.push_back(&sl2());
    if (use_sl3) algebras.push_back(&sl3());
    for (const StructureLieAlgebra* g : algebras) {
        for (int a = 0; a < g->dim(); ++a)
            for (int b = 0; b < g->dim(); ++b)
                for (int m = -power_max; m <= power_max; ++m)
                    for (int n = -power_max; n <= power_max; ++n) {
                        AlgebraLoopElement x, y;
                        x.terms[m] = g->basis_vector(a);
                        y.terms[n] = g->basis_vector(b);
                        UniversalCheck check = universal_extension_check(*g, x, y);
                        result.record(check.equal,
                                      "universal dim=" + std::to_string(g->dim()) + " t^" +
                                          std::to_string(m) + " " + g->labels()[static_cast<size_t>(a)] +
                                          ", t^" + std::to_string(n) + " " +
                                          g->labels()[static_cast<size_t>(b)] + " lhs=" +
                                          check.lhs.str() + " rhs=" + check.rhs.str());
                    }
    }
    return result;
}

SweepResult correspondence_suite(int charge_max, int weight_max, int index_max, int k_max,
                                 bool equivariance, bool coherence) {
    auto basis = fock_basis(charge_max, weight_max);

    std::vector<GlElement> elements;
    if (equivariance) {
        for (int i = -index_max; i <= index_max; ++i)
            for (int j = -index_max; j <= index_max; ++j)
                elements.push_back({0, BandMatrix::unit(i, j)});
        for (int k = 1; k <= k_max; ++k) {
            elements.push_back(oscillator_element(0, {{k, 1}}));
            elements.push_back(oscillator_element(0, {{-k, 1}}));
        }
        elements.push_back(oscillator_element(0, {{0, 1}}));
        elements.push_back({Rational(7, 3), BandMatrix()});
    }

    return parallel_outer(static_cast<int>(basis.size()), [&](int bi) {
        SweepResult r;
        const FockIndex& key = basis[static_cast<size_t>(bi)];
        std::string tag = " at (" + std::to_string(key.charge) + ", " + key.shape.str() + ")";
        if (equivariance) {
            FockVector v = FockVector::basis(key);
            for (const GlElement& x : elements) {
                EquivarianceReport report = check_equivariance(x, v);
                r.record(report.equal, "equivariance " + report.element + tag);
            }
        }
        if (coherence) {
            MayaDiagram s(key.charge, key.shape);
            for (int k = 1; k <= k_max; ++k) {
                for (int direction : {+1, -1}) {
                    auto expansion = oscillator_strip_expansion(direction * k, s);
                    auto strips = enumerate_border_strips(
                        key.shape, k,
                        direction > 0 ? StripDirection::Remove : StripDirection::Add);
                    std::vector<std::pair<std::vector<int>, int>> got, want;
                    for (const auto& term : expansion) {
                        bool charge_ok = term.diagram.charge() == key.charge;
                        if (!charge_ok)
                            r.record(false, "oscillator expansion changed charge" + tag);
                        got.emplace_back(term.diagram.shape().parts(), term.sign);
                    }
                    for (const auto& strip : strips)
                        want.emplace_back(strip.shape.parts(), strip.height % 2 == 0 ? 1 : -1);
                    std::sort(got.begin(), got.end());
                    std::sort(want.begin(), want.end());
                    r.record(got == want, "oscillator expansion k=" +
                                              std::to_string(direction * k) + tag);
                }
            }
        }
        return r;
    });
}

} // namespace wedge::verify
