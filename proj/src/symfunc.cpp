#include "wedge/symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>

#include "wedge/errors.hpp"

namespace wedge::oracle {

namespace {

long long checked_add(long long a, long long b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > INT64_MAX || s < INT64_MIN) throw OverflowError("oracle coefficient overflow (add)");
    return static_cast<long long>(s);
}

long long checked_mul(long long a, long long b) {
    __int128 s = static_cast<__int128>(a) * b;
    if (s > INT64_MAX || s < INT64_MIN) throw OverflowError("oracle coefficient overflow (mul)");
    return static_cast<long long>(s);
}

Pattern normalized(std::vector<int> v) {
    std::sort(v.rbegin(), v.rend());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

void accumulate(OrbitForm& into, const Pattern& key, long long delta) {
    auto it = into.find(key);
    if (it == into.end()) {
        if (delta != 0) into.emplace(key, delta);
        return;
    }
    it->second = checked_add(it->second, delta);
    if (it->second == 0) into.erase(it);
}

// ----- multiset collection for the Jacobi-Trudi Leibniz sum -----------------

// Signed count per multiset of h-indices over all nonvanishing permutations.
using HMultiset = std::vector<int>; // sorted descending, h_0 factors dropped

void leibniz_rec(const Partition& lambda, int row, unsigned used, int inversions,
                 std::vector<int>& indices, std::map<HMultiset, long long>& out) {
    int n = lambda.length();
    if (row > n) {
        HMultiset key = indices;
        std::sort(key.rbegin(), key.rend());
        long long sign = (inversions % 2 == 0) ? 1 : -1;
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(std::move(key), sign);
        else
            it->second = checked_add(it->second, sign);
        return;
    }
    for (int col = 1; col <= n; ++col) {
        if (used & (1u << col)) continue;
        int e = lambda.part(row) - row + col;
        if (e < 0) continue;
        int inv = 0;
        for (int c = col + 1; c <= n; ++c)
            if (used & (1u << c)) ++inv;
        if (e > 0) indices.push_back(e);
        leibniz_rec(lambda, row + 1, used | (1u << col), inversions + inv, indices, out);
        if (e > 0) indices.pop_back();
    }
}

std::map<HMultiset, long long> jacobi_trudi_multisets(const Partition& lambda) {
    std::map<HMultiset, long long> out;
    if (lambda.length() >= 32)
        throw DomainError("jacobi-trudi: partition length out of supported range");
    std::vector<int> indices;
    leibniz_rec(lambda, 1, 0, 0, indices, out);
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// ----- orbit-form arithmetic ------------------------------------------------

// Coefficient enumeration for A * h_r on a fixed sorted target gamma:
// sum over componentwise splittings gamma = beta + rest with |beta| = r.
void beta_splits(const std::vector<int>& gamma, size_t idx, int remaining, int suffix_sum,
                 std::vector<int>& rest, const OrbitForm& a, long long& total) {
    if (remaining > suffix_sum) return;
    if (idx == gamma.size()) {
        auto it = a.find(normalized(rest));
        if (it != a.end()) total = checked_add(total, it->second);
        return;
    }
    int next_suffix = suffix_sum - gamma[idx];
    for (int b = 0; b <= std::min(gamma[idx], remaining); ++b) {
        rest.push_back(gamma[idx] - b);
        beta_splits(gamma, idx + 1, remaining - b, next_suffix, rest, a, total);
        rest.pop_back();
    }
}

OrbitForm orbit_mul_h(const OrbitForm& a, int degree, int r) {
    OrbitForm out;
    for (const Partition& gamma : partitions_of_weight(degree + r)) {
        long long total = 0;
        std::vector<int> rest;
        beta_splits(gamma.parts(), 0, r, degree + r, rest, a, total);
        if (total != 0) out.emplace(gamma.parts(), total);
    }
    return out;
}

int form_degree(const OrbitForm& a) {
    if (a.empty()) return 0;
    const Pattern& p = a.begin()->first;
    return std::accumulate(p.begin(), p.end(), 0);
}

// Cached product of complete homogeneous factors, keyed by the sorted index
// multiset.  The cache is variable-count independent: patterns longer than
// the ambient variable count are ignored by consumers.
std::map<HMultiset, OrbitForm> g_hprod_cache;
std::map<Partition, OrbitForm, PartitionDecreasingLex> g_schur_cache;
std::recursive_mutex g_cache_mutex;

const OrbitForm& hprod_orbit_form(const HMultiset& multiset) {
    auto it = g_hprod_cache.find(multiset);
    if (it != g_hprod_cache.end()) return it->second;
    OrbitForm result;
    if (multiset.empty()) {
        result.emplace(Pattern{}, 1);
    } else {
        HMultiset prefix(multiset.begin(), multiset.end() - 1);
        const OrbitForm& base = hprod_orbit_form(prefix);
        result = orbit_mul_h(base, form_degree(base), multiset.back());
    }
    return g_hprod_cache.emplace(multiset, std::move(result)).first->second;
}

} // namespace

OrbitForm schur_orbit_form(const Partition& lambda) {
    std::lock_guard<std::recursive_mutex> lock(g_cache_mutex);
    auto it = g_schur_cache.find(lambda);
    if (it != g_schur_cache.end()) return it->second;
    OrbitForm result;
    for (const auto& [multiset, coeff] : jacobi_trudi_multisets(lambda)) {
        const OrbitForm& prod = hprod_orbit_form(multiset);
        for (const auto& [pattern, c] : prod)
            accumulate(result, pattern, checked_mul(coeff, c));
    }
    return g_schur_cache.emplace(lambda, std::move(result)).first->second;
}

OrbitForm orbit_mul_power_sum(const OrbitForm& a, int degree, int k) {
    OrbitForm out;
    for (const Partition& gamma : partitions_of_weight(degree + k)) {
        const std::vector<int>& g = gamma.parts();
        long long total = 0;
        for (size_t idx = 0; idx < g.size(); ++idx) {
            if (g[idx] < k) continue;
            std::vector<int> rest = g;
            rest[idx] -= k;
            auto it = a.find(normalized(std::move(rest)));
            if (it != a.end()) total = checked_add(total, it->second);
        }
        if (total != 0) out.emplace(g, total);
    }
    return out;
}

DensePolynomial expand_orbit_form(const OrbitForm& form, int nvars) {
    DensePolynomial out(nvars);
    for (const auto& [pattern, coeff] : form) {
        if (static_cast<int>(pattern.size()) > nvars) continue;
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        std::copy(pattern.begin(), pattern.end(), exps.begin());
        std::sort(exps.begin(), exps.end());
        do {
            out.add_term(exps, coeff);
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return out;
}

// ----- dense polynomials ----------------------------------------------------

DensePolynomial DensePolynomial::constant(int nvars, long long c) {
    DensePolynomial p(nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

void DensePolynomial::add_term(const std::vector<int>& exps, long long coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw DomainError("dense polynomial: exponent vector length mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

long long DensePolynomial::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& o) {
    if (nvars_ != o.nvars_) throw DomainError("dense polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

DensePolynomial& DensePolynomial::operator-=(const DensePolynomial& o) {
    if (nvars_ != o.nvars_) throw DomainError("dense polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("dense polynomial: variable count mismatch");
    DensePolynomial out(a.nvars_);
    std::vector<int> exps(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, checked_mul(ca, cb));
        }
    }
    return out;
}

DensePolynomial DensePolynomial::scaled(long long c) const {
    DensePolynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, checked_mul(coeff, c));
    return out;
}

DensePolynomial DensePolynomial::with_swapped_variables(int a, int b) const {
    if (a < 0 || b < 0 || a >= nvars_ || b >= nvars_)
        throw DomainError("variable index out of range");
    DensePolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> swapped = e;
        std::swap(swapped[static_cast<size_t>(a)], swapped[static_cast<size_t>(b)]);
        out.add_term(swapped, c);
    }
    return out;
}

DensePolynomial complete_homogeneous(int nvars, int k) {
    DensePolynomial out(nvars);
    if (k < 0) return out;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    // All exponent vectors of total degree k, coefficient one each.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            exps[static_cast<size_t>(var)] = remaining;
            out.add_term(exps, 1);
            exps[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        exps[static_cast<size_t>(var)] = 0;
    };
    if (nvars == 0) {
        if (k == 0) out.add_term({}, 1);
        return out;
    }
    rec(rec, 0, k);
    return out;
}

DensePolynomial power_sum_poly(int nvars, int k) {
    if (k < 1) throw DomainError("power sum index must be positive");
    DensePolynomial out(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        exps[static_cast<size_t>(i)] = k;
        out.add_term(exps, 1);
    }
    return out;
}

DensePolynomial schur_poly(int nvars, const Partition& lambda) {
    if (lambda.length() > nvars) return DensePolynomial(nvars);
    if (lambda.empty()) return DensePolynomial::constant(nvars, 1);
    std::map<HMultiset, DensePolynomial> products;
    DensePolynomial out(nvars);
    for (const auto& [multiset, coeff] : jacobi_trudi_multisets(lambda)) {
        auto it = products.find(multiset);
        if (it == products.end()) {
            DensePolynomial prod = DensePolynomial::constant(nvars, 1);
            for (int r : multiset) prod = prod * complete_homogeneous(nvars, r);
            it = products.emplace(multiset, std::move(prod)).first;
        }
        out += it->second.scaled(coeff);
    }
    return out;
}

bool verify_expansion(int nvars, int k, const Partition& lambda,
                      const std::vector<std::pair<Partition, long long>>& claim) {
    if (k < 1) throw DomainError("power sum index must be positive");
    if (nvars < lambda.weight() + k)
        throw InsufficientVariables("verify_expansion needs at least weight(lambda) + k = " +
                                    std::to_string(lambda.weight() + k) + " variables, got " +
                                    std::to_string(nvars));
    auto truncate = [nvars](const OrbitForm& form) {
        OrbitForm out;
        for (const auto& [pattern, c] : form)
            if (static_cast<int>(pattern.size()) <= nvars) out.emplace(pattern, c);
        return out;
    };
    OrbitForm lhs =
        truncate(orbit_mul_power_sum(schur_orbit_form(lambda), lambda.weight(), k));
    OrbitForm rhs;
    for (const auto& [nu, c] : claim) {
        for (const auto& [pattern, coeff] : schur_orbit_form(nu)) {
            if (static_cast<int>(pattern.size()) > nvars) continue;
            accumulate(rhs, pattern, checked_mul(coeff, c));
        }
    }
    return lhs == rhs;
}

} // namespace wedge::oracle
