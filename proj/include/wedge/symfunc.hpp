#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wedge/partition.hpp"

namespace wedge::oracle {

// Brute-force oracle over concrete multivariate polynomials with exact
// integer coefficients.  Everything here is deliberately independent of the
// border-strip machinery it is used to validate: Schur polynomials come from
// the Jacobi-Trudi determinant in complete homogeneous polynomials, never
// from the Murnaghan-Nakayama rule.

/// Dense multivariate polynomial: exponent vector (length nvars) -> integer
/// coefficient, stored in a canonical sorted map with no zero entries.
class DensePolynomial {
  public:
    using Terms = std::map<std::vector<int>, long long>;

    explicit DensePolynomial(int nvars) : nvars_(nvars) {}
    static DensePolynomial constant(int nvars, long long c);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, long long coeff);
    long long coefficient(const std::vector<int>& exps) const;

    DensePolynomial& operator+=(const DensePolynomial& o);
    DensePolynomial& operator-=(const DensePolynomial& o);
    friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
    friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }

    /// Naive convolution over all term pairs.
    friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);

    DensePolynomial scaled(long long c) const;
    DensePolynomial with_swapped_variables(int a, int b) const;

    friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

  private:
    int nvars_;
    Terms terms_;
};

/// k-th complete homogeneous polynomial, by enumeration of all degree-k
/// exponent vectors (each weakly increasing index tuple once).  Zero for
/// k < 0, the constant 1 for k = 0.
DensePolynomial complete_homogeneous(int nvars, int k);

/// k-th power sum x_1^k + ... + x_n^k, k >= 1.
DensePolynomial power_sum_poly(int nvars, int k);

/// Schur polynomial via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}),
/// expanded as a signed sum over permutations.  Returns zero when
/// length(lambda) > nvars.
DensePolynomial schur_poly(int nvars, const Partition& lambda);

/// Exact check of  p_k * s_lambda = sum c_nu * s_nu  as polynomials in nvars
/// variables.  Requires nvars >= weight(lambda) + k so that no Schur
/// polynomial of the product degree collapses; throws InsufficientVariables
/// otherwise.
bool verify_expansion(int nvars, int k, const Partition& lambda,
                      const std::vector<std::pair<Partition, long long>>& claim);

// ---------------------------------------------------------------------------
// Symmetric-orbit form.  A symmetric polynomial is determined by its
// coefficients on sorted exponent patterns; verify_expansion works on this
// compressed form so that the sweep sizes stay tractable, and the expansion
// below ties it back to the dense representation in tests.
// ---------------------------------------------------------------------------

using Pattern = std::vector<int>; // strictly positive entries, weakly decreasing
using OrbitForm = std::map<Pattern, long long>;

/// Orbit form of s_lambda in enough variables; entries with more parts than
/// the variable count simply drop when the form is expanded or compared.
OrbitForm schur_orbit_form(const Partition& lambda);

/// Orbit form of p_k * A where A is homogeneous of the given degree.
OrbitForm orbit_mul_power_sum(const OrbitForm& a, int degree, int k);

/// Expands an orbit form into the dense polynomial in nvars variables.
DensePolynomial expand_orbit_form(const OrbitForm& form, int nvars);

} // namespace wedge::oracle
