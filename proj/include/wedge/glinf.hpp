#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wedge/rational.hpp"

namespace wedge {

/// Small dense matrix of exact rationals, used for loop-algebra coefficients
/// and adjoint representations.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c);
    const Rational& at(int r, int c) const;
    bool is_zero() const;

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    Rational trace() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// One N-periodic family of matrix entries: coeff * sum_k E_{N(k-shift)+i, Nk+j}.
struct PeriodicEntryKey {
    int shift = 0; // power of the underlying loop variable
    int i = 1;     // 1..period
    int j = 1;     // 1..period
    friend auto operator<=>(const PeriodicEntryKey&, const PeriodicEntryKey&) = default;
};

struct PeriodicPart {
    int period = 1;
    std::map<PeriodicEntryKey, Rational> entries;
    friend bool operator==(const PeriodicPart&, const PeriodicPart&) = default;
};

/// Band infinite matrix: a finite-support part plus an optional N-periodic
/// part.  The class is closed under addition and under the products needed
/// by the bracket (finite x band, band x finite, periodic x periodic).
class BandMatrix {
  public:
    BandMatrix() = default;

    static BandMatrix unit(int row, int col, const Rational& coeff = 1);
    /// Shift family Lambda_k = sum_j E_{j,j+k} as a period-1 matrix.
    static BandMatrix shift_family(int k, const Rational& coeff = 1);

    void add_finite(int row, int col, const Rational& coeff);
    void add_periodic(int period, int shift, int i, int j, const Rational& coeff);

    const std::map<std::pair<int, int>, Rational>& finite() const { return finite_; }
    const std::optional<PeriodicPart>& periodic() const { return periodic_; }

    bool is_zero() const { return finite_.empty() && !periodic_; }

    /// Exact entry at (row, col): finite part plus every matching periodic
    /// family contribution.
    Rational entry(int row, int col) const;

    /// Bound B with entry(r, c) = 0 whenever |r - c| > B.
    int bandwidth() const;

    BandMatrix operator+(const BandMatrix& o) const;
    BandMatrix operator-(const BandMatrix& o) const;
    BandMatrix scaled(const Rational& c) const;

    /// Matrix product.  Defined for the closed class used here; multiplying
    /// two matrices whose periodic parts have different periods re-expands
    /// both to the least common period first.
    BandMatrix operator*(const BandMatrix& o) const;

    /// Re-expands the periodic part to the given multiple of its period.
    BandMatrix with_period(int period) const;

    friend bool operator==(const BandMatrix&, const BandMatrix&) = default;

  private:
    std::map<std::pair<int, int>, Rational> finite_;
    std::optional<PeriodicPart> periodic_;
};

/// Element of the centrally extended algebra: central scalar plus matrix.
struct GlElement {
    Rational central;
    BandMatrix matrix;
    friend bool operator==(const GlElement&, const GlElement&) = default;
};

/// Central 2-cocycle  c(A,B) = sum_{i<=0,k>0} a_ik b_ki - sum_{i>0,k<=0} a_ik b_ki,
/// evaluated as the exact finite sum over the band window.
Rational central_cocycle(const BandMatrix& a, const BandMatrix& b);

/// (1/2) tr([J,A]B) with J = sum_{m<=0} E_mm - sum_{m>0} E_mm, for
/// finite-support inputs.  [J,A] is formed entrywise by sign flips.
Rational trace_form_cocycle(const BandMatrix& a, const BandMatrix& b);

/// Bracket on the central extension: ([x,y] upstairs, cocycle downstairs).
GlElement extended_bracket(const GlElement& x, const GlElement& y);

/// Loop algebra element over N x N rational matrices: sum_m t^m (x) x_m.
struct LoopElement {
    int n = 1;
    std::map<int, RationalMatrix> terms; // power -> matrix, no zero matrices

    void add(int power, const RationalMatrix& m);
    friend bool operator==(const LoopElement&, const LoopElement&) = default;
};

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y);

/// Embedding t^m (x) e_ij -> sum_k E_{N(k-m)+i, Nk+j} of the loop algebra
/// into N-periodic band matrices.  Throws SizeMismatch when x.n != period.
BandMatrix embed_loop(int period, const LoopElement& x);

/// (a, sum_m laurent[m] t^m) as a central scalar plus period-1 shift families.
GlElement oscillator_element(const Rational& a, const std::map<int, Rational>& laurent);

/// Finite dimensional Lie algebra presented by structure constants
/// [x_a, x_b] = sum_k c_{ab}^k x_k.  Construction from explicit matrices
/// checks closure, antisymmetry, the Jacobi identity, and (optionally)
/// nondegeneracy of the Killing form.
class StructureLieAlgebra {
  public:
    static StructureLieAlgebra from_matrices(std::vector<std::string> labels,
                                             std::vector<RationalMatrix> basis,
                                             bool require_nondegenerate_killing = true);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rational& structure_constant(int a, int b, int k) const;

    /// Adjoint matrix of the element with the given basis coordinates.
    RationalMatrix adjoint(const std::vector<Rational>& coords) const;

    /// Killing form kappa(x, y) = tr(ad x ad y).
    Rational killing(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

    /// Determinant of the Gram matrix of the Killing form on the basis.
    Rational killing_gram_determinant() const;

    /// Basis coordinate vector with a single 1 in slot a.
    std::vector<Rational> basis_vector(int a) const;

  private:
    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Rational>>> structure_; // [a][b][k]

    void check_consistency() const;
};

/// Bundled algebras used by the universal-extension suite.
const StructureLieAlgebra& sl2();
const StructureLieAlgebra& sl3();

/// Loop element with coefficients in a structure Lie algebra.
struct AlgebraLoopElement {
    std::map<int, std::vector<Rational>> terms; // power -> basis coordinates
};

/// Garland cocycle u(X, Y) = sum_i i * kappa(x_i, y_{-i}).
Rational loop_cocycle(const StructureLieAlgebra& g, const AlgebraLoopElement& x,
                      const AlgebraLoopElement& y);

/// Image of an algebra-valued loop element under 1 (x) ad.
LoopElement extended_adjoint(const StructureLieAlgebra& g, const AlgebraLoopElement& x);

struct UniversalCheck {
    Rational lhs; // Garland cocycle value
    Rational rhs; // pullback of the central cocycle through 1 (x) ad
    bool equal = false;
};

/// Compares the Garland cocycle with the pullback of the central cocycle via
/// the extended adjoint representation.
UniversalCheck universal_extension_check(const StructureLieAlgebra& g,
                                         const AlgebraLoopElement& x,
                                         const AlgebraLoopElement& y);

} // namespace wedge
