#include "wedge/glinf.hpp"

#include <algorithm>
#include <numeric>

#include "wedge/errors.hpp"

namespace wedge {

// ----- RationalMatrix --------------------------------------------------------

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational& RationalMatrix::at(int r, int c) {
    return data_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
}

const Rational& RationalMatrix::at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
    RationalMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
        }
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

Rational RationalMatrix::trace() const {
    Rational t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

// ----- BandMatrix ------------------------------------------------------------

BandMatrix BandMatrix::unit(int row, int col, const Rational& coeff) {
    BandMatrix m;
    m.add_finite(row, col, coeff);
    return m;
}

BandMatrix BandMatrix::shift_family(int k, const Rational& coeff) {
    BandMatrix m;
    m.add_periodic(1, k, 1, 1, coeff);
    return m;
}

void BandMatrix::add_finite(int row, int col, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto key = std::make_pair(row, col);
    auto it = finite_.find(key);
    if (it == finite_.end()) {
        finite_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) finite_.erase(it);
}

void BandMatrix::add_periodic(int period, int shift, int i, int j, const Rational& coeff) {
    if (period < 1 || i < 1 || i > period || j < 1 || j > period)
        throw DomainError("periodic entry indices must lie in 1..period");
    if (coeff.is_zero()) return;
    if (!periodic_) periodic_ = PeriodicPart{period, {}};
    if (periodic_->period != period) {
        // Re-align the existing part to the least common period first.
        int lcm = std::lcm(periodic_->period, period);
        *this = with_period(lcm);
        if (lcm != period) {
            BandMatrix other;
            other.add_periodic(period, shift, i, j, coeff);
            other = other.with_period(lcm);
            for (const auto& [k, v] : other.periodic_->entries)
                add_periodic(lcm, k.shift, k.i, k.j, v);
            return;
        }
    }
    PeriodicEntryKey key{shift, i, j};
    auto it = periodic_->entries.find(key);
    if (it == periodic_->entries.end()) {
        periodic_->entries.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) periodic_->entries.erase(it);
    }
    if (periodic_->entries.empty()) periodic_.reset();
}

Rational BandMatrix::entry(int row, int col) const {
    Rational value;
    auto it = finite_.find({row, col});
    if (it != finite_.end()) value += it->second;
    if (periodic_) {
        int n = periodic_->period;
        for (const auto& [key, coeff] : periodic_->entries) {
            int diff = col - key.j;
            if (((diff % n) + n) % n != 0) continue;
            int k = diff / n;
            if (n * (k - key.shift) + key.i == row) value += coeff;
        }
    }
    return value;
}

int BandMatrix::bandwidth() const {
    int bw = 0;
    for (const auto& [key, coeff] : finite_) {
        (void)coeff;
        bw = std::max(bw, std::abs(key.first - key.second));
    }
    if (periodic_) {
        int n = periodic_->period;
        for (const auto& [key, coeff] : periodic_->entries) {
            (void)coeff;
            bw = std::max(bw, std::abs(key.i - key.j - n * key.shift));
        }
    }
    return bw;
}

BandMatrix BandMatrix::operator+(const BandMatrix& o) const {
    BandMatrix out = *this;
    for (const auto& [key, coeff] : o.finite_) out.add_finite(key.first, key.second, coeff);
    if (o.periodic_)
        for (const auto& [key, coeff] : o.periodic_->entries)
            out.add_periodic(o.periodic_->period, key.shift, key.i, key.j, coeff);
    return out;
}

BandMatrix BandMatrix::operator-(const BandMatrix& o) const { return *this + o.scaled(-1); }

BandMatrix BandMatrix::scaled(const Rational& c) const {
    BandMatrix out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : finite_) out.add_finite(key.first, key.second, coeff * c);
    if (periodic_)
        for (const auto& [key, coeff] : periodic_->entries)
            out.add_periodic(periodic_->period, key.shift, key.i, key.j, coeff * c);
    return out;
}

BandMatrix BandMatrix::with_period(int period) const {
    BandMatrix out;
    out.finite_ = finite_;
    if (!periodic_) return out;
    int n = periodic_->period;
    if (period % n != 0) throw DomainError("with_period: new period must be a multiple");
    int q = period / n;
    for (const auto& [key, coeff] : periodic_->entries) {
        for (int r = 0; r < q; ++r) {
            int col_off = n * r + key.j;
            int row_off = n * (r - key.shift) + key.i;
            int i_new = ((row_off - 1) % period + period) % period + 1;
            int shift_new = (i_new - row_off) / period;
            out.add_periodic(period, shift_new, i_new, col_off, coeff);
        }
    }
    return out;
}

BandMatrix BandMatrix::operator*(const BandMatrix& o) const {
    BandMatrix out;

    // finite x finite
    for (const auto& [ka, va] : finite_)
        for (const auto& [kb, vb] : o.finite_)
            if (ka.second == kb.first) out.add_finite(ka.first, kb.second, va * vb);

    // finite x periodic
    if (o.periodic_) {
        int n = o.periodic_->period;
        for (const auto& [ka, va] : finite_) {
            int mid = ka.second; // column of the finite entry = row of o
            for (const auto& [kb, vb] : o.periodic_->entries) {
                int diff = mid - kb.i;
                if (((diff % n) + n) % n != 0) continue;
                int col = diff + n * kb.shift + kb.j;
                out.add_finite(ka.first, col, va * vb);
            }
        }
    }

    // periodic x finite
    if (periodic_) {
        int n = periodic_->period;
        for (const auto& [kb, vb] : o.finite_) {
            int mid = kb.first; // row of the finite entry = column of *this
            for (const auto& [ka, va] : periodic_->entries) {
                int diff = mid - ka.j;
                if (((diff % n) + n) % n != 0) continue;
                int row = mid - ka.j - n * ka.shift + ka.i;
                out.add_finite(row, kb.second, va * vb);
            }
        }
    }

    // periodic x periodic, via the loop-algebra product at a common period
    if (periodic_ && o.periodic_) {
        int lcm = std::lcm(periodic_->period, o.periodic_->period);
        BandMatrix a = with_period(lcm);
        BandMatrix b = o.with_period(lcm);
        for (const auto& [ka, va] : a.periodic_->entries)
            for (const auto& [kb, vb] : b.periodic_->entries)
                if (ka.j == kb.i)
                    out.add_periodic(lcm, ka.shift + kb.shift, ka.i, kb.j, va * vb);
    }

    return out;
}

// ----- cocycles and brackets ---------------------------------------------------

Rational central_cocycle(const BandMatrix& a, const BandMatrix& b) {
    int window = std::min(a.bandwidth(), b.bandwidth());
    Rational total;
    for (int k = 1; k <= window; ++k)
        for (int i = k - window; i <= 0; ++i) total += a.entry(i, k) * b.entry(k, i);
    for (int i = 1; i <= window; ++i)
        for (int k = i - window; k <= 0; ++k) total -= a.entry(i, k) * b.entry(k, i);
    return total;
}

Rational trace_form_cocycle(const BandMatrix& a, const BandMatrix& b) {
    if (a.periodic() || b.periodic())
        throw DomainError("trace form is evaluated on finite-support matrices only");
    auto side = [](int idx) { return idx <= 0 ? 1 : -1; };
    Rational total;
    for (const auto& [key, va] : a.finite()) {
        int flip = side(key.first) - side(key.second); // entry of [J, A] / a_rc
        if (flip == 0) continue;
        total += va * Rational(flip) * b.entry(key.second, key.first);
    }
    return total / Rational(2);
}

GlElement extended_bracket(const GlElement& x, const GlElement& y) {
    GlElement out;
    out.central = central_cocycle(x.matrix, y.matrix);
    out.matrix = x.matrix * y.matrix - y.matrix * x.matrix;
    return out;
}

// ----- loop algebra ------------------------------------------------------------

void LoopElement::add(int power, const RationalMatrix& m) {
    auto it = terms.find(power);
    if (it == terms.end()) {
        if (!m.is_zero()) terms.emplace(power, m);
        return;
    }
    it->second = it->second + m;
    if (it->second.is_zero()) terms.erase(it);
}

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
    if (x.n != y.n) throw SizeMismatch("loop bracket: size mismatch");
    LoopElement out;
    out.n = x.n;
    for (const auto& [p, mx] : x.terms)
        for (const auto& [q, my] : y.terms) out.add(p + q, mx * my - my * mx);
    return out;
}

BandMatrix embed_loop(int period, const LoopElement& x) {
    if (x.n != period)
        throw SizeMismatch("embed_loop: loop element of size " + std::to_string(x.n) +
                           " into period " + std::to_string(period));
    BandMatrix out;
    for (const auto& [power, mat] : x.terms)
        for (int i = 0; i < period; ++i)
            for (int j = 0; j < period; ++j)
                if (!mat.at(i, j).is_zero())
                    out.add_periodic(period, power, i + 1, j + 1, mat.at(i, j));
    return out;
}

GlElement oscillator_element(const Rational& a, const std::map<int, Rational>& laurent) {
    GlElement out;
    out.central = a;
    for (const auto& [power, coeff] : laurent)
        if (!coeff.is_zero()) out.matrix.add_periodic(1, power, 1, 1, coeff);
    return out;
}

// ----- structure Lie algebras ---------------------------------------------------

namespace {

std::vector<Rational> flatten(const RationalMatrix& m) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
    return out;
}

// Solves sum_a coords[a] * columns[a] = target by Gaussian elimination;
// throws DomainError when the target is outside the span.
std::vector<Rational> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                    std::vector<Rational> target) {
    size_t rows = target.size();
    size_t dim = columns.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(dim + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < dim; ++c) m[r][c] = columns[c][r];
        m[r][dim] = target[r];
    }
    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < dim && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[row], m[pr]);
        Rational inv = Rational(1) / m[row][col];
        for (size_t c = col; c <= dim; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t c = col; c <= dim; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t r = row; r < rows; ++r)
        if (!m[r][dim].is_zero()) throw DomainError("element outside the span of the basis");
    std::vector<Rational> coords(dim);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        coords[static_cast<size_t>(pivot_col_of_row[r])] = m[r][dim];
    return coords;
}

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    int n = m.rows();
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col) * inv;
            for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

} // namespace

StructureLieAlgebra StructureLieAlgebra::from_matrices(std::vector<std::string> labels,
                                                       std::vector<RationalMatrix> basis,
                                                       bool require_nondegenerate_killing) {
    if (basis.empty()) throw DomainError("empty basis");
    if (labels.size() != basis.size()) throw DomainError("label/basis size mismatch");
    int dim = static_cast<int>(basis.size());

    std::vector<std::vector<Rational>> columns;
    columns.reserve(basis.size());
    for (const auto& b : basis) columns.push_back(flatten(b));

    // Linear independence: each basis vector must resolve to a unit vector.
    for (int a = 0; a < dim; ++a) {
        auto coords = solve_in_span(columns, columns[static_cast<size_t>(a)]);
        for (int k = 0; k < dim; ++k)
            if (coords[static_cast<size_t>(k)] != Rational(k == a ? 1 : 0))
                throw DomainError("basis matrices are linearly dependent");
    }

    StructureLieAlgebra g;
    g.dim_ = dim;
    g.labels_ = std::move(labels);
    g.structure_.assign(static_cast<size_t>(dim),
                        std::vector<std::vector<Rational>>(
                            static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim))));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            RationalMatrix br = basis[static_cast<size_t>(a)] * basis[static_cast<size_t>(b)] -
                                basis[static_cast<size_t>(b)] * basis[static_cast<size_t>(a)];
            g.structure_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                solve_in_span(columns, flatten(br));
        }

    g.check_consistency();
    if (require_nondegenerate_killing && g.killing_gram_determinant().is_zero())
        throw DomainError("Killing form is degenerate");
    return g;
}

const Rational& StructureLieAlgebra::structure_constant(int a, int b, int k) const {
    return structure_[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(k)];
}

void StructureLieAlgebra::check_consistency() const {
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            for (int k = 0; k < dim_; ++k)
                if (structure_constant(a, b, k) != -structure_constant(b, a, k))
                    throw DomainError("structure constants are not antisymmetric");

    // Jacobi identity on basis triples, in coordinates.
    auto bracket = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        std::vector<Rational> w(static_cast<size_t>(dim_));
        for (int a = 0; a < dim_; ++a) {
            if (u[static_cast<size_t>(a)].is_zero()) continue;
            for (int b = 0; b < dim_; ++b) {
                if (v[static_cast<size_t>(b)].is_zero()) continue;
                Rational f = u[static_cast<size_t>(a)] * v[static_cast<size_t>(b)];
                for (int k = 0; k < dim_; ++k)
                    w[static_cast<size_t>(k)] += f * structure_constant(a, b, k);
            }
        }
        return w;
    };
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            for (int c = 0; c < dim_; ++c) {
                auto ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
                auto term1 = bracket(ea, bracket(eb, ec));
                auto term2 = bracket(eb, bracket(ec, ea));
                auto term3 = bracket(ec, bracket(ea, eb));
                for (int k = 0; k < dim_; ++k) {
                    Rational sum = term1[static_cast<size_t>(k)] + term2[static_cast<size_t>(k)] +
                                   term3[static_cast<size_t>(k)];
                    if (!sum.is_zero()) throw DomainError("Jacobi identity fails");
                }
            }
}

RationalMatrix StructureLieAlgebra::adjoint(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != dim_) throw DomainError("coordinate length mismatch");
    RationalMatrix m(dim_, dim_);
    for (int b = 0; b < dim_; ++b)
        for (int k = 0; k < dim_; ++k) {
            Rational v;
            for (int a = 0; a < dim_; ++a)
                v += coords[static_cast<size_t>(a)] * structure_constant(a, b, k);
            m.at(k, b) = v;
        }
    return m;
}

Rational StructureLieAlgebra::killing(const std::vector<Rational>& x,
                                      const std::vector<Rational>& y) const {
    return (adjoint(x) * adjoint(y)).trace();
}

Rational StructureLieAlgebra::killing_gram_determinant() const {
    RationalMatrix gram(dim_, dim_);
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) gram.at(a, b) = killing(basis_vector(a), basis_vector(b));
    return determinant(gram);
}

std::vector<Rational> StructureLieAlgebra::basis_vector(int a) const {
    std::vector<Rational> v(static_cast<size_t>(dim_));
    v[static_cast<size_t>(a)] = 1;
    return v;
}

const StructureLieAlgebra& sl2() {
    static const StructureLieAlgebra g = [] {
        RationalMatrix e(2, 2), f(2, 2), h(2, 2);
        e.at(0, 1) = 1;
        f.at(1, 0) = 1;
        h.at(0, 0) = 1;
        h.at(1, 1) = -1;
        return StructureLieAlgebra::from_matrices({"e", "f", "h"}, {e, f, h});
    }();
    return g;
}

const StructureLieAlgebra& sl3() {
    static const StructureLieAlgebra g = [] {
        auto unit = [](int r, int c) {
            RationalMatrix m(3, 3);
            m.at(r, c) = 1;
            return m;
        };
        RationalMatrix h1 = unit(0, 0) - unit(1, 1);
        RationalMatrix h2 = unit(1, 1) - unit(2, 2);
        return StructureLieAlgebra::from_matrices(
            {"e12", "e13", "e23", "f21", "f31", "f32", "h1", "h2"},
            {unit(0, 1), unit(0, 2), unit(1, 2), unit(1, 0), unit(2, 0), unit(2, 1), h1, h2});
    }();
    return g;
}

Rational loop_cocycle(const StructureLieAlgebra& g, const AlgebraLoopElement& x,
                      const AlgebraLoopElement& y) {
    Rational total;
    for (const auto& [power, coords] : x.terms) {
        auto it = y.terms.find(-power);
        if (it == y.terms.end()) continue;
        total += Rational(power) * g.killing(coords, it->second);
    }
    return total;
}

LoopElement extended_adjoint(const StructureLieAlgebra& g, const AlgebraLoopElement& x) {
    LoopElement out;
    out.n = g.dim();
    for (const auto& [power, coords] : x.terms) out.add(power, g.adjoint(coords));
    return out;
}

UniversalCheck universal_extension_check(const StructureLieAlgebra& g,
                                         const AlgebraLoopElement& x,
                                         const AlgebraLoopElement& y) {
    UniversalCheck out;
    out.lhs = loop_cocycle(g, x, y);
    out.rhs = central_cocycle(embed_loop(g.dim(), extended_adjoint(g, x)),
                              embed_loop(g.dim(), extended_adjoint(g, y)));
    out.equal = out.lhs == out.rhs;
    return out;
}

} // namespace wedge
