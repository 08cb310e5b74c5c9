#ifndef NODAL_EXACTLIN_HPP
#define NODAL_EXACTLIN_HPP

// Exact rational scalars and dense matrices over them.
//
// Everything here is exact: there is no floating point anywhere, and no
// tolerance in any comparison. Elimination runs fraction-free (Bareiss) on
// integer-scaled rows, which keeps intermediate entries bounded by minors
// of the input instead of letting rational denominators compound.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nodal {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    /// Builds a matrix from row vectors, all of which must have length `cols`.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return entries_; }
    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Vector operator*(const Vector& v) const;
    Matrix operator*(const Matrix& other) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot entries are exactly 1, pivots are the
/// leftmost nonzero column of each nonzero row, zero rows sink to the bottom.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Right kernel basis in canonical form: one vector per free column in
/// ascending order, with 1 in its own free slot and 0 in every other free slot.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One exact solution of m * x = rhs with free variables set to 0, or
/// nullopt if the system is inconsistent. Throws std::invalid_argument when
/// rhs.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Column-wise solve for several right-hand sides sharing one elimination.
/// Returns nullopt if any column is inconsistent.
std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& rhs);

bool is_zero(const Vector& v);

}  // namespace nodal

#endif  // NODAL_EXACTLIN_HPP
