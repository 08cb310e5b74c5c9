#include "nodal/exactlin.hpp"

#include <algorithm>
#include <cctype>

namespace nodal {

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    }
    const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    mpz_class n(strip_plus(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length does not match column count");
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length does not match row count");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != 0 && v[c] != 0) acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (other.rows_ != cols_) throw std::invalid_argument("matrix-matrix dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    return out;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row. Scaling a row by a nonzero integer changes
// neither the row space nor the reduced echelon form.
IntRows integer_rows(const Matrix& m) {
    IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m(r, c);
            rows[r][c] = q.get_num() * (scale / q.get_den());
        }
    }
    return rows;
}

// Fraction-free forward elimination. After the k-th pivot every entry below
// the pivot rows equals a (k+1)x(k+1) minor of the input, so the division by
// the previous pivot is exact. Returns the pivot columns; `rows` is left in
// integer row echelon form with pivot rows first.
std::vector<std::size_t> bareiss_echelon(IntRows& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    mpz_class previous = 1;
    std::size_t r = 0;
    const std::size_t n = rows.size();
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && rows[p][c] == 0) ++p;
        if (p == n) continue;
        if (p != r) std::swap(rows[p], rows[r]);
        const mpz_class pivot = rows[r][c];
        for (std::size_t i = r + 1; i < n; ++i) {
            const mpz_class factor = rows[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = pivot * rows[i][j] - factor * rows[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                rows[i][j] = std::move(v);
            }
            rows[i][c] = 0;
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    IntRows rows = integer_rows(m);
    const std::vector<std::size_t> pivots = bareiss_echelon(rows, m.cols());
    const std::size_t rk = pivots.size();

    Matrix reduced(m.rows(), m.cols());
    for (std::size_t r = 0; r < rk; ++r) {
        const mpz_class& lead = rows[r][pivots[r]];
        for (std::size_t c = pivots[r]; c < m.cols(); ++c) {
            if (rows[r][c] == 0) continue;
            Rational q(rows[r][c], lead);
            q.canonicalize();
            reduced(r, c) = std::move(q);
        }
    }
    // Back substitution, bottom pivot first.
    for (std::size_t k = rk; k-- > 0;) {
        const std::size_t pc = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Rational factor = reduced(i, pc);
            if (factor == 0) continue;
            for (std::size_t c = pc; c < m.cols(); ++c) {
                if (reduced(k, c) != 0) reduced(i, c) -= factor * reduced(k, c);
            }
        }
    }
    return {std::move(reduced), pivots};
}

std::size_t rank(const Matrix& m) {
    IntRows rows = integer_rows(m);
    return bareiss_echelon(rows, m.cols()).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
    const std::size_t n = m.cols();
    Matrix augmented(m.rows(), n + rhs.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
        for (std::size_t c = 0; c < rhs.cols(); ++c) augmented(r, n + c) = rhs(r, c);
    }
    const auto [reduced, pivots] = rref(augmented);
    std::size_t rk = 0;
    while (rk < pivots.size() && pivots[rk] < n) ++rk;
    // Rows past rank(m) are zero on the m-block; any nonzero on the rhs-block
    // means that column is inconsistent.
    for (std::size_t r = rk; r < m.rows(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c)
            if (reduced(r, n + c) != 0) return std::nullopt;

    Matrix x(n, rhs.cols());
    for (std::size_t k = 0; k < rk; ++k)
        for (std::size_t c = 0; c < rhs.cols(); ++c) x(pivots[k], c) = reduced(k, n + c);
    return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
    auto x = solve_columns(m, Matrix::from_columns({rhs}, rhs.size()));
    if (!x) return std::nullopt;
    return x->column(0);
}

}  // namespace nodal
