#include "paracert/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "paracert/errors.hpp"
#include "paracert/simd/kernels.hpp"

namespace paracert::gf2 {

Gf2Vector Gf2Vector::from_bits(std::initializer_list<int> bits) {
    Gf2Vector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

Gf2Vector Gf2Vector::ones(std::size_t len) {
    Gf2Vector v(len);
    for (std::size_t i = 0; i < len; ++i) v.set(i, true);
    return v;
}

bool Gf2Vector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("Gf2Vector index out of range");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void Gf2Vector::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("Gf2Vector index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

std::size_t Gf2Vector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Gf2Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("ragged row in Gf2Matrix literal");
        std::size_t j = 0;
        for (int b : row) m.set(i, j++, b != 0);
        ++i;
    }
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix index out of range");
    return (words_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (value)
        words_[r * wpr_ + c / 64] |= mask;
    else
        words_[r * wpr_ + c / 64] &= ~mask;
}

std::span<const std::uint64_t> Gf2Matrix::row_words(std::size_t r) const {
    return {words_.data() + r * wpr_, wpr_};
}

std::span<std::uint64_t> Gf2Matrix::row_words(std::size_t r) {
    return {words_.data() + r * wpr_, wpr_};
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row_words(a);
    auto rb = row_words(b);
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(ra[i], rb[i]);
}

void Gf2Matrix::xor_row_into(std::size_t dst, std::size_t src) {
    simd::active().xor_words(row_words(dst).data(), row_words(src).data(),
                             wpr_);
}

int Gf2Matrix::row_dot(std::size_t r, const Gf2Vector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Gf2Matrix::row_dot dimension mismatch");
    return simd::active().and_parity(row_words(r).data(), v.words().data(),
                                     wpr_);
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Gf2Matrix::multiply dimension mismatch");
    Gf2Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, row_dot(r, v) != 0);
    return out;
}

LinkingParity::LinkingParity(Gf2Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("linking parity matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        if (!m_.get(i, i))
            throw std::invalid_argument(
                "linking parity matrix must have unit diagonal");
        for (std::size_t j = i + 1; j < m_.cols(); ++j) {
            if (m_.get(i, j) != m_.get(j, i))
                throw std::invalid_argument(
                    "linking parity matrix must be symmetric");
        }
    }
}

LinkingParity LinkingParity::decoupled(std::size_t n) {
    return LinkingParity(Gf2Matrix::identity(n));
}

namespace {

struct Echelon {
    Gf2Matrix m;
    Gf2Vector rhs;                   // eliminated alongside m
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
};

// Forward elimination, pivoting on the lowest-index available column
// and, within a column, the lowest-index remaining row. After this,
// every pivot row's leftmost 1 sits in its pivot column and no row
// below a pivot has a 1 in that column.
Echelon eliminate(Gf2Matrix m, Gf2Vector rhs) {
    Echelon e{std::move(m), std::move(rhs), {}, {}};
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < e.m.cols() && next_row < e.m.rows();
         ++col) {
        std::size_t pivot = next_row;
        while (pivot < e.m.rows() && !e.m.get(pivot, col)) ++pivot;
        if (pivot == e.m.rows()) continue;
        e.m.swap_rows(pivot, next_row);
        if (e.rhs.size() != 0 && pivot != next_row) {
            const bool t = e.rhs.get(pivot);
            e.rhs.set(pivot, e.rhs.get(next_row));
            e.rhs.set(next_row, t);
        }
        for (std::size_t r = next_row + 1; r < e.m.rows(); ++r) {
            if (e.m.get(r, col)) {
                e.m.xor_row_into(r, next_row);
                if (e.rhs.size() != 0)
                    e.rhs.set(r, e.rhs.get(r) ^ e.rhs.get(next_row));
            }
        }
        e.pivot_rows.push_back(next_row);
        e.pivot_cols.push_back(col);
        ++next_row;
    }
    return e;
}

}  // namespace

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& rhs) {
    if (rhs.size() != m.rows())
        throw std::invalid_argument(
            "gf2::solve dimension mismatch: rhs length " +
            std::to_string(rhs.size()) + " vs " + std::to_string(m.rows()) +
            " rows");

    Echelon e = eliminate(m, rhs);

    for (std::size_t r = e.pivot_rows.size(); r < m.rows(); ++r) {
        if (e.rhs.get(r)) return std::nullopt;  // 0 = 1 row: inconsistent
    }

    // Back-substitution with free variables at zero. Pivot rows have no
    // entries left of their pivot column, so a full row-dot against the
    // partially built solution picks up exactly the trailing terms.
    Gf2Vector x(m.cols());
    for (std::size_t k = e.pivot_rows.size(); k-- > 0;) {
        const std::size_t row = e.pivot_rows[k];
        const std::size_t col = e.pivot_cols[k];
        const int trailing = e.m.row_dot(row, x);
        x.set(col, (static_cast<int>(e.rhs.get(row)) ^ trailing) != 0);
    }
    return x;
}

std::size_t rank(const Gf2Matrix& m) {
    return eliminate(m, Gf2Vector()).pivot_rows.size();
}

Gf2Vector solve_framing_system(const LinkingParity& lp) {
    const std::size_t n = lp.size();
    std::optional<Gf2Vector> a = solve(lp.matrix(), Gf2Vector::ones(n));
    if (!a)
        throw InternalError(
            "framing system L a = 1 reported unsolvable; symmetric "
            "unit-diagonal systems always have a solution");
    return *std::move(a);
}

}  // namespace paracert::gf2
