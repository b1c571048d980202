#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace paracert::gf2 {

/// Bit vector over GF(2), packed into 64-bit words (low bit = index 0).
/// Padding bits above size() are kept zero so word-level operations
/// (xor, and+parity) never see garbage.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t len) : len_(len), words_(word_count(len)) {}

    static Gf2Vector from_bits(std::initializer_list<int> bits);
    static Gf2Vector ones(std::size_t len);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    /// Number of set bits.
    std::size_t weight() const;

    bool operator==(const Gf2Vector&) const = default;

    static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2) with packed row-major bit rows.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(Gf2Vector::word_count(cols)),
          words_(rows * wpr_) {}

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix from_rows(
        std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    std::span<const std::uint64_t> row_words(std::size_t r) const;
    std::span<std::uint64_t> row_words(std::size_t r);

    void swap_rows(std::size_t a, std::size_t b);
    /// rows[dst] ^= rows[src]
    void xor_row_into(std::size_t dst, std::size_t src);
    /// parity of <row r, v> over GF(2); requires v.size() == cols()
    int row_dot(std::size_t r, const Gf2Vector& v) const;
    /// matrix-vector product over GF(2)
    Gf2Vector multiply(const Gf2Vector& v) const;

    bool operator==(const Gf2Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Symmetric matrix over GF(2) with unit diagonal: the mod-2 linking
/// data of a surgery presentation, with l_ii set to 1. Construction
/// validates both properties.
class LinkingParity {
public:
    explicit LinkingParity(Gf2Matrix m);

    /// n x n with zero off-diagonal (the parity of an unlink).
    static LinkingParity decoupled(std::size_t n);

    std::size_t size() const { return m_.rows(); }
    bool at(std::size_t i, std::size_t j) const { return m_.get(i, j); }
    const Gf2Matrix& matrix() const { return m_; }

    bool operator==(const LinkingParity&) const = default;

private:
    Gf2Matrix m_;
};

/// Solve m * x = rhs over GF(2). Deterministic: Gaussian elimination
/// pivoting on the lowest available column index, free variables set to
/// zero. Returns nullopt when the system is inconsistent; throws
/// std::invalid_argument when rhs.size() != m.rows().
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& rhs);

std::size_t rank(const Gf2Matrix& m);

/// Solve L * a = (1,...,1) for a symmetric unit-diagonal L. A solution
/// always exists for such matrices; absence is reported as
/// InternalError since it can only mean a bug.
Gf2Vector solve_framing_system(const LinkingParity& lp);

}  // namespace paracert::gf2
