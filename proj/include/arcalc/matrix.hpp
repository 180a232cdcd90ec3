#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "arcalc/field.hpp"

namespace arcalc {

// Dense matrix over GF(p), row-major canonical residues.  Maps act on column
// vectors: a map source -> target is stored as a (dim target) x (dim source)
// matrix, and a composite "first f then g" is the product g*f.
class PrimeMatrix {
public:
    PrimeMatrix() : rows_(0), cols_(0) {}

    PrimeMatrix(std::size_t rows, std::size_t cols, Field f)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    // Row-of-rows literal, entries reduced mod p.
    PrimeMatrix(std::initializer_list<std::initializer_list<long long>> rows, Field f);

    static PrimeMatrix identity(std::size_t n, Field f);
    static PrimeMatrix zero(std::size_t rows, std::size_t cols, Field f) {
        return PrimeMatrix(rows, cols, f);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    std::uint32_t modulus() const { return field_.modulus(); }

    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { a_[r * cols_ + c] = v; }

    std::uint32_t* row_ptr(std::size_t r) { return a_.data() + r * cols_; }
    const std::uint32_t* row_ptr(std::size_t r) const { return a_.data() + r * cols_; }

    bool operator==(const PrimeMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
    }
    bool operator!=(const PrimeMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    PrimeMatrix operator+(const PrimeMatrix& o) const;
    PrimeMatrix operator-(const PrimeMatrix& o) const;
    PrimeMatrix operator*(const PrimeMatrix& o) const;  // matrix product
    PrimeMatrix scaled(std::uint32_t c) const;
    PrimeMatrix negated() const { return scaled(field_.neg(1)); }
    PrimeMatrix transposed() const;

    PrimeMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const PrimeMatrix& b);

    // [A | B] and [A ; B].
    static PrimeMatrix hstack(const PrimeMatrix& a, const PrimeMatrix& b);
    static PrimeMatrix vstack(const PrimeMatrix& a, const PrimeMatrix& b);
    // diag(A, B).
    static PrimeMatrix direct_sum(const PrimeMatrix& a, const PrimeMatrix& b);

    PrimeMatrix column(std::size_t c) const { return block(0, c, rows_, 1); }

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

} // namespace arcalc
