#include "arcalc/matrix.hpp"

#include <sstream>

#include "arcalc/errors.hpp"
#include "arcalc/kernels.hpp"

namespace arcalc {

namespace {
void require_same_field(const PrimeMatrix& a, const PrimeMatrix& b) {
    internal_check(a.field() == b.field(), "matrix operands over different fields");
}
} // namespace

PrimeMatrix::PrimeMatrix(std::initializer_list<std::initializer_list<long long>> rows,
                         Field f)
    : field_(f), rows_(rows.size()), cols_(0) {
    for (const auto& r : rows) cols_ = std::max(cols_, r.size());
    a_.assign(rows_ * cols_, 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long long v : r) a_[i * cols_ + j++] = field_.from_int(v);
        ++i;
    }
}

PrimeMatrix PrimeMatrix::identity(std::size_t n, Field f) {
    PrimeMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool PrimeMatrix::is_zero() const {
    for (std::uint32_t v : a_)
        if (v) return false;
    return true;
}

bool PrimeMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

PrimeMatrix PrimeMatrix::operator+(const PrimeMatrix& o) const {
    require_same_field(*this, o);
    internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    PrimeMatrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
    return r;
}

PrimeMatrix PrimeMatrix::operator-(const PrimeMatrix& o) const {
    require_same_field(*this, o);
    internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    PrimeMatrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
    return r;
}

PrimeMatrix PrimeMatrix::operator*(const PrimeMatrix& o) const {
    require_same_field(*this, o);
    internal_check(cols_ == o.rows_, "matrix product shape mismatch");
    PrimeMatrix r(rows_, o.cols_, field_);
    if (cols_ == 0 || o.cols_ == 0 || rows_ == 0) return r;
    const KernelTable& k = kernels();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t t = 0; t < cols_; ++t) {
            std::uint32_t c = at(i, t);
            if (c) k.accmul(acc.data(), o.row_ptr(t), c, o.cols_);
        }
        k.reduce(r.row_ptr(i), acc.data(), o.cols_, modulus());
    }
    return r;
}

PrimeMatrix PrimeMatrix::scaled(std::uint32_t c) const {
    PrimeMatrix r = *this;
    if (!r.a_.empty()) kernels().scale(r.a_.data(), c % modulus(), r.a_.size(), modulus());
    return r;
}

PrimeMatrix PrimeMatrix::transposed() const {
    PrimeMatrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

PrimeMatrix PrimeMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
    internal_check(r0 + nr <= rows_ && c0 + nc <= cols_, "matrix block out of range");
    PrimeMatrix r(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

void PrimeMatrix::set_block(std::size_t r0, std::size_t c0, const PrimeMatrix& b) {
    internal_check(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_,
                   "matrix set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) set(r0 + i, c0 + j, b.at(i, j));
}

PrimeMatrix PrimeMatrix::hstack(const PrimeMatrix& a, const PrimeMatrix& b) {
    require_same_field(a, b);
    internal_check(a.rows() == b.rows(), "hstack row mismatch");
    PrimeMatrix r(a.rows(), a.cols() + b.cols(), a.field());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

PrimeMatrix PrimeMatrix::vstack(const PrimeMatrix& a, const PrimeMatrix& b) {
    require_same_field(a, b);
    internal_check(a.cols() == b.cols(), "vstack column mismatch");
    PrimeMatrix r(a.rows() + b.rows(), a.cols(), a.field());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

PrimeMatrix PrimeMatrix::direct_sum(const PrimeMatrix& a, const PrimeMatrix& b) {
    require_same_field(a, b);
    PrimeMatrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

std::string PrimeMatrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " mod " << modulus() << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << "\n";
    }
    return os.str();
}

} // namespace arcalc
