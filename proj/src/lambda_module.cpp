#include "arcalc/lambda_module.hpp"

#include <algorithm>
#include <sstream>

#include "arcalc/linalg.hpp"

namespace arcalc {

bool partition_less(const JordanPart& a, const JordanPart& b) {
    if (a.len != b.len) return a.len > b.len;
    return a.top < b.top;
}

void sort_partition(Partition& parts) {
    std::stable_sort(parts.begin(), parts.end(), partition_less);
}

std::string partition_to_string(const Partition& parts, bool graded) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i].len;
        if (graded) out << '<' << parts[i].top << '>';
    }
    out << ']';
    return out.str();
}

std::size_t partition_dim(const Partition& parts) {
    std::size_t d = 0;
    for (const auto& p : parts) d += p.len;
    return d;
}

LambdaModule::LambdaModule(AlgebraSpec alg, PrimeMatrix t, std::vector<int> degrees)
    : alg_(alg), t_(std::move(t)), degrees_(std::move(degrees)) {
    if (t_.rows() != t_.cols()) throw InvalidInput("module action matrix must be square");
    if (!(t_.field() == alg_.field)) throw InvalidInput("module action matrix over wrong field");
    PrimeMatrix power = t_;
    for (std::size_t k = 1; k < alg_.n && !power.is_zero(); ++k) power = power * t_;
    if (!power.is_zero()) throw InvalidInput("T^n does not vanish on the given module");
    if (alg_.graded()) {
        if (degrees_.size() != t_.rows())
            throw InvalidInput("graded module needs one degree per basis vector");
        for (std::size_t i = 0; i < t_.rows(); ++i)
            for (std::size_t j = 0; j < t_.cols(); ++j)
                if (t_.at(i, j) != 0 && degrees_[i] != degrees_[j] - 1)
                    throw InvalidInput("T must be homogeneous of degree -1");
    } else if (!degrees_.empty()) {
        throw InvalidInput("plain modules must not carry degrees");
    }
}

LambdaModule LambdaModule::zero(const AlgebraSpec& alg) {
    return LambdaModule(alg, PrimeMatrix(0, 0, alg.field),
                        alg.graded() ? std::vector<int>{} : std::vector<int>{});
}

LambdaModule module_from_partition(const AlgebraSpec& alg, const Partition& parts) {
    std::size_t d = partition_dim(parts);
    PrimeMatrix t(d, d, alg.field);
    std::vector<int> degs;
    std::size_t off = 0;
    for (const auto& p : parts) {
        if (p.len == 0 || p.len > alg.n)
            throw InvalidInput("Jordan block length must lie in 1..n");
        for (std::size_t j = 0; j + 1 < p.len; ++j) t.set(off + j + 1, off + j, 1);
        if (alg.graded())
            for (std::size_t j = 0; j < p.len; ++j) degs.push_back(p.top - static_cast<int>(j));
        off += p.len;
    }
    return LambdaModule(alg, std::move(t), std::move(degs));
}

LambdaModule direct_sum_module(const LambdaModule& a, const LambdaModule& b) {
    internal_check(a.alg() == b.alg(), "direct sum of modules over different algebras");
    std::vector<int> degs = a.degrees();
    degs.insert(degs.end(), b.degrees().begin(), b.degrees().end());
    return LambdaModule(a.alg(), PrimeMatrix::direct_sum(a.t(), b.t()), std::move(degs));
}

namespace {

int column_degree(const PrimeMatrix& col, std::size_t c, const std::vector<int>& ambient) {
    int deg = 0;
    bool found = false;
    for (std::size_t i = 0; i < col.rows(); ++i) {
        if (col.at(i, c) == 0) continue;
        if (!found) {
            deg = ambient[i];
            found = true;
        } else {
            internal_check(ambient[i] == deg, "graded vector is not homogeneous");
        }
    }
    internal_check(found, "zero vector has no degree");
    return deg;
}

} // namespace

ModuleDecomposition decompose_module(const LambdaModule& m) {
    const Field f = m.alg().field;
    const std::size_t d = m.dim();
    if (d == 0) return {Partition{}, PrimeMatrix(0, 0, f)};

    // Kernel filtration 0 = K_0 <= K_1 <= ... <= K_L = M of the powers of T.
    std::vector<PrimeMatrix> kernels;
    kernels.push_back(PrimeMatrix(d, 0, f));
    PrimeMatrix power = PrimeMatrix::identity(d, f);
    std::size_t level = 0;
    while (kernels.back().cols() < d) {
        power = m.t() * power;
        kernels.push_back(kernel_basis(power));
        ++level;
        internal_check(level <= m.alg().n, "kernel filtration did not stabilize");
    }

    // Build Jordan chains from the top level down.  At level j the vectors
    // already present are K_{j-1} together with the j-th elements of longer
    // chains; new chain heads extend them to a basis of K_j.
    struct Chain {
        std::vector<PrimeMatrix> vecs; // head first, then T head, ...
    };
    std::vector<Chain> chains;
    for (std::size_t j = level; j >= 1; --j) {
        std::vector<PrimeMatrix> present;
        const PrimeMatrix& below = kernels[j - 1];
        for (std::size_t c = 0; c < below.cols(); ++c)
            present.push_back(below.block(0, c, d, 1));
        // The element of a length-L chain lying in K_j is T^{L-j} head.
        for (const auto& ch : chains)
            if (ch.vecs.size() > j) present.push_back(ch.vecs[ch.vecs.size() - j]);

        PrimeMatrix span(d, 0, f);
        if (!present.empty()) {
            span = present[0];
            for (std::size_t i = 1; i < present.size(); ++i)
                span = PrimeMatrix::hstack(span, present[i]);
        }
        const PrimeMatrix& kj = kernels[j];
        PrimeMatrix combined = span.cols() ? PrimeMatrix::hstack(span, kj) : kj;
        RrefResult rr = rref(combined);
        for (std::size_t piv : rr.pivots) {
            if (piv < span.cols()) continue;
            PrimeMatrix head = kj.block(0, piv - span.cols(), d, 1);
            Chain ch;
            ch.vecs.push_back(head);
            for (std::size_t step = 1; step < j; ++step)
                ch.vecs.push_back(m.t() * ch.vecs.back());
            chains.push_back(std::move(ch));
        }
    }

    std::vector<std::size_t> order(chains.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Partition parts(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
        parts[i].len = chains[i].vecs.size();
        parts[i].top = m.alg().graded()
                           ? column_degree(chains[i].vecs[0], 0, m.degrees())
                           : 0;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return partition_less(parts[a], parts[b]);
    });

    Partition sorted;
    PrimeMatrix v(d, 0, f);
    for (std::size_t idx : order) {
        sorted.push_back(parts[idx]);
        for (const auto& vec : chains[idx].vecs) v = PrimeMatrix::hstack(v, vec);
    }
    internal_check(v.cols() == d, "Jordan chains do not span the module");
    PrimeMatrix u = inverse_checked(v);
    LambdaModule canon = module_from_partition(m.alg(), sorted);
    internal_check(u * m.t() == canon.t() * u, "Jordan change of basis is not intertwining");
    if (m.alg().graded()) {
        for (std::size_t c = 0; c < d; ++c)
            internal_check(column_degree(v, c, m.degrees()) == canon.degrees()[c],
                           "Jordan basis is not homogeneous");
    }
    return {std::move(sorted), std::move(u)};
}

PrimeMatrix socle_basis(const LambdaModule& m) { return kernel_basis(m.t()); }

PrimeMatrix radical_basis(const LambdaModule& m) { return column_rref(m.t()); }

std::size_t top_dim(const LambdaModule& m) { return m.dim() - rank(m.t()); }

bool is_projective_module(const LambdaModule& m) {
    // All blocks have length n exactly when dim = n * (number of blocks).
    return m.dim() == m.alg().n * top_dim(m);
}

LambdaModule shifted_module(const LambdaModule& m, int l) {
    if (!m.alg().graded())
        throw UndefinedOperation("degree shift is only defined on the graded backend");
    std::vector<int> degs = m.degrees();
    for (int& dg : degs) dg += l;
    return LambdaModule(m.alg(), m.t(), std::move(degs));
}

} // namespace arcalc
