#include "arcalc/hobjects.hpp"

#include <algorithm>
#include <sstream>

#include "arcalc/linalg.hpp"

namespace arcalc {

HMorphism make_hmorphism(const HObject& x, const HObject& y, LambdaMap u, LambdaMap v) {
    internal_check(u.source() == x.sub() && u.target() == y.sub() &&
                       v.source() == x.amb() && v.target() == y.amb(),
                   "morphism components do not match the objects");
    internal_check(compose(y.f, u) == compose(v, x.f), "morphism square does not commute");
    return {std::move(u), std::move(v)};
}

HMorphism identity_hmorphism(const HObject& x) {
    return {LambdaMap::identity(x.sub()), LambdaMap::identity(x.amb())};
}

HMorphism compose_h(const HMorphism& second, const HMorphism& first) {
    return {compose(second.u, first.u), compose(second.v, first.v)};
}

HMorphism direct_sum_h(const HMorphism& a, const HMorphism& b) {
    return {direct_sum_map(a.u, b.u), direct_sum_map(a.v, b.v)};
}

HObject direct_sum_h(const HObject& a, const HObject& b) {
    return HObject(direct_sum_map(a.f, b.f));
}

SObject direct_sum_s(const SObject& a, const SObject& b) {
    return SObject(direct_sum_h(a.h, b.h));
}

FunctorResult functor_apply(const HObject& x, MapFunctor which) {
    switch (which) {
        case MapFunctor::ker: {
            KernelPair k = kernel_of(x.f);
            HObject y(k.incl);
            return {y, make_hmorphism(y, x, k.incl, x.f), true};
        }
        case MapFunctor::cok: {
            CokernelPair c = cokernel_of(x.f);
            HObject y(c.proj);
            return {y, make_hmorphism(x, y, x.f, c.proj), false};
        }
        case MapFunctor::mono: {
            ImagePair im = image_of(x.f);
            HObject y(im.incl);
            return {y, make_hmorphism(x, y, im.corestr, LambdaMap::identity(x.amb())), false};
        }
        case MapFunctor::epi: {
            ImagePair im = image_of(x.f);
            HObject y(im.corestr);
            return {y, make_hmorphism(y, x, LambdaMap::identity(x.sub()), im.incl), true};
        }
    }
    throw InternalCheckFailure("unknown functor");
}

std::vector<HMorphism> s_hom_basis(const SObject& x, const SObject& y) {
    // v must carry im(x.f) into im(y.f); the condition is proj_y . v . x.f = 0
    // where proj_y is the cokernel projection of y.f.
    CokernelPair cy = cokernel_of(y.f());
    std::vector<LambdaMap> vb = hom_basis(x.amb(), y.amb());
    const Field f = x.amb().alg().field;
    if (vb.empty()) return {};

    const std::size_t crows = cy.mod.dim() * x.sub().dim();
    PrimeMatrix sys(std::max<std::size_t>(crows, 1), vb.size(), f);
    for (std::size_t c = 0; c < vb.size(); ++c) {
        PrimeMatrix cond = cy.proj.m() * vb[c].m() * x.f().m();
        for (std::size_t i = 0; i < cond.rows(); ++i)
            for (std::size_t j = 0; j < cond.cols(); ++j)
                sys.set(i * cond.cols() + j, c, cond.at(i, j));
    }
    PrimeMatrix coeffs = kernel_basis(sys);

    std::vector<HMorphism> out;
    for (std::size_t c = 0; c < coeffs.cols(); ++c) {
        PrimeMatrix vm(y.amb().dim(), x.amb().dim(), f);
        for (std::size_t k = 0; k < vb.size(); ++k) {
            uint32_t co = coeffs.at(k, c);
            if (co) vm = vm + vb[k].m().scaled(co);
        }
        LambdaMap v(x.amb(), y.amb(), vm);
        auto usol = solve_linear(y.f().m(), v.m() * x.f().m());
        internal_check(usol.has_value(), "restriction to the submodules does not exist");
        LambdaMap u(x.sub(), y.sub(), *usol);
        out.push_back(make_hmorphism(x.h, y.h, u, v));
    }
    return out;
}

namespace {

void append_partition(std::vector<long long>& data, const Partition& parts, bool graded) {
    data.push_back(static_cast<long long>(parts.size()));
    for (const auto& p : parts) {
        data.push_back(static_cast<long long>(p.len));
        if (graded) data.push_back(p.top);
    }
}

} // namespace

InvariantKey invariant_key(const SObject& x) {
    const LambdaModule& b = x.amb();
    const AlgebraSpec& alg = b.alg();
    InvariantKey key;
    key.data.push_back(static_cast<long long>(x.sub().dim()));
    key.data.push_back(static_cast<long long>(b.dim()));
    append_partition(key.data, decompose_module(x.sub()).parts, alg.graded());
    append_partition(key.data, decompose_module(b).parts, alg.graded());

    PrimeMatrix a_span = column_rref(x.f().m());
    PrimeMatrix power = b.t();
    for (std::size_t j = 1; j < alg.n; ++j) {
        key.data.push_back(static_cast<long long>(span_intersection(a_span, column_rref(power)).cols()));
        key.data.push_back(static_cast<long long>(span_intersection(a_span, kernel_basis(power)).cols()));
        key.data.push_back(static_cast<long long>(span_sum(a_span, column_rref(power)).cols()));
        power = power * b.t();
    }
    return key;
}

std::string InvariantKey::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i) out << '.';
        out << data[i];
    }
    return out.str();
}

std::string canonical_label(const SObject& x) {
    ModuleDecomposition dec = decompose_module(x.amb());
    PrimeMatrix sub = column_rref(dec.u * x.f().m());
    std::ostringstream out;
    out << partition_to_string(dec.parts, x.amb().alg().graded()) << '/';
    for (std::size_t c = 0; c < sub.cols(); ++c) {
        if (c) out << ';';
        for (std::size_t r = 0; r < sub.rows(); ++r) {
            if (r) out << ',';
            out << sub.at(r, c);
        }
    }
    return out.str();
}

std::string object_to_string(const SObject& x) {
    const bool graded = x.amb().alg().graded();
    std::ostringstream out;
    out << '(' << partition_to_string(decompose_module(x.sub()).parts, graded) << " ⊆ "
        << partition_to_string(decompose_module(x.amb()).parts, graded) << ')';
    return out.str();
}

SObject shift_object(const SObject& x, int l) {
    LambdaModule a = shifted_module(x.sub(), l);
    LambdaModule b = shifted_module(x.amb(), l);
    return SObject(LambdaMap(a, b, x.f().m()));
}

int normalize_offset(const SObject& x) {
    if (!x.amb().alg().graded() || x.amb().dim() == 0) return 0;
    int top = x.amb().degrees()[0];
    for (int d : x.amb().degrees()) top = std::max(top, d);
    return -top;
}

bool is_zero_object(const SObject& x) { return x.amb().dim() == 0 && x.sub().dim() == 0; }

} // namespace arcalc
