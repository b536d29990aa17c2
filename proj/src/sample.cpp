#include "homwb/sample.hpp"

#include <random>

#include "homwb/resolution.hpp"

namespace homwb {

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.is_finite()) {
        std::uniform_int_distribution<long> d(0, f.characteristic() - 1);
        return f.from_int(d(rng));
    }
    std::uniform_int_distribution<long> d(-2, 2);
    return f.from_int(d(rng));
}

Matrix random_vector(const Field& f, std::size_t dim, std::mt19937_64& rng) {
    Matrix v(f, dim, 1);
    for (std::size_t i = 0; i < dim; ++i) v.at(i, 0) = random_scalar(f, rng);
    return v;
}

bool same_representation(const FDModule& m, const FDModule& n) {
    if (m.dim() != n.dim()) return false;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
        if (!(m.act(i) == n.act(i))) return false;
    return true;
}

struct Builder {
    SampleOptions opts;
    SampleFamily fam;

    bool full() const { return fam.modules.size() >= opts.size; }

    void add(const FDModule& m) {
        if (full() || m.dim() > opts.dim_bound) return;
        for (const auto& have : fam.modules)
            if (same_representation(have, m)) return;
        fam.modules.push_back(m);
    }
};

/// Random extension of c by a: push out the presentation of c along a random
/// map from its syzygy into a. The middle term caps at twice the dimension
/// bound so the family stays desk sized.
void try_extension(Builder& b, const FDModule& a, const FDModule& c, std::mt19937_64& rng) {
    if (a.dim() == 0 || c.dim() == 0) return;
    Resolution rc = projective_resolution(c, 0);
    Morphism k = kernel_inclusion(rc.maps[0]);
    if (rc.terms[0].dim() + a.dim() - k.from.dim() > 2 * b.opts.dim_bound) return;
    auto h = hom_space(k.from, a);
    Matrix phi(a.field(), a.dim(), k.from.dim());
    for (const auto& g : h) phi = phi + g.scaled(random_scalar(a.field(), rng));
    DirectSum big = direct_sum({rc.terms[0], a});
    Matrix jmat = big.inclusions[0].mat * k.mat - big.inclusions[1].mat * phi;
    SubQuotient cok = cokernel_projection(Morphism::unchecked(k.from, big.module, std::move(jmat)));
    Morphism mono = cok.map.compose_after(big.inclusions[1]);
    Morphism onto = rc.maps[0].compose_after(big.projections[0]);
    // onto kills the pushed-out relations, so it descends along any linear
    // section of the cokernel projection
    auto section = cok.map.mat.solve(Matrix::identity(a.field(), cok.module.dim()));
    if (!section || !mono.is_mono()) return;  // defensive; the pushout always works
    Morphism epi = Morphism::create(cok.module, c, onto.mat * *section);
    ShortExactSequence s{mono, epi};
    if (!s.is_exact()) return;
    b.fam.monos.push_back(mono);
    b.fam.sequences.push_back(std::move(s));
    b.add(cok.module);
}

void try_submodule(Builder& b, const FDModule& m, std::mt19937_64& rng) {
    if (m.dim() == 0) return;
    Matrix v = random_vector(m.field(), m.dim(), rng);
    if (v.is_zero()) return;
    Matrix span = spin(m, v);
    if (span.cols() == 0 || span.cols() == m.dim()) return;
    SubQuotient sub = submodule(m, span);
    SubQuotient quo = quotient_module(m, span);
    b.fam.monos.push_back(sub.map);
    b.fam.sequences.push_back({sub.map, quo.map});
    b.add(sub.module);
    b.add(quo.module);
}

}  // namespace

SampleFamily sample_family(const FDAlgebra::Ptr& a, const SampleOptions& opts) {
    Builder b{opts, {}};
    b.fam.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);

    const StandardModules& sm = standard_modules(a);
    for (const auto& s : sm.simples) b.add(s);
    for (const auto& p : sm.projectives) b.add(p);
    for (const auto& e : sm.injectives) b.add(e);
    b.add(regular_module(a));

    for (const auto& p : sm.projectives) {
        Matrix rad = radical_subspace(p);
        if (rad.cols() > 0 && rad.cols() < p.dim()) {
            SubQuotient sub = submodule(p, rad);
            b.fam.monos.push_back(sub.map);
            b.fam.sequences.push_back({sub.map, top(p).map});
            b.add(sub.module);
        }
    }
    for (const auto& s : sm.simples)
        for (std::size_t i = 1; i <= opts.syzygy_depth; ++i) b.add(syzygy(s, i));

    // random padding; the attempt budget keeps termination unconditional
    std::size_t attempts = 8 * opts.size;
    std::vector<FDModule> seeds = b.fam.modules;
    while (attempts-- > 0 && (!b.full() || b.fam.sequences.size() < opts.size)) {
        if (seeds.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
        if (attempts % 3 == 0) {
            try_extension(b, seeds[pick(rng)], seeds[pick(rng)], rng);
        } else {
            try_submodule(b, seeds[pick(rng)], rng);
        }
    }
    return b.fam;
}

}  // namespace homwb
