#include "homwb/resolution.hpp"

#include <stdexcept>

namespace homwb {

std::string to_string(const InvariantValue& v) {
    switch (v.kind) {
        case InvariantValue::Kind::Exact: return std::to_string(v.value);
        case InvariantValue::Kind::AtLeast: return ">=" + std::to_string(v.value);
        case InvariantValue::Kind::Infinite: return "infinity";
        case InvariantValue::Kind::ZeroModule: return "zero-module";
    }
    return "?";
}

namespace {

// Lifting data for one indecomposable projective P, cyclic on a vector v:
// maps out of P are determined by the image of v, which only has to kill
// the annihilator of v. coords expresses the basis of P through the orbit
// of v under the algebra basis, so lifts come out as plain matrix products.
struct ProjectivePeel {
    FDModule proj;
    FDModule simple_top;
    Matrix onto_top;  // top(P).dim x P.dim
    Matrix gen;       // v
    Matrix ann;       // annihilator of v, columns in algebra coordinates
    Matrix coords;    // orbit * coords = id_P
};

const std::vector<ProjectivePeel>& cover_kit(const FDAlgebra::Ptr& a) {
    return a->memo<std::vector<ProjectivePeel>>("cover_kit", [&] {
        std::vector<ProjectivePeel> kit;
        for (const auto& p : standard_modules(a).projectives) {
            auto t = top(p);
            std::size_t gj = 0;
            while (t.map.mat.col(gj).is_zero()) ++gj;  // nonzero top image generates
            Matrix v(p.field(), p.dim(), 1);
            v.at(gj, 0) = p.field().one();
            Matrix orbit(p.field(), p.dim(), a->dim());
            for (std::size_t k = 0; k < a->dim(); ++k) orbit.set_block(0, k, p.act(k) * v);
            auto coords = orbit.solve(Matrix::identity(p.field(), p.dim()));
            if (!coords) throw std::logic_error("projective not cyclic on its generator");
            kit.push_back({p, t.module, t.map.mat, v, orbit.kernel_basis(), std::move(*coords)});
        }
        return kit;
    });
}

}  // namespace

Cover projective_cover(const FDModule& m) {
    const auto& a = m.algebra();
    const Field& f = m.field();
    if (m.dim() == 0) {
        FDModule z = FDModule::zero(a);
        return {z, Morphism::unchecked(z, m, Matrix(f, 0, 0))};
    }
    auto t = top(m);  // q: m -> T, with T semisimple
    // peel simple images off T: each nonzero map from a simple is injective,
    // and a simple image meets the running span trivially or lies inside it
    Matrix span(f, t.module.dim(), 0);
    std::vector<FDModule> parts;
    std::vector<Matrix> lifts;
    for (const auto& pk : cover_kit(a)) {
        if (span.cols() == t.module.dim()) break;
        for (const auto& phi : hom_space(pk.simple_top, t.module)) {
            if (span_contains(span, phi)) continue;
            // w with q(w) = phi(image of the generator) and ann(v) . w = 0
            Matrix sys = t.map.mat;
            Matrix rhs = phi * pk.onto_top * pk.gen;
            for (std::size_t c = 0; c < pk.ann.cols(); ++c) {
                sys = sys.vstack(m.act_of(pk.ann.col(c)));
                rhs = rhs.vstack(Matrix(f, m.dim(), 1));
            }
            auto w = sys.solve(rhs);
            if (!w) throw std::logic_error("projective lift failed");
            Matrix worbit(f, m.dim(), a->dim());
            for (std::size_t k = 0; k < a->dim(); ++k) worbit.set_block(0, k, m.act(k) * *w);
            parts.push_back(pk.proj);
            lifts.push_back(worbit * pk.coords);
            span = column_space_basis(span.hstack(phi));
            if (span.cols() == t.module.dim()) break;
        }
    }
    if (span.cols() != t.module.dim()) throw std::logic_error("top not covered by projectives");
    auto ds = direct_sum(parts);
    Matrix cover_mat(f, m.dim(), 0);
    for (const auto& l : lifts) cover_mat = cover_mat.hstack(l);
    Morphism epi = Morphism::unchecked(ds.module, m, cover_mat);
    if (!epi.is_epi()) throw std::logic_error("projective cover is not surjective");
    return {ds.module, epi};
}

Cover injective_envelope(const FDModule& m) {
    Cover c = projective_cover(k_dual(m));
    return {k_dual(c.module), k_dual(c.map)};
}

Resolution projective_resolution(const FDModule& m, std::size_t depth) {
    Resolution res;
    res.target = m;
    FDModule cur = m;
    Morphism prev_inclusion = Morphism::identity(m);  // K_{i-1} -> P_{i-1}
    for (std::size_t i = 0; i <= depth; ++i) {
        if (cur.dim() == 0) {
            res.terminated = true;
            return res;
        }
        Cover c = projective_cover(cur);
        res.terms.push_back(c.module);
        if (i == 0)
            res.maps.push_back(c.map);
        else
            res.maps.push_back(Morphism::unchecked(c.module, res.terms[i - 1],
                                                   prev_inclusion.mat * c.map.mat));
        Morphism k = kernel_inclusion(c.map);
        prev_inclusion = k;
        cur = k.from;
    }
    res.terminated = cur.dim() == 0;
    return res;
}

Resolution injective_resolution(const FDModule& m, std::size_t depth) {
    Resolution dual = projective_resolution(k_dual(m), depth);
    Resolution res;
    res.target = m;
    res.terminated = dual.terminated;
    for (const auto& t : dual.terms) res.terms.push_back(k_dual(t));
    for (const auto& f : dual.maps) res.maps.push_back(k_dual(f));
    return res;
}

FDModule syzygy(const FDModule& m, std::size_t i) {
    FDModule cur = m;
    for (std::size_t k = 0; k < i; ++k) {
        if (cur.dim() == 0) break;
        cur = kernel_inclusion(projective_cover(cur).map).from;
    }
    return cur;
}

namespace {

// delta(f) = f o d, in coordinates: Hom(P_j, n) -> Hom(P_{j+1}, n)
Matrix hom_differential(const Field& f, const std::vector<Matrix>& from_basis, const Matrix& d,
                        const std::vector<Matrix>& to_basis) {
    Matrix out(f, to_basis.size(), from_basis.size());
    if (to_basis.empty() || from_basis.empty()) return out;
    std::vector<Matrix> vecs;
    for (const auto& b : to_basis) vecs.push_back(b.vec());
    Matrix sys = from_columns(f, vecs[0].rows(), vecs);
    for (std::size_t k = 0; k < from_basis.size(); ++k) {
        auto c = sys.solve((from_basis[k] * d).vec());
        if (!c) throw std::logic_error("composite left the hom space");
        out.set_block(0, k, *c);
    }
    return out;
}

}  // namespace

ExtData ext_data(const FDModule& m, const FDModule& n, std::size_t i, const Resolution* res) {
    const Field& f = m.field();
    ExtData out;
    out.p_i = FDModule::zero(m.algebra());
    Resolution own;
    if (!res) {
        own = projective_resolution(m, i + 1);
        res = &own;
    }
    if (res->terms.size() <= i) {
        if (!res->terminated) throw std::logic_error("resolution too shallow for ext");
        out.cocycles = Matrix(f, 0, 0);
        out.coboundaries = Matrix(f, 0, 0);
        return out;
    }
    if (res->terms.size() == i + 1 && !res->terminated)
        throw std::logic_error("resolution too shallow for ext");
    out.p_i = res->terms[i];
    out.hom_basis = hom_space(res->terms[i], n);
    Matrix delta(f, 0, out.hom_basis.size());
    if (res->terms.size() > i + 1) {
        auto next = hom_space(res->terms[i + 1], n);
        delta = hom_differential(f, out.hom_basis, res->maps[i + 1].mat, next);
    }
    out.cocycles = delta.kernel_basis();
    if (i >= 1) {
        auto prev = hom_space(res->terms[i - 1], n);
        out.coboundaries = column_space_basis(
            hom_differential(f, prev, res->maps[i].mat, out.hom_basis));
    } else {
        out.coboundaries = Matrix(f, out.hom_basis.size(), 0);
    }
    out.dim = out.cocycles.cols() - out.coboundaries.cols();
    return out;
}

std::size_t ext_dim(const FDModule& m, const FDModule& n, std::size_t i) {
    return ext_data(m, n, i).dim;
}

std::vector<std::size_t> ext_dims(const FDModule& m, const FDModule& n, std::size_t max_i) {
    Resolution res = projective_resolution(m, max_i + 1);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= max_i; ++i) out.push_back(ext_data(m, n, i, &res).dim);
    return out;
}

std::size_t ext_dim_via_injectives(const FDModule& m, const FDModule& n, std::size_t i) {
    const Field& f = m.field();
    Resolution res = injective_resolution(n, i + 1);
    if (res.terms.size() <= i) return 0;
    auto basis_i = hom_space(m, res.terms[i]);
    Matrix delta(f, 0, basis_i.size());
    if (res.terms.size() > i + 1) {
        auto next = hom_space(m, res.terms[i + 1]);
        // postcomposition with E_i -> E_{i+1}
        Matrix out(f, next.size(), basis_i.size());
        if (!next.empty() && !basis_i.empty()) {
            std::vector<Matrix> vecs;
            for (const auto& b : next) vecs.push_back(b.vec());
            Matrix sys = from_columns(f, vecs[0].rows(), vecs);
            for (std::size_t k = 0; k < basis_i.size(); ++k) {
                auto c = sys.solve((res.maps[i + 1].mat * basis_i[k]).vec());
                if (!c) throw std::logic_error("composite left the hom space");
                out.set_block(0, k, *c);
            }
        }
        delta = std::move(out);
    }
    std::size_t cocycles = delta.kernel_basis().cols();
    std::size_t cobound = 0;
    if (i >= 1) {
        auto prev = hom_space(m, res.terms[i - 1]);
        Matrix d(f, basis_i.size(), prev.size());
        if (!prev.empty() && !basis_i.empty()) {
            std::vector<Matrix> vecs;
            for (const auto& b : basis_i) vecs.push_back(b.vec());
            Matrix sys = from_columns(f, vecs[0].rows(), vecs);
            for (std::size_t k = 0; k < prev.size(); ++k) {
                auto c = sys.solve((res.maps[i].mat * prev[k]).vec());
                if (!c) throw std::logic_error("composite left the hom space");
                d.set_block(0, k, *c);
            }
        }
        cobound = d.rank();
    }
    return cocycles - cobound;
}

namespace {

// quotient of b (x) m by the bilinearity relations over the algebra acting
// on the right of b and the left of m
Complement tensor_space(const FDModule& b, const FDModule& m) {
    const Field& f = m.field();
    const auto& a = m.algebra();
    std::size_t t = b.dim() * m.dim();
    Matrix rel(f, t, 0);
    for (auto g : a->generators()) {
        Matrix op = b.act(g).kron(Matrix::identity(f, m.dim())) -
                    Matrix::identity(f, b.dim()).kron(m.act(g));
        rel = rel.hstack(column_space_basis(op));
    }
    return complement_projection(column_space_basis(rel), t);
}

}  // namespace

std::size_t tensor_dim(const FDModule& b, const FDModule& m) {
    if (b.algebra().get() != m.algebra()->opposite().get())
        throw std::invalid_argument("tensor: left factor must live over the opposite algebra");
    if (b.dim() == 0 || m.dim() == 0) return 0;
    return tensor_space(b, m).projection.rows();
}

std::size_t tor_dim(const FDModule& b, const FDModule& m, std::size_t i) {
    if (b.algebra().get() != m.algebra()->opposite().get())
        throw std::invalid_argument("tor: left argument must live over the opposite algebra");
    if (b.dim() == 0 || m.dim() == 0) return 0;
    const Field& f = m.field();
    Resolution res = projective_resolution(b, i + 1);
    if (res.terms.size() <= i) return 0;
    std::vector<Complement> spaces;
    for (const auto& p : res.terms) spaces.push_back(tensor_space(p, m));
    auto induced = [&](std::size_t j) {  // C_j -> C_{j-1}
        return spaces[j - 1].projection *
               res.maps[j].mat.kron(Matrix::identity(f, m.dim())) * spaces[j].section;
    };
    std::size_t cycles = i == 0 ? spaces[0].projection.rows() : induced(i).kernel_basis().cols();
    std::size_t boundaries = res.terms.size() > i + 1 ? induced(i + 1).rank() : 0;
    return cycles - boundaries;
}

InvariantValue projective_dimension(const FDModule& m, std::size_t cap) {
    if (m.dim() == 0) return InvariantValue::zero_module();
    Resolution res = projective_resolution(m, cap);
    if (res.terminated) return InvariantValue::exact(res.terms.size() - 1);
    return InvariantValue::at_least(cap + 1);
}

InvariantValue injective_dimension(const FDModule& m, std::size_t cap) {
    if (m.dim() == 0) return InvariantValue::zero_module();
    return projective_dimension(k_dual(m), cap);
}

InvariantValue flat_dimension(const FDModule& m, std::size_t cap) {
    return projective_dimension(m, cap);
}

InvariantValue grade_wrt(const FDModule& m, const FDModule& u, std::size_t cap) {
    if (m.dim() == 0) return InvariantValue::zero_module();
    Resolution res = projective_resolution(m, cap + 1);
    for (std::size_t i = 0; i <= cap; ++i) {
        if (res.terms.size() <= i) return InvariantValue::infinite();
        if (ext_data(m, u, i, &res).dim > 0) return InvariantValue::exact(i);
    }
    if (res.terminated && res.terms.size() <= cap + 1) return InvariantValue::infinite();
    return InvariantValue::at_least(cap + 1);
}

InvariantValue dominant_dimension(const FDAlgebra::Ptr& a, std::size_t cap) {
    FDModule reg = regular_module(a);
    Resolution res = injective_resolution(reg, cap);
    std::size_t k = 0;
    for (const auto& e : res.terms) {
        if (!in_add(e, reg)) return InvariantValue::exact(k);
        ++k;
    }
    if (res.terminated) return InvariantValue::infinite();
    return InvariantValue::at_least(k);
}

}  // namespace homwb
