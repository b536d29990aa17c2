#include "homwb/bimodule.hpp"

#include <stdexcept>

namespace homwb {

namespace {

Matrix hom_coordinate_matrix(const Field& f, const std::vector<Matrix>& basis) {
    std::vector<Matrix> vecs;
    for (const auto& b : basis) vecs.push_back(b.vec());
    std::size_t n = basis.empty() ? 0 : vecs[0].rows();
    return from_columns(f, n, vecs);
}

Matrix coords_in(const Matrix& sys, const Matrix& target, const char* what) {
    auto c = sys.solve(target);
    if (!c) throw std::logic_error(std::string("coordinate solve failed: ") + what);
    return *c;
}

}  // namespace

BimoduleContext end_algebra(const FDModule& u) {
    if (u.dim() == 0) throw std::invalid_argument("end_algebra: U must be nonzero");
    const Field& f = u.field();
    BimoduleContext ctx;
    ctx.lambda = u.algebra();
    ctx.u = u;
    ctx.end_basis = hom_space(u, u);
    const std::size_t d = ctx.end_basis.size();
    Matrix sys = hom_coordinate_matrix(f, ctx.end_basis);
    // product gamma_i * gamma_j acts as "i then j", i.e. the matrix h_j h_i
    std::vector<Matrix> left_mats;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix li(f, d, d);
        for (std::size_t j = 0; j < d; ++j)
            li.set_block(0, j, coords_in(sys, (ctx.end_basis[j] * ctx.end_basis[i]).vec(),
                                         "endomorphism product"));
        left_mats.push_back(std::move(li));
    }
    Matrix unit = coords_in(sys, Matrix::identity(f, u.dim()).vec(), "identity endomorphism");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back("g" + std::to_string(i));
    ctx.gamma = FDAlgebra::create(f, std::move(labels), std::move(left_mats), std::move(unit),
                                  std::nullopt, std::nullopt, "End(" + ctx.lambda->name() + "-mod)");
    // right gamma-action: basis element i acts by its endomorphism matrix
    ctx.u_right = FDModule::create(ctx.gamma->opposite(), ctx.end_basis);
    ctx.gamma_natural_iso = true;  // gamma is built on a basis of the left End
    // natural map lambda -> End of U over gamma: lambda-action matrices land
    // in that End by commutativity, so bijectivity is a double rank count
    std::vector<Matrix> act_vecs;
    for (std::size_t k = 0; k < ctx.lambda->dim(); ++k) act_vecs.push_back(u.act(k).vec());
    std::size_t act_rank = from_columns(f, u.dim() * u.dim(), act_vecs).rank();
    std::size_t end_right = hom_space(ctx.u_right, ctx.u_right).size();
    ctx.lambda_natural_iso = act_rank == ctx.lambda->dim() && act_rank == end_right;
    return ctx;
}

BimoduleContext flip(const BimoduleContext& ctx) { return end_algebra(ctx.u_right); }

FDModule hom_into_gamma(const BimoduleContext& ctx, const FDModule& x) {
    if (x.algebra() != ctx.lambda) throw std::invalid_argument("hom_into_gamma: wrong algebra");
    const Field& f = x.field();
    auto basis = hom_space(ctx.u, x);
    if (basis.empty()) return FDModule::zero(ctx.gamma);
    Matrix sys = hom_coordinate_matrix(f, basis);
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < ctx.gamma->dim(); ++k) {
        Matrix a(f, basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            a.set_block(0, j,
                        coords_in(sys, (basis[j] * ctx.end_basis[k]).vec(), "gamma precomposition"));
        acts.push_back(std::move(a));
    }
    return FDModule::create(ctx.gamma, std::move(acts));
}

Morphism hom_into_gamma(const BimoduleContext& ctx, const Morphism& f) {
    FDModule from = hom_into_gamma(ctx, f.from);
    FDModule to = hom_into_gamma(ctx, f.to);
    auto fb = hom_space(ctx.u, f.from);
    auto tb = hom_space(ctx.u, f.to);
    Matrix mat(f.mat.field(), tb.size(), fb.size());
    if (!fb.empty() && !tb.empty()) {
        Matrix sys = hom_coordinate_matrix(f.mat.field(), tb);
        for (std::size_t j = 0; j < fb.size(); ++j)
            mat.set_block(0, j, coords_in(sys, (f.mat * fb[j]).vec(), "postcomposition"));
    }
    return Morphism::create(std::move(from), std::move(to), std::move(mat));
}

namespace {

// Hom(x, w) with the action of `out` on cochains by postcomposition with
// the given matrices on w (one per basis element of `out`).
struct CochainSpace {
    std::vector<Matrix> basis;
    Matrix sys;
    std::vector<Matrix> acts;
};

CochainSpace cochain_space(const FDModule& x, const FDModule& w, const std::vector<Matrix>& post) {
    CochainSpace out;
    out.basis = hom_space(x, w);
    const Field& f = x.field();
    out.sys = hom_coordinate_matrix(f, out.basis);
    for (const auto& p : post) {
        Matrix a(f, out.basis.size(), out.basis.size());
        for (std::size_t j = 0; j < out.basis.size(); ++j)
            a.set_block(0, j, coords_in(out.sys, (p * out.basis[j]).vec(), "postcomposition"));
        out.acts.push_back(std::move(a));
    }
    return out;
}

std::vector<Matrix> lambda_post(const BimoduleContext& ctx) {
    std::vector<Matrix> post;
    for (std::size_t k = 0; k < ctx.lambda->dim(); ++k) post.push_back(ctx.u.act(k));
    return post;
}

// a subquotient span(cob + chosen) / span(cob) of a cochain space, with the
// coordinate frame kept for mapping cocycles into it later
struct SubquotientData {
    FDModule module;
    Matrix rep;    // chosen cocycle coordinate columns (basis of the subquotient)
    Matrix frame;  // [coboundaries | rep]
    std::size_t cob_cols = 0;
};

SubquotientData cochain_subquotient(const FDAlgebra::Ptr& out_alg, const CochainSpace& cs,
                                    const Matrix& cocycles, const Matrix& coboundaries) {
    const Field& f = cocycles.field();
    SubquotientData out;
    out.cob_cols = coboundaries.cols();
    auto [r, pivots] = coboundaries.hstack(cocycles).rref();
    std::vector<std::size_t> chosen;
    for (auto p : pivots)
        if (p >= coboundaries.cols()) chosen.push_back(p - coboundaries.cols());
    if (chosen.empty()) {
        out.module = FDModule::zero(out_alg);
        return out;
    }
    Matrix rep(f, cocycles.rows(), chosen.size());
    for (std::size_t j = 0; j < chosen.size(); ++j) rep.set_block(0, j, cocycles.col(chosen[j]));
    out.frame = coboundaries.hstack(rep);
    std::vector<Matrix> acts;
    for (const auto& a : cs.acts) {
        Matrix coords = coords_in(out.frame, a * rep, "cochain subquotient action");
        acts.push_back(coords.block(coboundaries.cols(), 0, chosen.size(), chosen.size()));
    }
    out.rep = std::move(rep);
    out.module = FDModule::create(out_alg, std::move(acts));
    return out;
}

// everything needed to present Ext^i(m, w) and to map cocycles through it
struct ExtRep {
    FDModule module;
    FDModule p_i;  // zero when the resolution stops before level i
    CochainSpace cs;
    SubquotientData sq;
};

ExtRep ext_rep(const FDModule& m, const Resolution& res, std::size_t i, const FDModule& w,
               const std::vector<Matrix>& post, const FDAlgebra::Ptr& out_alg) {
    ExtRep out;
    ExtData d = ext_data(m, w, i, &res);
    out.p_i = d.p_i;
    if (d.dim == 0 || d.p_i.dim() == 0) {
        out.module = FDModule::zero(out_alg);
        return out;
    }
    out.cs = cochain_space(d.p_i, w, post);
    out.sq = cochain_subquotient(out_alg, out.cs, d.cocycles, d.coboundaries);
    out.module = out.sq.module;
    return out;
}

// solve for h in Hom(a, b) with post * h = target; the comparison theorem
// guarantees a solution for chain-map lifts
Matrix solve_through_hom(const FDModule& a, const FDModule& b, const Matrix& post,
                         const Matrix& target) {
    const Field& f = a.field();
    if (a.dim() == 0 || b.dim() == 0) return Matrix(f, b.dim(), a.dim());
    auto hb = hom_space(a, b);
    std::vector<Matrix> cols;
    for (const auto& h : hb) cols.push_back((post * h).vec());
    Matrix sys = from_columns(f, post.rows() * a.dim(), cols);
    Matrix c = coords_in(sys, target.vec(), "chain map lift");
    Matrix out(f, b.dim(), a.dim());
    for (std::size_t k = 0; k < hb.size(); ++k) out = out + hb[k].scaled(c.at(k, 0));
    return out;
}

FDModule resolution_term(const Resolution& res, std::size_t j) {
    if (j < res.terms.size()) return res.terms[j];
    return FDModule::zero(res.target.algebra());
}

// chain-map lift f_0..f_upto over minimal projective resolutions of f.from
// and f.to; entry j is a matrix P_j(to).dim x P_j(from).dim
std::vector<Matrix> lift_chain(const Morphism& f, const Resolution& rx, const Resolution& ry,
                               std::size_t upto) {
    const Field& fld = f.mat.field();
    std::vector<Matrix> lifts;
    for (std::size_t j = 0; j <= upto; ++j) {
        FDModule px = resolution_term(rx, j);
        FDModule py = resolution_term(ry, j);
        if (px.dim() == 0 || py.dim() == 0) {
            lifts.push_back(Matrix(fld, py.dim(), px.dim()));
            continue;
        }
        Matrix post = j == 0 ? ry.maps[0].mat : ry.maps[j].mat;
        Matrix target = j == 0 ? f.mat * rx.maps[0].mat : lifts[j - 1] * rx.maps[j].mat;
        lifts.push_back(solve_through_hom(px, py, post, target));
    }
    return lifts;
}

// Ext^i(f, w): ext(to) -> ext(from), by precomposition with the lift
Morphism ext_generic_map(const Morphism& f, std::size_t i, const FDModule& w,
                         const std::vector<Matrix>& post, const FDAlgebra::Ptr& out_alg) {
    const Field& fld = f.mat.field();
    Resolution rx = projective_resolution(f.from, i + 1);
    Resolution ry = projective_resolution(f.to, i + 1);
    ExtRep ex = ext_rep(f.from, rx, i, w, post, out_alg);
    ExtRep ey = ext_rep(f.to, ry, i, w, post, out_alg);
    if (ex.module.dim() == 0 || ey.module.dim() == 0)
        return Morphism::zero(ey.module, ex.module);
    Matrix fi = lift_chain(f, rx, ry, i)[i];
    Matrix mat(fld, ex.module.dim(), ey.module.dim());
    for (std::size_t j = 0; j < ey.module.dim(); ++j) {
        // representative cocycle of column j on the to-side
        Matrix phi(fld, w.dim(), ey.p_i.dim());
        for (std::size_t k = 0; k < ey.cs.basis.size(); ++k)
            phi = phi + ey.cs.basis[k].scaled(ey.sq.rep.at(k, j));
        Matrix coords = coords_in(ex.cs.sys, (phi * fi).vec(), "ext image cocycle");
        Matrix in_frame = coords_in(ex.sq.frame, coords, "ext image class");
        mat.set_block(0, j,
                      in_frame.block(ex.sq.cob_cols, 0, ex.module.dim(), 1));
    }
    return Morphism::create(ey.module, ex.module, std::move(mat));
}

}  // namespace

FDModule dual_wrt(const FDModule& x, const BimoduleContext& ctx) {
    if (x.algebra() != ctx.lambda) throw std::invalid_argument("dual_wrt: wrong algebra");
    CochainSpace cs = cochain_space(x, ctx.u, ctx.end_basis);
    if (cs.basis.empty()) return FDModule::zero(ctx.gamma->opposite());
    return FDModule::create(ctx.gamma->opposite(), cs.acts);
}

FDModule hom_from_gamma(const BimoduleContext& ctx, const FDModule& b) {
    if (b.algebra() != ctx.gamma->opposite())
        throw std::invalid_argument("hom_from_gamma: wrong algebra");
    CochainSpace cs = cochain_space(b, ctx.u_right, lambda_post(ctx));
    if (cs.basis.empty()) return FDModule::zero(ctx.lambda);
    return FDModule::create(ctx.lambda, cs.acts);
}

namespace {

// shared shape of the two contravariant hom functors on maps
Morphism contravariant_hom(const Morphism& g, const FDModule& w, const FDModule& dual_to,
                           const FDModule& dual_from) {
    const Field& f = g.mat.field();
    auto tb = hom_space(g.to, w);
    auto fb = hom_space(g.from, w);
    Matrix mat(f, fb.size(), tb.size());
    if (!tb.empty() && !fb.empty()) {
        Matrix sys = hom_coordinate_matrix(f, fb);
        for (std::size_t j = 0; j < tb.size(); ++j)
            mat.set_block(0, j, coords_in(sys, (tb[j] * g.mat).vec(), "precomposition"));
    }
    return Morphism::create(dual_to, dual_from, std::move(mat));
}

}  // namespace

Morphism dual_wrt(const Morphism& f, const BimoduleContext& ctx) {
    return contravariant_hom(f, ctx.u, dual_wrt(f.to, ctx), dual_wrt(f.from, ctx));
}

Morphism hom_from_gamma(const BimoduleContext& ctx, const Morphism& g) {
    return contravariant_hom(g, ctx.u_right, hom_from_gamma(ctx, g.to),
                             hom_from_gamma(ctx, g.from));
}

Morphism double_dual_map(const Morphism& f, const BimoduleContext& ctx) {
    return hom_from_gamma(ctx, dual_wrt(f, ctx));
}

FDModule ext_module_wrt(const FDModule& m, const BimoduleContext& ctx, std::size_t i) {
    if (m.algebra() != ctx.lambda) throw std::invalid_argument("ext_module_wrt: wrong algebra");
    Resolution res = projective_resolution(m, i + 1);
    return ext_rep(m, res, i, ctx.u, ctx.end_basis, ctx.gamma->opposite()).module;
}

Morphism ext_map_wrt(const Morphism& f, const BimoduleContext& ctx, std::size_t i) {
    if (f.from.algebra() != ctx.lambda) throw std::invalid_argument("ext_map_wrt: wrong algebra");
    return ext_generic_map(f, i, ctx.u, ctx.end_basis, ctx.gamma->opposite());
}

FDModule ext_from_gamma(const BimoduleContext& ctx, const FDModule& b, std::size_t i) {
    if (b.algebra() != ctx.gamma->opposite())
        throw std::invalid_argument("ext_from_gamma: wrong algebra");
    Resolution res = projective_resolution(b, i + 1);
    return ext_rep(b, res, i, ctx.u_right, lambda_post(ctx), ctx.lambda).module;
}

Morphism ext_from_gamma_map(const BimoduleContext& ctx, const Morphism& g, std::size_t i) {
    if (g.from.algebra() != ctx.gamma->opposite())
        throw std::invalid_argument("ext_from_gamma_map: wrong algebra");
    return ext_generic_map(g, i, ctx.u_right, lambda_post(ctx), ctx.lambda);
}

FDModule transpose_wrt(const FDModule& m, const BimoduleContext& ctx) {
    if (m.algebra() != ctx.lambda) throw std::invalid_argument("transpose_wrt: wrong algebra");
    Resolution res = projective_resolution(m, 1);
    if (res.terms.size() <= 1) return FDModule::zero(ctx.gamma->opposite());
    FDModule d0 = dual_wrt(res.terms[0], ctx);
    FDModule d1 = dual_wrt(res.terms[1], ctx);
    Matrix mat(m.field(), d1.dim(), d0.dim());
    if (d0.dim() > 0 && d1.dim() > 0) {
        auto b0 = hom_space(res.terms[0], ctx.u);
        auto b1 = hom_space(res.terms[1], ctx.u);
        Matrix sys = hom_coordinate_matrix(m.field(), b1);
        for (std::size_t j = 0; j < b0.size(); ++j)
            mat.set_block(0, j, coords_in(sys, (b0[j] * res.maps[1].mat).vec(), "dualized map"));
    }
    Morphism dstar = Morphism::create(std::move(d0), std::move(d1), std::move(mat));
    return cokernel_projection(dstar).module;
}

EvaluationReport evaluation_map(const FDModule& m, const BimoduleContext& ctx) {
    if (m.algebra() != ctx.lambda) throw std::invalid_argument("evaluation_map: wrong algebra");
    const Field& f = m.field();
    auto mstar_basis = hom_space(m, ctx.u);
    FDModule mstar = dual_wrt(m, ctx);
    // double dual carries the left lambda-action by postcomposition on U
    FDModule dd = FDModule::zero(ctx.lambda);
    CochainSpace cs;
    if (mstar.dim() > 0) {
        cs = cochain_space(mstar, ctx.u_right, lambda_post(ctx));
        if (!cs.basis.empty()) dd = FDModule::create(ctx.lambda, cs.acts);
    }
    Matrix sigma_mat(f, dd.dim(), m.dim());
    for (std::size_t j = 0; dd.dim() > 0 && j < m.dim(); ++j) {
        // sigma(x_j): f |-> f(x_j), column r lists f_r(x_j)
        Matrix s(f, ctx.u.dim(), mstar_basis.size());
        for (std::size_t r = 0; r < mstar_basis.size(); ++r)
            s.set_block(0, r, mstar_basis[r].col(j));
        sigma_mat.set_block(0, j, coords_in(cs.sys, s.vec(), "evaluation image"));
    }
    EvaluationReport out{dd, Morphism::create(m, dd, std::move(sigma_mat)), false, false};
    out.torsionless = out.sigma.is_mono();
    out.reflexive = out.sigma.is_iso();
    return out;
}

InvariantValue grade_wrt(const FDModule& m, const BimoduleContext& ctx, std::size_t cap) {
    return grade_wrt(m, ctx.u, cap);
}

InvariantValue strong_grade_bruteforce(const FDModule& m, const BimoduleContext& ctx,
                                       std::size_t cap) {
    if (m.dim() == 0) return InvariantValue::infinite();
    bool any_at_least = false;
    std::optional<std::size_t> best;
    for (const auto& basis : enumerate_submodules(m)) {
        if (basis.cols() == 0) continue;
        InvariantValue g = grade_wrt(submodule(m, basis).module, ctx, cap);
        if (g.kind == InvariantValue::Kind::Exact)
            best = best ? std::min(*best, g.value) : g.value;
        else if (g.kind == InvariantValue::Kind::AtLeast)
            any_at_least = true;
    }
    // non-exact grades exceed the cap, so any exact value is the true minimum
    if (best) return InvariantValue::exact(*best);
    if (any_at_least) return InvariantValue::at_least(cap + 1);
    return InvariantValue::infinite();
}

std::size_t torsionfree_index(const FDModule& m, const BimoduleContext& ctx, std::size_t k) {
    FDModule t = transpose_wrt(m, ctx);
    if (t.dim() == 0) return k;
    Resolution res = projective_resolution(t, k + 1);
    std::size_t j = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        if (ext_data(t, ctx.u_right, i, &res).dim != 0) break;
        ++j;
    }
    return j;
}

USyzygyChain u_syzygy_search(const FDModule& m, const BimoduleContext& ctx, std::size_t k) {
    if (m.algebra() != ctx.lambda) throw std::invalid_argument("u_syzygy_search: wrong algebra");
    const Field& f = m.field();
    USyzygyChain out;
    FDModule cur = m;
    Morphism into_prev = Morphism::identity(m);  // cokernel projection of the last step
    for (std::size_t step = 0; step < k; ++step) {
        if (cur.dim() == 0) {
            FDModule z = FDModule::zero(ctx.lambda);
            out.maps.push_back(out.terms.empty() ? Morphism::zero(m, z)
                                                 : Morphism::zero(out.terms.back(), z));
            out.terms.push_back(z);
            continue;
        }
        auto h = hom_space(cur, ctx.u);
        // left add-U-approximation with few copies: each copy of U carries a
        // combined map, built by absorbing basis maps while the joint kernel
        // keeps shrinking
        std::vector<Matrix> rows;
        Matrix seen = row_space_canonical(Matrix(f, 0, cur.dim()));
        while (seen.rows() < cur.dim()) {
            Matrix current(f, ctx.u.dim(), cur.dim());
            Matrix caught = seen;
            for (const auto& g : h) {
                Matrix cand = current + g;
                Matrix grown = row_space_canonical(seen.vstack(cand));
                if (grown.rows() > caught.rows()) {
                    current = std::move(cand);
                    caught = std::move(grown);
                }
            }
            if (caught.rows() == seen.rows()) break;
            rows.push_back(std::move(current));
            seen = std::move(caught);
        }
        if (seen.rows() < cur.dim()) {
            out.note = "not found within strategy: no embedding into a power of U at step " +
                       std::to_string(step);
            return out;
        }
        Matrix stack(f, 0, cur.dim());
        for (const auto& r : rows) stack = stack.vstack(r);
        auto power = direct_sum(std::vector<FDModule>(rows.size(), ctx.u));
        Morphism approx = Morphism::create(cur, power.module, std::move(stack));
        out.maps.push_back(step == 0 ? approx
                                     : Morphism::unchecked(out.terms.back(), power.module,
                                                           approx.mat * into_prev.mat));
        out.terms.push_back(power.module);
        auto coker = cokernel_projection(approx);
        into_prev = coker.map;
        cur = coker.module;
    }
    // every term is a literal power of U (or zero), so membership in add U
    // holds by construction
    out.found = true;
    return out;
}

UChainSearch u_lim_chain_search(const BimoduleContext& ctx, const FDModule& e,
                                std::size_t bound) {
    if (e.algebra() != ctx.lambda) throw std::invalid_argument("u_lim_chain_search: wrong algebra");
    const Field& f = e.field();
    UChainSearch out;
    if (e.dim() == 0) {
        out.found = true;
        return out;
    }
    FDModule cur = e;
    std::size_t len = 0;
    for (;;) {
        // add-U membership is only probed at modest dimension; a skipped
        // probe just delays termination, it never fakes success
        if (cur.dim() <= 4 * ctx.u.dim() && in_add(cur, ctx.u)) {
            out.found = true;
            out.length = len;
            return out;
        }
        auto h = hom_space(ctx.u, cur);
        // right add-U-approximation with few copies: each copy of U carries a
        // combined map, built by absorbing basis maps while the joint image
        // keeps growing; one generator can cover several top components
        std::vector<Matrix> cols;
        Matrix image(f, cur.dim(), 0);
        while (image.cols() < cur.dim()) {
            Matrix current(f, cur.dim(), ctx.u.dim());
            Matrix covered = image;
            for (const auto& g : h) {
                Matrix cand = current + g;
                Matrix grown = column_space_basis(image.hstack(cand));
                if (grown.cols() > covered.cols()) {
                    current = std::move(cand);
                    covered = std::move(grown);
                }
            }
            if (covered.cols() == image.cols()) break;
            cols.push_back(std::move(current));
            image = std::move(covered);
        }
        if (image.cols() < cur.dim()) {
            out.note = "not found within strategy: no add-U cover at stage " + std::to_string(len);
            return out;
        }
        Matrix glue(f, cur.dim(), 0);
        for (const auto& c : cols) glue = glue.hstack(c);
        auto power = direct_sum(std::vector<FDModule>(cols.size(), ctx.u));
        Morphism cover = Morphism::create(power.module, cur, std::move(glue));
        Morphism k = kernel_inclusion(cover);
        if (k.from.dim() == 0) {
            out.found = true;
            out.length = len;
            return out;
        }
        if (len + 1 > bound) {
            out.note = "not found within strategy: chain exceeds bound " + std::to_string(bound);
            return out;
        }
        cur = k.from;
        ++len;
    }
}

WakamatsuReport verify_wakamatsu(const BimoduleContext& ctx, std::size_t depth) {
    WakamatsuReport r;
    r.balanced = ctx.faithfully_balanced();
    r.ext_lambda = ext_dims(ctx.u, ctx.u, depth);
    r.ext_gamma = ext_dims(ctx.u_right, ctx.u_right, depth);
    r.self_orthogonal_lambda = true;
    r.self_orthogonal_gamma = true;
    for (std::size_t i = 1; i <= depth; ++i) {
        if (r.ext_lambda[i] != 0) r.self_orthogonal_lambda = false;
        if (r.ext_gamma[i] != 0) r.self_orthogonal_gamma = false;
    }
    r.coresolution_found = u_syzygy_search(regular_module(ctx.lambda), ctx, depth).found;
    r.certified = r.balanced && r.self_orthogonal_lambda && r.self_orthogonal_gamma;
    return r;
}

UDominantReport u_dominant_dimension(const BimoduleContext& ctx, Side side, std::size_t cap) {
    const FDModule& w = side == Side::Left ? ctx.u : ctx.u_right;
    Resolution res = injective_resolution(w, cap);
    UDominantReport out;
    std::size_t count = 0;
    bool broken = false;
    for (const auto& e : res.terms) {
        bool member = in_add(e, w);
        out.in_add_terms.push_back(member);
        out.cogenerated_terms.push_back(is_cogenerated_by(e, w));
        if (!member) broken = true;
        if (!broken) ++count;
    }
    if (broken)
        out.value = InvariantValue::exact(count);
    else
        out.value = res.terminated ? InvariantValue::infinite() : InvariantValue::at_least(count);
    return out;
}

InvariantValue u_lim_dim_injective(const BimoduleContext& ctx, const FDModule& e, std::size_t cap) {
    if (e.dim() == 0) return InvariantValue::zero_module();
    if (injective_envelope(e).module.dim() != e.dim())
        throw std::invalid_argument("module not injective");
    return flat_dimension(hom_into_gamma(ctx, e), cap);
}

}  // namespace homwb
