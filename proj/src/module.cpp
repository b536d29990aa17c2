#include "homwb/module.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace homwb {

namespace {

Matrix basis_vec(const Field& f, std::size_t n, std::size_t i) {
    Matrix e = Matrix::zero(f, n, 1);
    e.at(i, 0) = f.one();
    return e;
}

}  // namespace

// --- modules and morphisms -------------------------------------------------

FDModule FDModule::unchecked(FDAlgebra::Ptr a, std::vector<Matrix> action) {
    FDModule m;
    m.dim_ = action.empty() ? 0 : action[0].rows();
    m.a_ = std::move(a);
    m.act_ = std::move(action);
    if (m.act_.size() != m.a_->dim()) throw std::invalid_argument("action count mismatch");
    return m;
}

FDModule FDModule::create(FDAlgebra::Ptr a, std::vector<Matrix> action) {
    FDModule m = unchecked(std::move(a), std::move(action));
    const auto& alg = *m.a_;
    for (const auto& mat : m.act_)
        if (mat.rows() != m.dim_ || mat.cols() != m.dim_)
            throw std::invalid_argument("action matrices must be square of equal size");
    if (!m.act_of(alg.unit()).is_identity()) throw std::invalid_argument("unit does not act as identity");
    if (alg.dim() <= 16) {
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                Matrix prod = alg.multiply(basis_vec(alg.field(), alg.dim(), i),
                                           basis_vec(alg.field(), alg.dim(), j));
                if (m.act_[i] * m.act_[j] != m.act_of(prod))
                    throw std::invalid_argument("action is not multiplicative");
            }
    } else {
        for (auto g : alg.generators())
            for (auto h : alg.generators()) {
                Matrix prod = alg.multiply(basis_vec(alg.field(), alg.dim(), g),
                                           basis_vec(alg.field(), alg.dim(), h));
                if (m.act_[g] * m.act_[h] != m.act_of(prod))
                    throw std::invalid_argument("action is not multiplicative");
            }
    }
    return m;
}

FDModule FDModule::zero(FDAlgebra::Ptr a) {
    std::vector<Matrix> act(a->dim(), Matrix::zero(a->field(), 0, 0));
    return unchecked(std::move(a), std::move(act));
}

Matrix FDModule::act_of(const Matrix& x) const {
    Matrix m = Matrix::zero(field(), dim_, dim_);
    for (std::size_t i = 0; i < act_.size(); ++i)
        if (!field().is_zero(x.at(i, 0))) m = m + act_[i].scaled(x.at(i, 0));
    return m;
}

Morphism Morphism::unchecked(FDModule from, FDModule to, Matrix mat) {
    if (mat.rows() != to.dim() || mat.cols() != from.dim())
        throw std::invalid_argument("morphism shape mismatch");
    return {std::move(from), std::move(to), std::move(mat)};
}

Morphism Morphism::create(FDModule from, FDModule to, Matrix mat) {
    if (from.algebra().get() != to.algebra().get())
        throw std::invalid_argument("morphism across different algebras");
    Morphism f = unchecked(std::move(from), std::move(to), std::move(mat));
    for (auto g : f.from.algebra()->generators())
        if (f.mat * f.from.act(g) != f.to.act(g) * f.mat)
            throw std::invalid_argument("matrix does not intertwine the actions");
    return f;
}

Morphism Morphism::identity(const FDModule& m) {
    return unchecked(m, m, Matrix::identity(m.field(), m.dim()));
}

Morphism Morphism::zero(const FDModule& from, const FDModule& to) {
    return unchecked(from, to, Matrix::zero(from.field(), to.dim(), from.dim()));
}

Morphism Morphism::compose_after(const Morphism& inner) const {
    return unchecked(inner.from, to, mat * inner.mat);
}

bool Morphism::is_mono() const { return mat.rank() == from.dim(); }
bool Morphism::is_epi() const { return mat.rank() == to.dim(); }
bool Morphism::is_iso() const { return from.dim() == to.dim() && is_mono(); }

// --- hom spaces ------------------------------------------------------------

std::vector<Matrix> hom_space(const FDModule& m, const FDModule& n) {
    if (m.algebra().get() != n.algebra().get())
        throw std::invalid_argument("hom across different algebras");
    const Field& f = m.field();
    const std::size_t dm = m.dim(), dn = n.dim();
    // F must satisfy act_n(g) F = F act_m(g); intersect kernels generator by
    // generator to keep the intermediate systems small
    Matrix k = Matrix::identity(f, dm * dn);
    for (auto g : m.algebra()->generators()) {
        Matrix c = Matrix::identity(f, dm).kron(n.act(g)) -
                   m.act(g).transposed().kron(Matrix::identity(f, dn));
        k = k * (c * k).kernel_basis();
        if (k.cols() == 0) break;
    }
    std::vector<Matrix> basis;
    for (std::size_t t = 0; t < k.cols(); ++t) basis.push_back(Matrix::unvec(k.col(t), dn, dm));
    return basis;
}

// --- sub, quotient, kernel, image ------------------------------------------

SubQuotient submodule(const FDModule& m, const Matrix& basis) {
    const auto& a = m.algebra();
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        auto sol = basis.solve(m.act(i) * basis);
        if (!sol) throw std::invalid_argument("subspace not action-invariant");
        act.push_back(std::move(*sol));
    }
    FDModule sub = FDModule::unchecked(a, std::move(act));
    return {sub, Morphism::unchecked(sub, m, basis)};
}

SubQuotient quotient_module(const FDModule& m, const Matrix& subspace_basis) {
    const auto& a = m.algebra();
    auto [proj, section] = complement_projection(subspace_basis, m.dim());
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(proj * m.act(i) * section);
    FDModule q = FDModule::unchecked(a, std::move(act));
    return {q, Morphism::unchecked(m, q, proj)};
}

Morphism kernel_inclusion(const Morphism& f) {
    auto sub = submodule(f.from, f.mat.kernel_basis());
    return sub.map;
}

SubQuotient image_submodule(const Morphism& f) { return submodule(f.to, column_space_basis(f.mat)); }

SubQuotient cokernel_projection(const Morphism& f) {
    return quotient_module(f.to, column_space_basis(f.mat));
}

DirectSum direct_sum(const std::vector<FDModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum needs at least one part");
    const auto& a = parts[0].algebra();
    const Field& f = parts[0].field();
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (p.algebra().get() != a.get()) throw std::invalid_argument("mixed algebras in direct sum");
        total += p.dim();
    }
    std::vector<Matrix> act(a->dim(), Matrix::zero(f, total, total));
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < a->dim(); ++i) act[i].set_block(off, off, p.act(i));
        off += p.dim();
    }
    DirectSum ds;
    ds.module = FDModule::unchecked(a, std::move(act));
    off = 0;
    for (const auto& p : parts) {
        Matrix inc = Matrix::zero(f, total, p.dim());
        inc.set_block(off, 0, Matrix::identity(f, p.dim()));
        ds.inclusions.push_back(Morphism::unchecked(p, ds.module, inc));
        ds.projections.push_back(Morphism::unchecked(ds.module, p, inc.transposed()));
        off += p.dim();
    }
    return ds;
}

FDModule k_dual(const FDModule& m) {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) act.push_back(m.act(i).transposed());
    return FDModule::unchecked(m.algebra()->opposite(), std::move(act));
}

Morphism k_dual(const Morphism& f) {
    return Morphism::unchecked(k_dual(f.to), k_dual(f.from), f.mat.transposed());
}

Matrix spin(const FDModule& m, const Matrix& vectors) {
    Matrix v = column_space_basis(vectors);
    for (;;) {
        Matrix next = v;
        for (std::size_t i = 0; i < m.algebra()->dim(); ++i) next = next.hstack(m.act(i) * v);
        next = column_space_basis(next);
        if (next.cols() == v.cols()) return next;
        v = next;
    }
}

Matrix radical_subspace(const FDModule& m) {
    const Matrix& rad = m.algebra()->radical_basis();
    Matrix cols(m.field(), m.dim(), 0);
    for (std::size_t j = 0; j < rad.cols(); ++j) cols = cols.hstack(m.act_of(rad.col(j)));
    return column_space_basis(cols);
}

SubQuotient top(const FDModule& m) { return quotient_module(m, radical_subspace(m)); }

// --- polynomial toolkit (for idempotent splitting) -------------------------

namespace {

using Poly = std::vector<Scalar>;  // coefficient of t^i at index i

void trim(const Field& f, Poly& p) {
    while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

int degree(const Poly& p) { return int(p.size()) - 1; }

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    trim(f, r);
    return r;
}

Poly poly_scale(const Field& f, const Poly& a, const Scalar& c) {
    Poly r = a;
    for (auto& x : r) x = f.mul(x, c);
    trim(f, r);
    return r;
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    return poly_add(f, a, poly_scale(f, b, f.from_int(-1)));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    trim(f, r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& f, Poly a, const Poly& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    Poly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, f.zero());
    Scalar lead_inv = f.inv(b.back());
    while (degree(a) >= degree(b)) {
        std::size_t shift = a.size() - b.size();
        Scalar c = f.mul(a.back(), lead_inv);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        trim(f, a);
    }
    trim(f, q);
    return {q, a};
}

Poly poly_monic(const Field& f, Poly a) {
    if (a.empty()) return a;
    return poly_scale(f, a, f.inv(a.back()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    trim(f, a);
    trim(f, b);
    while (!b.empty()) {
        Poly r = poly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

// u*a + v*b = 1 for coprime a, b
std::pair<Poly, Poly> poly_bezout(const Field& f, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = {f.one()}, u1 = {}, v0 = {}, v1 = {f.one()};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(f, r0, r1);
        Poly u2 = poly_sub(f, u0, poly_mul(f, q, u1));
        Poly v2 = poly_sub(f, v0, poly_mul(f, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (degree(r0) != 0) throw std::logic_error("bezout on non-coprime polynomials");
    Scalar inv = f.inv(r0[0]);
    return {poly_scale(f, u0, inv), poly_scale(f, v0, inv)};
}

Poly poly_derivative(const Field& f, const Poly& a) {
    Poly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], f.from_int(long(i))));
    trim(f, r);
    return r;
}

Scalar poly_eval(const Field& f, const Poly& a, const Scalar& c) {
    Scalar r = f.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, c), *it);
    return r;
}

Poly poly_powmod(const Field& f, Poly base, Int e, const Poly& mod) {
    Poly acc = {f.one()};
    base = poly_divmod(f, base, mod).second;
    while (e > 0) {
        if (e % 2 == 1) acc = poly_divmod(f, poly_mul(f, acc, base), mod).second;
        base = poly_divmod(f, poly_mul(f, base, base), mod).second;
        e /= 2;
    }
    return acc;
}

// element of the algebra given by a polynomial in x (Horner)
Matrix poly_eval_in(const FDAlgebra& a, const Poly& p, const Matrix& x) {
    Matrix r = Matrix::zero(a.field(), a.dim(), 1);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = a.multiply(r, x) + a.unit().scaled(*it);
    return r;
}

Poly minimal_polynomial(const FDAlgebra& a, const Matrix& x) {
    const Field& f = a.field();
    Matrix powers = a.unit();
    Matrix xk = a.unit();
    for (;;) {
        xk = a.multiply(xk, x);
        if (auto c = powers.solve(xk)) {
            Poly p;
            for (std::size_t i = 0; i < powers.cols(); ++i) p.push_back(f.neg(c->at(i, 0)));
            p.push_back(f.one());
            return p;
        }
        powers = powers.hstack(xk);
    }
}

// monic part of f supported on the primes dividing g (g must divide f)
Poly prime_part(const Field& field, const Poly& f, Poly g) {
    for (;;) {
        Poly q = poly_divmod(field, f, g).first;
        Poly d = poly_gcd(field, q, g);
        if (degree(d) <= 0) return g;
        g = poly_mul(field, g, d);
    }
}

// f = a*b with a, b coprime nonconstant, if such a split can be found
std::optional<std::pair<Poly, Poly>> try_coprime_split(const Field& field, const Poly& f,
                                                       std::mt19937_64& rng) {
    auto finish = [&](const Poly& g) -> std::optional<std::pair<Poly, Poly>> {
        Poly a = prime_part(field, f, g);
        Poly b = poly_divmod(field, f, a).first;
        if (degree(a) < 1 || degree(b) < 1) return std::nullopt;
        return std::make_pair(a, b);
    };
    Poly fd = poly_derivative(field, f);
    Poly w = f;
    if (!fd.empty()) {
        Poly s = poly_gcd(field, f, fd);
        w = poly_divmod(field, f, s).first;  // squarefree part
        if (degree(s) > 0) {
            Poly g = poly_gcd(field, w, s);  // primes of multiplicity >= 2
            if (degree(g) > 0 && degree(g) < degree(w))
                if (auto r = finish(g)) return r;
        }
    }
    if (degree(w) < 2) return std::nullopt;
    // linear factors by root probing
    std::vector<Scalar> roots;
    if (field.is_finite()) {
        if (field.characteristic() <= 1024)
            for (long c = 0; c < field.characteristic(); ++c) roots.push_back(field.from_int(c));
    } else {
        for (long n = -20; n <= 20; ++n) roots.push_back(field.from_int(n));
        for (long den = 2; den <= 12; ++den)
            for (long num = -12; num <= 12; ++num)
                if (num % den != 0) roots.push_back(field.from_fraction(num, den));
    }
    for (const auto& c : roots)
        if (field.is_zero(poly_eval(field, w, c))) {
            Poly lin = {field.neg(c), field.one()};
            if (degree(lin) < degree(w))
                if (auto r = finish(lin)) return r;
        }
    if (!field.is_finite()) return std::nullopt;
    // distinct-degree splitting
    const long p = field.characteristic();
    Poly t = {field.zero(), field.one()};
    for (int d = 1; d < degree(w); ++d) {
        Int pe = 1;
        for (int i = 0; i < d; ++i) pe *= p;
        Poly xq = poly_powmod(field, t, pe, w);
        Poly g = poly_gcd(field, w, poly_sub(field, xq, t));
        if (degree(g) > 0 && degree(g) < degree(w)) return finish(g);
        if (degree(g) == degree(w)) {
            // all primes of w have degree exactly d; equal-degree splitting
            if (degree(w) / d < 2) return std::nullopt;
            for (int attempt = 0; attempt < 60; ++attempt) {
                Poly h(std::size_t(degree(w)), field.zero());
                for (auto& c : h) c = field.from_int(long(rng() % (unsigned long)p));
                trim(field, h);
                if (h.empty()) continue;
                Poly g2;
                if (p == 2) {
                    Poly tr = h, pw = h;
                    for (int i = 1; i < d; ++i) {
                        pw = poly_divmod(field, poly_mul(field, pw, pw), w).second;
                        tr = poly_add(field, tr, pw);
                    }
                    g2 = poly_gcd(field, w, tr);
                } else {
                    Int e = (pe - 1) / 2;
                    Poly hp = poly_powmod(field, h, e, w);
                    g2 = poly_gcd(field, w, poly_sub(field, hp, {field.one()}));
                }
                if (degree(g2) > 0 && degree(g2) < degree(w)) return finish(g2);
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// nontrivial idempotent of a (semisimple) algebra, or nullopt
std::optional<Matrix> find_nontrivial_idempotent(const FDAlgebra::Ptr& s, unsigned long seed) {
    const Field& f = s->field();
    const std::size_t d = s->dim();
    if (d <= 1) return std::nullopt;
    auto is_idem = [&](const Matrix& e) {
        return !e.is_zero() && e != s->unit() && s->multiply(e, e) == e;
    };
    std::vector<Matrix> candidates;
    for (std::size_t i = 0; i < d; ++i) candidates.push_back(basis_vec(f, d, i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            candidates.push_back(basis_vec(f, d, i) + basis_vec(f, d, j));
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 200; ++k) {
        Matrix x(f, d, 1);
        for (std::size_t i = 0; i < d; ++i)
            x.at(i, 0) = f.is_finite() ? f.from_int(long(rng() % (unsigned long)f.characteristic()))
                                       : f.from_int(long(rng() % 7) - 3);
        candidates.push_back(std::move(x));
    }
    for (const auto& x : candidates) {
        if (s->unit().hstack(x).rank() < 2) continue;
        Poly mp = minimal_polynomial(*s, x);
        if (degree(mp) < 2) continue;
        auto split = try_coprime_split(f, mp, rng);
        if (!split) continue;
        auto [u, v] = poly_bezout(f, split->first, split->second);
        Matrix e = poly_eval_in(*s, poly_mul(f, v, split->second), x);
        if (is_idem(e)) return e;
    }
    if (f.is_finite()) {
        double total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= double(f.characteristic());
        if (total <= 4096.0) {
            // small enough that an exhaustive scan settles it for certain
            std::vector<long> coord(d, 0);
            for (;;) {
                Matrix e(f, d, 1);
                for (std::size_t i = 0; i < d; ++i) e.at(i, 0) = f.from_int(coord[i]);
                if (is_idem(e)) return e;
                std::size_t i = 0;
                while (i < d && ++coord[i] == f.characteristic()) coord[i++] = 0;
                if (i == d) return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

// --- endomorphisms and decomposition ---------------------------------------

std::pair<FDAlgebra::Ptr, std::vector<Matrix>> endomorphism_algebra(const FDModule& m) {
    const Field& f = m.field();
    std::vector<Matrix> h = hom_space(m, m);
    const std::size_t d = h.size();
    if (d == 0) throw std::invalid_argument("endomorphism algebra of the zero module");
    std::vector<Matrix> vecs;
    for (const auto& e : h) vecs.push_back(e.vec());
    Matrix hmat = from_columns(f, m.dim() * m.dim(), vecs);
    auto coords_of = [&](const Matrix& mat) {
        auto c = hmat.solve(mat.vec());
        if (!c) throw std::logic_error("endomorphism outside its own span");
        return *c;
    };
    std::vector<Matrix> left_mats;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix li(f, d, d);
        for (std::size_t j = 0; j < d; ++j) li.set_block(0, j, coords_of(h[i] * h[j]));
        left_mats.push_back(std::move(li));
    }
    Matrix unit = coords_of(Matrix::identity(f, m.dim()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back("f" + std::to_string(i));
    auto alg = FDAlgebra::create(f, std::move(labels), std::move(left_mats), std::move(unit),
                                 std::nullopt, std::nullopt, "End");
    return {alg, std::move(h)};
}

std::vector<Summand> decompose(const FDModule& m, unsigned long seed) {
    if (m.dim() == 0) return {};
    auto [end_alg, h] = endomorphism_algebra(m);
    auto semi = quotient_by_ideal(end_alg, end_alg->radical_basis());
    auto idem = find_nontrivial_idempotent(semi.algebra, seed);
    if (!idem) return {{m, Morphism::identity(m), Morphism::identity(m)}};

    // lift the idempotent along the nilpotent radical: e <- 3e^2 - 2e^3
    const Field& f = m.field();
    Matrix e = semi.section * *idem;
    for (int it = 0; it < 64; ++it) {
        Matrix e2 = end_alg->multiply(e, e);
        if (e2 == e) break;
        Matrix e3 = end_alg->multiply(e2, e);
        e = e2.scaled(f.from_int(3)) - e3.scaled(f.from_int(2));
    }
    if (end_alg->multiply(e, e) != e) throw std::logic_error("idempotent lifting did not converge");
    Matrix emat = Matrix::zero(f, m.dim(), m.dim());
    for (std::size_t k = 0; k < h.size(); ++k) emat = emat + h[k].scaled(e.at(k, 0));

    Matrix b1 = column_space_basis(emat);
    Matrix b2 = emat.kernel_basis();
    if (b1.cols() == 0 || b2.cols() == 0)
        return {{m, Morphism::identity(m), Morphism::identity(m)}};
    std::vector<Summand> out;
    for (int half = 0; half < 2; ++half) {
        const Matrix& basis = half == 0 ? b1 : b2;
        Matrix target = half == 0 ? emat : Matrix::identity(f, m.dim()) - emat;
        auto sub = submodule(m, basis);
        Morphism proj = Morphism::create(m, sub.module, *basis.solve(target));
        for (auto& part : decompose(sub.module, seed)) {
            out.push_back({part.module, sub.map.compose_after(part.inclusion),
                           part.projection.compose_after(proj)});
        }
    }
    return out;
}

// --- add-membership, cogeneration, enumeration -----------------------------

bool in_add(const FDModule& x, const FDModule& u) {
    if (x.dim() == 0) return true;
    const Field& f = x.field();
    auto xu = hom_space(x, u);
    auto ux = hom_space(u, x);
    std::vector<Matrix> prods;
    prods.reserve(xu.size() * ux.size());
    for (const auto& g : ux)
        for (const auto& h : xu) prods.push_back((g * h).vec());
    Matrix span = from_columns(f, x.dim() * x.dim(), prods);
    return span.solve(Matrix::identity(f, x.dim()).vec()).has_value();
}

bool is_cogenerated_by(const FDModule& x, const FDModule& u) {
    if (x.dim() == 0) return true;
    auto maps = hom_space(x, u);
    Matrix stacked(x.field(), 0, x.dim());
    for (const auto& h : maps) stacked = stacked.vstack(h);
    return stacked.kernel_basis().cols() == 0;
}

std::vector<Matrix> enumerate_submodules(const FDModule& m, std::size_t dim_bound) {
    const Field& f = m.field();
    if (!f.is_finite()) throw std::invalid_argument("field not finite");
    if (m.dim() > dim_bound) throw std::invalid_argument("dimension exceeds enumeration bound");
    auto canon = [&](const Matrix& basis) {
        return row_space_canonical(basis.transposed()).transposed();
    };
    std::map<std::string, Matrix> found;
    Matrix zero(f, m.dim(), 0);
    found[to_string(zero)] = zero;
    const long p = f.characteristic();
    std::vector<long> coord(m.dim(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < m.dim() && ++coord[i] == p) coord[i++] = 0;
        if (i == m.dim()) break;
        Matrix v(f, m.dim(), 1);
        for (std::size_t j = 0; j < m.dim(); ++j) v.at(j, 0) = f.from_int(coord[j]);
        Matrix c = canon(spin(m, v));
        found.emplace(to_string(c), c);
    }
    // close under sums
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Matrix> current;
        for (auto& [k, v] : found) current.push_back(v);
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                Matrix c = canon(column_space_basis(current[i].hstack(current[j])));
                changed |= found.emplace(to_string(c), c).second;
            }
    }
    std::vector<Matrix> out;
    for (auto& [k, v] : found) out.push_back(v);
    std::stable_sort(out.begin(), out.end(),
                     [](const Matrix& a, const Matrix& b) { return a.cols() < b.cols(); });
    return out;
}

std::optional<Morphism> find_isomorphism(const FDModule& m, const FDModule& n, unsigned long seed) {
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Morphism::unchecked(m, n, Matrix(m.field(), 0, 0));
    const Field& f = m.field();
    auto h = hom_space(m, n);
    if (h.empty()) return std::nullopt;
    auto assemble = [&](const Matrix& c) {
        Matrix cand = Matrix::zero(f, n.dim(), m.dim());
        for (std::size_t k = 0; k < h.size(); ++k) cand = cand + h[k].scaled(c.at(k, 0));
        return cand;
    };
    auto check = [&](const Matrix& c) -> std::optional<Morphism> {
        Matrix cand = assemble(c);
        if (cand.rank() != m.dim()) return std::nullopt;
        return Morphism::unchecked(m, n, std::move(cand));
    };
    // cheap invariants first: an isomorphism forces these hom counts to agree
    if (hom_space(n, m).size() != h.size()) return std::nullopt;
    if (hom_space(m, m).size() != hom_space(n, n).size()) return std::nullopt;
    for (std::size_t k = 0; k < h.size(); ++k)
        if (auto iso = check(basis_vec(f, h.size(), k))) return iso;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 500; ++t) {
        Matrix c(f, h.size(), 1);
        for (std::size_t j = 0; j < h.size(); ++j)
            c.at(j, 0) = f.is_finite() ? f.from_int(long(rng() % (unsigned long)f.characteristic()))
                                       : f.from_int(long(rng() % 7) - 3);
        if (auto iso = check(c)) return iso;
    }
    if (f.is_finite()) {
        // definitive only at very small search spaces
        double total = 1;
        for (std::size_t i = 0; i < h.size(); ++i) total *= double(f.characteristic());
        if (total <= 4096.0) {
            std::vector<long> coord(h.size(), 0);
            for (;;) {
                std::size_t i = 0;
                while (i < h.size() && ++coord[i] == f.characteristic()) coord[i++] = 0;
                if (i == h.size()) return std::nullopt;
                Matrix c(f, h.size(), 1);
                for (std::size_t j = 0; j < h.size(); ++j) c.at(j, 0) = f.from_int(coord[j]);
                if (auto iso = check(c)) return iso;
            }
        }
    }
    return std::nullopt;
}

bool is_isomorphic(const FDModule& m, const FDModule& n, unsigned long seed) {
    return find_isomorphism(m, n, seed).has_value();
}

// --- factorization through maps --------------------------------------------

std::optional<Morphism> factor_through_epi(const Morphism& f, const Morphism& epi) {
    auto h = hom_space(f.from, epi.from);
    std::vector<Matrix> images;
    for (const auto& b : h) images.push_back(epi.mat * b);
    std::vector<Matrix> vecs;
    for (const auto& e : images) vecs.push_back(e.vec());
    Matrix sys = from_columns(f.from.field(), f.mat.rows() * f.mat.cols(), vecs);
    auto c = sys.solve(f.mat.vec());
    if (!c) return std::nullopt;
    Matrix lift = Matrix::zero(f.from.field(), epi.from.dim(), f.from.dim());
    for (std::size_t k = 0; k < h.size(); ++k) lift = lift + h[k].scaled(c->at(k, 0));
    return Morphism::unchecked(f.from, epi.from, lift);
}

std::optional<Morphism> factor_through_mono(const Morphism& f, const Morphism& mono) {
    auto h = hom_space(mono.to, f.to);
    std::vector<Matrix> vecs;
    for (const auto& b : h) vecs.push_back((b * mono.mat).vec());
    Matrix sys = from_columns(f.from.field(), f.mat.rows() * f.mat.cols(), vecs);
    auto c = sys.solve(f.mat.vec());
    if (!c) return std::nullopt;
    Matrix ext = Matrix::zero(f.from.field(), f.to.dim(), mono.to.dim());
    for (std::size_t k = 0; k < h.size(); ++k) ext = ext + h[k].scaled(c->at(k, 0));
    return Morphism::unchecked(mono.to, f.to, ext);
}

// --- standard modules ------------------------------------------------------

FDModule regular_module(const FDAlgebra::Ptr& a) {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_mult(i));
    return FDModule::unchecked(a, std::move(act));
}

const StandardModules& standard_modules(const FDAlgebra::Ptr& a) {
    return a->memo<StandardModules>("standard_modules", [&]() {
        auto dedupe = [](std::vector<Summand> parts) {
            std::vector<FDModule> out;
            for (auto& p : parts) {
                bool dup = false;
                for (auto& q : out)
                    if (is_isomorphic(p.module, q)) {
                        dup = true;
                        break;
                    }
                if (!dup) out.push_back(p.module);
            }
            return out;
        };
        StandardModules sm;
        sm.projectives = dedupe(decompose(regular_module(a)));
        for (auto& p : sm.projectives) sm.simples.push_back(top(p).module);
        auto op_projs = dedupe(decompose(regular_module(a->opposite())));
        if (op_projs.size() != sm.projectives.size())
            throw std::logic_error("projective counts differ between the algebra and its opposite");
        std::vector<bool> used(op_projs.size(), false);
        for (std::size_t i = 0; i < sm.simples.size(); ++i) {
            bool matched = false;
            for (std::size_t j = 0; j < op_projs.size(); ++j) {
                if (used[j]) continue;
                // socle of D(P^op) is D(top(P^op))
                if (is_isomorphic(k_dual(top(op_projs[j]).module), sm.simples[i])) {
                    sm.injectives.push_back(k_dual(op_projs[j]));
                    used[j] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) throw std::logic_error("failed to align injectives with simples");
        }
        return sm;
    });
}

bool ShortExactSequence::is_exact() const {
    if (mono.to.dim() != epi.from.dim()) return false;
    if (!mono.is_mono() || !epi.is_epi()) return false;
    if (!(epi.mat * mono.mat).is_zero()) return false;
    return mono.from.dim() + epi.to.dim() == mono.to.dim();
}

}  // namespace homwb
