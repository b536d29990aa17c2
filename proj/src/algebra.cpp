#include "homwb/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace homwb {

std::size_t Quiver::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return i;
    throw std::invalid_argument("unknown vertex: " + label);
}

namespace {

Matrix closure_under_products(const FDAlgebra& a, Matrix span) {
    for (;;) {
        Matrix next = span;
        for (std::size_t i = 0; i < span.cols(); ++i)
            for (std::size_t j = 0; j < span.cols(); ++j)
                next = next.hstack(a.multiply(span.col(i), span.col(j)));
        next = column_space_basis(next);
        if (next.cols() == span.cols()) return next;
        span = next;
    }
}

std::vector<std::size_t> compute_generators(const FDAlgebra& a) {
    std::vector<std::size_t> gens;
    Matrix span = column_space_basis(a.unit());
    span = closure_under_products(a, span);
    for (std::size_t i = 0; i < a.dim() && span.cols() < a.dim(); ++i) {
        Matrix e = Matrix::zero(a.field(), a.dim(), 1);
        e.at(i, 0) = a.field().one();
        if (span_contains(span, e)) continue;
        gens.push_back(i);
        span = closure_under_products(a, column_space_basis(span.hstack(e)));
    }
    if (span.cols() != a.dim()) throw std::logic_error("generator search failed");
    return gens;
}

Scalar trace(const Field& f, const Matrix& m) {
    Scalar t = f.zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t = f.add(t, m.at(i, i));
    return t;
}

}  // namespace

Matrix generic_radical(const Field& field, const std::vector<Matrix>& left_mats) {
    const std::size_t n = left_mats.size();
    auto lmult_of = [&](const Matrix& x) {
        Matrix m = Matrix::zero(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            if (!field.is_zero(x.at(i, 0))) m = m + left_mats[i].scaled(x.at(i, 0));
        return m;
    };
    if (!field.is_finite()) {
        // kernel of the trace form tr(L_x L_b)
        Matrix gram(field, n, n);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t x = 0; x < n; ++x) gram.at(b, x) = trace(field, left_mats[x] * left_mats[b]);
        return gram.kernel_basis();
    }
    // characteristic p (Friedl-Ronyai): work with integer lifts and test
    // whether Tr((xy)^{p^k}) / p^k vanishes mod p at each stage
    const long p = field.characteristic();
    Field z = Field::rationals();
    std::vector<Matrix> lifts;
    for (const auto& m : left_mats) {
        Matrix l(z, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) l.at(i, j) = Scalar{m.at(i, j).num, 1};
        lifts.push_back(std::move(l));
    }
    auto lift_of = [&](const Matrix& x) {
        Matrix m = Matrix::zero(z, n, n);
        for (std::size_t i = 0; i < n; ++i)
            if (x.at(i, 0).num != 0) m = m + lifts[i].scaled(Scalar{x.at(i, 0).num, 1});
        return m;
    };
    unsigned long q = 1;
    Matrix span = Matrix::identity(field, n);
    for (;;) {
        // Tr(x^q)/q mod p only depends on x mod pq, so cap entry growth there
        const Int modulus = Int(p) * q;
        auto reduce_mod = [&](Matrix m) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j).num %= modulus;
            return m;
        };
        auto power_mod = [&](Matrix base, unsigned long e) {
            Matrix acc = Matrix::identity(z, n);
            while (e > 0) {
                if (e & 1) acc = reduce_mod(acc * base);
                base = reduce_mod(base * base);
                e >>= 1;
            }
            return acc;
        };
        Matrix cond(field, span.cols(), span.cols());
        for (std::size_t r = 0; r < span.cols() && span.cols() > 0; ++r) {
            Matrix ly = lift_of(span.col(r));
            for (std::size_t c = 0; c < span.cols(); ++c) {
                Matrix prod = reduce_mod(lift_of(span.col(c)) * ly);
                Int t = trace(z, power_mod(prod, q)).num;
                if (t % q != 0) throw std::logic_error("radical trace divisibility failed");
                cond.at(r, c) = field.reduce({t / q, 1});
            }
        }
        span = column_space_basis(span * cond.kernel_basis());
        if (q >= n || span.cols() == 0) break;
        q *= static_cast<unsigned long>(p);
    }
    return span;
}

Matrix FDAlgebra::left_mult_of(const Matrix& x) const {
    Matrix m = Matrix::zero(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!field_.is_zero(x.at(i, 0))) m = m + left_mats_[i].scaled(x.at(i, 0));
    return m;
}

Matrix FDAlgebra::right_mult_of(const Matrix& x) const {
    Matrix m = Matrix::zero(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!field_.is_zero(x.at(i, 0))) m = m + right_mats_[i].scaled(x.at(i, 0));
    return m;
}

Matrix FDAlgebra::multiply(const Matrix& x, const Matrix& y) const { return left_mult_of(x) * y; }

FDAlgebra::Ptr FDAlgebra::create(Field field, std::vector<std::string> labels,
                                 std::vector<Matrix> left_mats, Matrix unit,
                                 std::optional<Matrix> radical, std::optional<PathInfo> path_info,
                                 std::string name) {
    auto a = std::shared_ptr<FDAlgebra>(new FDAlgebra());
    a->field_ = field;
    a->name_ = std::move(name);
    a->labels_ = std::move(labels);
    a->left_mats_ = std::move(left_mats);
    a->unit_ = std::move(unit);
    a->path_info_ = std::move(path_info);
    const std::size_t n = a->left_mats_.size();
    if (a->labels_.size() != n) throw std::invalid_argument("label count mismatch");

    a->right_mats_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix r(field, n, n);
        for (std::size_t i = 0; i < n; ++i) r.set_block(0, i, a->left_mats_[i].col(j));
        a->right_mats_.push_back(std::move(r));
    }

    if (!a->left_mult_of(a->unit_).is_identity() || !a->right_mult_of(a->unit_).is_identity())
        throw std::logic_error("unit is not two-sided");
    if (n <= 32) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a->left_mult_of(a->left_mats_[i].col(j)) != a->left_mats_[i] * a->left_mats_[j])
                    throw std::logic_error("structure constants not associative");
    }

    a->radical_ = radical ? std::move(*radical) : generic_radical(field, a->left_mats_);
    a->generators_ = compute_generators(*a);
    return a;
}

FDAlgebra::Ptr FDAlgebra::opposite() const {
    std::scoped_lock lock(mutex_);
    if (auto back = opposite_back_.lock()) return back;
    if (opposite_) return opposite_;
    std::optional<PathInfo> op_info;
    if (path_info_) {
        op_info = *path_info_;
        for (auto& arrow : op_info->quiver.arrows) std::swap(arrow.src, arrow.tgt);
        std::swap(op_info->path_source, op_info->path_target);
    }
    auto op = create(field_, labels_, right_mats_, unit_, radical_, std::move(op_info), name_ + "^op");
    op->opposite_back_ = weak_from_this();
    opposite_ = op;
    return op;
}

// --- path algebras ---------------------------------------------------------

namespace {

struct Path {
    std::size_t src, tgt;
    std::vector<std::size_t> arrows;  // application order
};

std::string path_label(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertices[p.src];
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].label;
    }
    return s;
}

}  // namespace

FDAlgebra::Ptr build_path_algebra(const PathAlgebraPresentation& pres) {
    const Quiver& qv = pres.quiver;
    const Field& field = pres.field;
    const std::size_t cap = pres.nilpotency_cap;
    if (cap < 2) throw std::invalid_argument("nilpotency_cap must be >= 2");

    // validate relations
    for (const auto& rel : pres.relations) {
        if (rel.terms.empty()) throw std::invalid_argument("empty relation");
        std::size_t src = 0, tgt = 0;
        bool first = true;
        for (const auto& term : rel.terms) {
            if (term.arrows.size() < 2)
                throw std::invalid_argument("relation not admissible: path of length < 2");
            for (std::size_t t = 0; t + 1 < term.arrows.size(); ++t)
                if (qv.arrows[term.arrows[t]].tgt != qv.arrows[term.arrows[t + 1]].src)
                    throw std::invalid_argument("relation not composable");
            std::size_t s = qv.arrows[term.arrows.front()].src;
            std::size_t e = qv.arrows[term.arrows.back()].tgt;
            if (first) {
                src = s;
                tgt = e;
                first = false;
            } else if (s != src || e != tgt) {
                throw std::invalid_argument("relation not composable: mixed sources or targets");
            }
        }
    }

    // enumerate paths of length <= cap, shortest first
    std::vector<Path> paths;
    std::map<std::vector<std::size_t>, std::size_t> index_by_key;  // {src, arrows...}
    auto key_of = [](const Path& p) {
        std::vector<std::size_t> k{p.src};
        k.insert(k.end(), p.arrows.begin(), p.arrows.end());
        return k;
    };
    for (std::size_t v = 0; v < qv.vertices.size(); ++v) paths.push_back({v, v, {}});
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
        std::size_t level_end = paths.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::size_t arr = 0; arr < qv.arrows.size(); ++arr)
                if (qv.arrows[arr].src == paths[i].tgt) {
                    Path p = paths[i];
                    p.arrows.push_back(arr);
                    p.tgt = qv.arrows[arr].tgt;
                    paths.push_back(std::move(p));
                }
        level_begin = level_end;
        if (paths.size() > 50000)
            throw std::runtime_error("path explosion: raise relations or lower nilpotency_cap");
    }
    for (std::size_t i = 0; i < paths.size(); ++i) index_by_key[key_of(paths[i])] = i;
    const std::size_t np = paths.size();

    // ideal generators p * rel * q, truncated past length cap
    std::vector<Matrix> ideal_rows;
    for (const auto& rel : pres.relations) {
        std::size_t rel_src = qv.arrows[rel.terms.front().arrows.front()].src;
        std::size_t rel_tgt = qv.arrows[rel.terms.front().arrows.back()].tgt;
        for (const auto& before : paths) {
            if (before.tgt != rel_src) continue;
            for (const auto& after : paths) {
                if (after.src != rel_tgt) continue;
                if (before.arrows.size() + 2 + after.arrows.size() > cap) continue;
                Matrix v = Matrix::zero(field, 1, np);
                bool nonzero = false;
                for (const auto& term : rel.terms) {
                    Path full = before;
                    full.arrows.insert(full.arrows.end(), term.arrows.begin(), term.arrows.end());
                    full.arrows.insert(full.arrows.end(), after.arrows.begin(), after.arrows.end());
                    full.tgt = after.tgt;
                    if (full.arrows.size() > cap) continue;
                    std::size_t idx = index_by_key.at(key_of(full));
                    v.at(0, idx) = field.add(v.at(0, idx), term.coef);
                    nonzero = true;
                }
                if (nonzero && !v.is_zero()) ideal_rows.push_back(std::move(v));
            }
        }
    }
    Matrix ideal = Matrix::zero(field, 0, np);
    for (const auto& r : ideal_rows) ideal = ideal.vstack(r);
    Matrix ideal_rref = row_space_canonical(ideal);

    auto reduce_by = [&field](const Matrix& rref, Matrix v) {
        // v is a row vector; eliminate pivot coordinates
        for (std::size_t r = 0; r < rref.rows(); ++r) {
            std::size_t piv = 0;
            while (piv < rref.cols() && field.is_zero(rref.at(r, piv))) ++piv;
            if (piv == rref.cols()) continue;
            Scalar c = v.at(0, piv);
            if (field.is_zero(c)) continue;
            for (std::size_t j = piv; j < rref.cols(); ++j)
                v.at(0, j) = field.sub(v.at(0, j), field.mul(c, rref.at(r, j)));
        }
        return v;
    };

    // admissibility: every path of full length cap must lie in the ideal
    for (std::size_t i = 0; i < np; ++i) {
        if (paths[i].arrows.size() != cap) continue;
        Matrix e = Matrix::zero(field, 1, np);
        e.at(0, i) = field.one();
        if (!reduce_by(ideal_rref, e).is_zero())
            throw std::runtime_error("ideal not admissible within cap");
    }

    // full reduction space: ideal + all length-cap paths
    Matrix full = ideal;
    for (std::size_t i = 0; i < np; ++i)
        if (paths[i].arrows.size() == cap) {
            Matrix e = Matrix::zero(field, 1, np);
            e.at(0, i) = field.one();
            full = full.vstack(e);
        }
    Matrix rr = row_space_canonical(full);
    std::vector<bool> is_pivot(np, false);
    for (std::size_t r = 0; r < rr.rows(); ++r) {
        std::size_t piv = 0;
        while (piv < np && field.is_zero(rr.at(r, piv))) ++piv;
        is_pivot[piv] = true;
    }
    std::vector<std::size_t> basis;  // path indices in normal form
    for (std::size_t i = 0; i < np; ++i)
        if (!is_pivot[i]) basis.push_back(i);
    const std::size_t dim = basis.size();
    std::vector<std::size_t> pos(np, np);
    for (std::size_t b = 0; b < dim; ++b) pos[basis[b]] = b;

    auto to_algebra_coords = [&](const Matrix& row) {
        Matrix v = Matrix::zero(field, dim, 1);
        for (std::size_t b = 0; b < dim; ++b) v.at(b, 0) = row.at(0, basis[b]);
        return v;
    };

    // structure constants: basis_i * basis_j concatenates "j then i"
    std::vector<Matrix> left_mats(dim, Matrix::zero(field, dim, dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const Path& pi = paths[basis[i]];
        for (std::size_t j = 0; j < dim; ++j) {
            const Path& pj = paths[basis[j]];
            if (pj.tgt != pi.src) continue;
            Path prod = pj;
            prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
            prod.tgt = pi.tgt;
            if (prod.arrows.size() > cap) continue;
            Matrix e = Matrix::zero(field, 1, np);
            e.at(0, index_by_key.at(key_of(prod))) = field.one();
            left_mats[i].set_block(0, j, to_algebra_coords(reduce_by(rr, e)));
        }
    }

    Matrix unit = Matrix::zero(field, dim, 1);
    std::vector<Matrix> vertex_idem;
    for (std::size_t v = 0; v < qv.vertices.size(); ++v) {
        std::size_t b = pos[v];  // vertex paths are never eliminated
        Matrix e = Matrix::zero(field, dim, 1);
        e.at(b, 0) = field.one();
        unit.at(b, 0) = field.one();
        vertex_idem.push_back(std::move(e));
    }

    Matrix radical(field, dim, 0);
    std::vector<std::string> labels;
    FDAlgebra::PathInfo info;
    info.quiver = qv;
    for (std::size_t b = 0; b < dim; ++b) {
        const Path& p = paths[basis[b]];
        labels.push_back(path_label(qv, p));
        info.path_source.push_back(p.src);
        info.path_target.push_back(p.tgt);
        info.path_length.push_back(p.arrows.size());
        if (!p.arrows.empty()) {
            Matrix e = Matrix::zero(field, dim, 1);
            e.at(b, 0) = field.one();
            radical = radical.hstack(e);
        }
    }
    info.vertex_idempotents = std::move(vertex_idem);

    if (dim <= 24) {
        // the arrow-ideal shortcut must agree with the generic computation
        Matrix generic = generic_radical(field, left_mats);
        if (row_space_canonical(generic.transposed()) != row_space_canonical(radical.transposed()))
            throw std::logic_error("radical cross-check failed");
    }
    return FDAlgebra::create(field, std::move(labels), std::move(left_mats), std::move(unit),
                             std::move(radical), std::move(info), "path algebra");
}

QuotientAlgebra quotient_by_ideal(const FDAlgebra::Ptr& a, const Matrix& ideal_basis) {
    const Field& field = a->field();
    const std::size_t n = a->dim();
    auto [proj, section] = complement_projection(ideal_basis, n);
    const std::size_t m = proj.rows();

    std::vector<Matrix> left_mats;
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < m; ++b) {
        left_mats.push_back(proj * a->left_mult_of(section.col(b)) * section);
        std::size_t idx = 0;
        while (field.is_zero(section.at(idx, b))) ++idx;
        labels.push_back(a->basis_labels()[idx]);
    }
    Matrix unit = proj * a->unit();
    auto alg = FDAlgebra::create(field, std::move(labels), std::move(left_mats), std::move(unit),
                                 std::nullopt, std::nullopt, a->name() + "/I");
    return {alg, std::move(proj), std::move(section)};
}

}  // namespace homwb
