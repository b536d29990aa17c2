// End-to-end acceptance gate. Each numbered criterion prints exactly one
// pass/fail line; the exit code is the number of failures.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "homwb/report.hpp"

using namespace homwb;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(HOMWB_CORPUS_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing corpus file " + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CorpusEntry {
    std::string name;
    FDAlgebra::Ptr algebra;
    bool hereditary = false;
};

std::vector<CorpusEntry> load_corpus() {
    const std::vector<std::pair<std::string, bool>> files = {
        {"a2.ws", true},         {"a3.ws", true},          {"a3_nakayama.ws", false},
        {"semisimple3.ws", true}, {"dual_numbers.ws", false}, {"cyclic3_rad2.ws", false},
        {"kronecker.ws", true},  {"abba.ws", false},       {"abba_q.ws", false},
        {"gb.ws", false},        {"five_vertex.ws", false}};
    std::vector<CorpusEntry> out;
    for (const auto& [f, her] : files)
        out.push_back({f, build_workspace(parse_workspace(slurp(f))).algebra, her});
    return out;
}

// "at least 2" in any of the report's value spellings
bool certifies_at_least(const std::string& s, std::size_t n) {
    if (s == "infinite") return true;
    if (s.rfind(">=", 0) == 0) return std::stoul(s.substr(2)) >= n;
    return !s.empty() && std::isdigit((unsigned char)s[0]) && std::stoul(s) >= n;
}

// ---- straight-line Ext oracle -------------------------------------------
// Free (non-minimal) resolution by raw linear algebra only: a stage is a
// matrix of generator columns inside Lambda^n, covers are free modules, and
// the Ext groups come from the induced cochain complex on U^n. No use of
// the workbench's resolution or Ext machinery.

// closure of the given columns under the left regular action
Matrix action_closure(const FDAlgebra::Ptr& a, std::size_t copies, Matrix cols) {
    std::size_t d = a->dim();
    while (true) {
        Matrix grown = cols;
        for (std::size_t i = 0; i < d; ++i) {
            Matrix mapped(cols.field(), cols.rows(), cols.cols());
            for (std::size_t c = 0; c < copies; ++c)
                mapped.set_block(c * d, 0,
                                 a->left_mult(i) * cols.block(c * d, 0, d, cols.cols()));
            grown = grown.hstack(mapped);
        }
        Matrix next = column_space_basis(grown);
        if (next.cols() == cols.cols()) return next;
        cols = std::move(next);
    }
}

// small generating subset of the column span's action closure
Matrix pick_generators(const FDAlgebra::Ptr& a, std::size_t copies, const Matrix& cols) {
    Matrix gens(cols.field(), cols.rows(), 0);
    Matrix closed(cols.field(), cols.rows(), 0);
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        Matrix cand = closed.hstack(cols.col(j));
        if (column_space_basis(cand).cols() == closed.cols()) continue;
        gens = gens.hstack(cols.col(j));
        closed = action_closure(a, copies, cand);
    }
    return gens;
}

InvariantValue straight_line_grade(const FDModule& x, const FDModule& u, std::size_t cap) {
    const FDAlgebra::Ptr& a = x.algebra();
    const Field& f = x.field();
    std::size_t d = a->dim(), du = u.dim();
    if (x.dim() == 0) return InvariantValue::zero_module();

    // stage 0: free cover on a generating subset of the basis of x
    Matrix chosen(f, x.dim(), 0);
    Matrix span(f, x.dim(), 0);
    for (std::size_t j = 0; j < x.dim(); ++j) {
        Matrix e(f, x.dim(), 1);
        e.at(j, 0) = f.one();
        if (column_space_basis(span.hstack(e)).cols() == span.cols()) continue;
        chosen = chosen.hstack(e);
        // close under the action
        Matrix s = span.hstack(e);
        while (true) {
            Matrix grown = s;
            for (std::size_t i = 0; i < d; ++i) grown = grown.hstack(x.act(i) * s);
            Matrix next = column_space_basis(grown);
            if (next.cols() == s.cols()) break;
            s = std::move(next);
        }
        span = std::move(s);
    }
    std::size_t n0 = chosen.cols();
    // d_0: Lambda^{n0} -> x, unit of copy j goes to the j-th chosen vector
    Matrix d0(f, x.dim(), n0 * d);
    for (std::size_t j = 0; j < n0; ++j)
        for (std::size_t i = 0; i < d; ++i) d0.set_block(0, j * d + i, x.act(i) * chosen.col(j));

    std::vector<std::size_t> ranks = {n0, 0};
    std::vector<Matrix> gens = {pick_generators(a, n0, d0.kernel_basis())};
    ranks[1] = gens[0].cols();

    auto cochain_rank = [&](const Matrix& g, std::size_t prev) {
        // delta: U^{prev} -> U^{g.cols()}, block (r, s) = action of component s of g_r
        Matrix delta(f, g.cols() * du, prev * du);
        for (std::size_t r = 0; r < g.cols(); ++r)
            for (std::size_t s = 0; s < prev; ++s)
                delta.set_block(r * du, s * du, u.act_of(g.block(s * d, r, d, 1)));
        return delta.rank();
    };

    std::vector<std::size_t> delta_ranks;  // delta_ranks[j]: U^{ranks[j]} -> U^{ranks[j+1]}
    for (std::size_t i = 0; i <= cap; ++i) {
        while (delta_ranks.size() <= i) {
            std::size_t stage = delta_ranks.size();
            delta_ranks.push_back(ranks[stage + 1] == 0 ? 0
                                                        : cochain_rank(gens[stage], ranks[stage]));
        }
        std::size_t ext = ranks[i] * du - delta_ranks[i] - (i ? delta_ranks[i - 1] : 0);
        if (ext > 0) return InvariantValue::exact(i);
        if (ranks[i + 1] == 0) return InvariantValue::infinite();
        if (i == cap) break;
        // extend the free resolution one stage: kernel of Lambda^{cur} -> Lambda^{prev}
        const Matrix& g = gens[i];
        std::size_t prev = ranks[i], cur = ranks[i + 1];
        Matrix m(f, prev * d, cur * d);
        for (std::size_t r = 0; r < cur; ++r)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t s = 0; s < prev; ++s)
                    m.set_block(s * d, r * d + j, a->left_mult(j) * g.block(s * d, r, d, 1));
        gens.push_back(pick_generators(a, cur, m.kernel_basis()));
        ranks.push_back(gens.back().cols());
    }
    return InvariantValue::at_least(cap + 1);
}

InvariantValue oracle_strong_grade(const FDModule& m, const BimoduleContext& ctx,
                                   std::size_t cap) {
    bool any_at_least = false;
    std::optional<std::size_t> best;
    for (const auto& basis : enumerate_submodules(m)) {
        if (basis.cols() == 0) continue;
        InvariantValue g = straight_line_grade(submodule(m, basis).module, ctx.u, cap);
        if (g.kind == InvariantValue::Kind::Exact)
            best = best ? std::min(*best, g.value) : g.value;
        else if (g.kind == InvariantValue::Kind::AtLeast)
            any_at_least = true;
    }
    if (best) return InvariantValue::exact(*best);
    if (any_at_least) return InvariantValue::at_least(cap + 1);
    return InvariantValue::infinite();
}

// --------------------------------------------------------------------------

using Criterion = std::function<std::string()>;  // empty string = pass

std::string ac1() {
    for (const char* file : {"abba.ws", "abba_q.ws"}) {
        RunOptions o;
        o.cap = 4;
        ReportDocument doc = run_command("invariants", slurp(file), o);
        auto prof = doc.body["injective_term_flat_dimensions"];
        if (prof["left"][0] != "1") return std::string(file) + ": left fd(I_0) != 1";
        if (!certifies_at_least(prof["right"][0], 2))
            return std::string(file) + ": right fd(I'_0) not certified >= 2";
    }
    return "";
}

std::string ac2() {
    RunOptions o;
    o.cap = 6;
    auto prof = run_command("invariants", slurp("gb.ws"), o)
                    .body["injective_term_flat_dimensions"];
    if (prof["left"][0] != "2") return "left fd(I_0) != 2";
    if (prof["right"][0] != "1") return "right fd(I'_0) != 1";
    return "";
}

std::string ac3() {
    RunOptions o;
    o.cap = 6;
    ReportDocument doc = run_command("invariants", slurp("five_vertex.ws"), o);
    auto prof = doc.body["injective_term_flat_dimensions"];
    std::vector<std::string> want = {"1", "1", "2"};
    for (std::size_t i = 0; i < 3; ++i) {
        if (prof["left"][i] != want[i]) return "left fd profile mismatch";
        if (prof["right"][i] != want[i]) return "right fd profile mismatch";
    }
    auto id = doc.body["injective_dimension"];
    if (id["left"] != "2" || id["right"] != "2") return "self-injective dimension != 2";

    auto bw = build_workspace(parse_workspace(slurp("five_vertex.ws")));
    AuditReport r = audit_transfer(end_algebra(regular_module(bw.algebra)), 1, 2,
                                   {"five_vertex", 6, 4, false});
    if (r.consistency != "consistent") return "transfer audit: " + r.consistency;
    for (const auto& c : r.conditions)
        if (c.verdict != Verdict::Holds) return "transfer audit: '" + c.label + "' not verified";
    return "";
}

std::string ac4(const std::vector<CorpusEntry>& corpus) {
    for (const auto& e : corpus) {
        InvariantValue l = dominant_dimension(e.algebra, 4);
        InvariantValue r = dominant_dimension(e.algebra->opposite(), 4);
        if (!(l == r))
            return e.name + ": dom.dim " + to_string(l) + " vs " + to_string(r);
    }
    return "";
}

std::string ac5(const std::vector<CorpusEntry>& corpus) {
    for (const auto& e : corpus) {
        std::vector<std::pair<std::string, FDModule>> contexts = {
            {"regular", regular_module(e.algebra)}};
        if (e.hereditary)
            contexts.push_back(
                {"dual-regular", k_dual(regular_module(e.algebra->opposite()))});
        SampleOptions so;
        so.size = 8;
        SampleFamily fam = sample_family(e.algebra, so);
        for (const auto& [kind, u] : contexts) {
            BimoduleContext ctx = end_algebra(u);
            for (std::size_t k = 1; k <= 3; ++k) {
                AuditReport r = audit_theorem_I(ctx, k, fam, {e.name + "/" + kind, 6, 4, false});
                if (r.consistency != "consistent")
                    return e.name + "/" + kind + " k=" + std::to_string(k) + ": " +
                           r.consistency;
            }
        }
        // the CLI maps a clean audit to exit 0 and a refutation to exit 4
        RunOptions o;
        o.theorem = "1";
        if (run_command("audit", slurp(e.name), o).exit_code != 0)
            return e.name + ": unexpected nonzero exit";
    }
    return "";
}

std::string ac6(const std::vector<CorpusEntry>& corpus) {
    std::size_t sampled = 0;
    bool chain_seen = false;
    for (const auto& e : corpus) {
        if (!e.algebra->field().is_finite() || e.algebra->field().characteristic() != 2)
            continue;
        SampleOptions so;
        so.size = (e.name == "abba.ws" || e.name == "gb.ws") ? 30 : 10;
        SampleFamily fam = sample_family(e.algebra, so);
        sampled += fam.modules.size();
        BimoduleContext ctx = end_algebra(regular_module(e.algebra));
        AuditReport r = audit_theorem_II(ctx, 2, fam, {e.name, 6, 4, false});
        if (r.consistency != "consistent") return e.name + ": " + r.consistency;
        for (const auto& c : r.conditions)
            chain_seen = chain_seen || c.evidence.find("explicit chain") != std::string::npos;
    }
    if (sampled < 30) return "fewer than 30 sampled modules";
    if (!chain_seen) return "the explicit chain search never succeeded";
    return "";
}

std::string ac7() {
    Field f = Field::prime(2);
    std::vector<FDModule> pool;
    for (const char* file : {"abba.ws", "gb.ws"}) {
        auto bw = build_workspace(parse_workspace(slurp(file)));
        SampleOptions so;
        so.seed = 5;
        so.size = 25;
        so.dim_bound = 5;
        BimoduleContext ctx = end_algebra(regular_module(bw.algebra));
        std::size_t used = 0;
        for (const FDModule& m : sample_family(bw.algebra, so).modules) {
            if (m.dim() == 0 || m.dim() > 5 || pool.size() >= 20 || used >= 10) continue;
            ++used;
            pool.push_back(m);
            InvariantValue lib = strong_grade_bruteforce(m, ctx, 6);
            InvariantValue ora = oracle_strong_grade(m, ctx, 6);
            if (!(lib == ora))
                return file + std::string(": dim ") + std::to_string(m.dim()) + " module: " +
                       to_string(lib) + " vs oracle " + to_string(ora);
        }
    }
    if (pool.size() < 20) return "only " + std::to_string(pool.size()) + " modules checked";
    return "";
}

std::string ac8(const std::vector<CorpusEntry>& corpus) {
    std::size_t eq1_instances = 0;
    for (const auto& e : corpus) {
        const StandardModules& sm = standard_modules(e.algebra);
        std::vector<FDModule> mods = sm.simples;
        mods.push_back(regular_module(e.algebra));
        for (const auto& m : mods)
            for (const auto& n : mods) {
                for (std::size_t i = 0; i <= 4; ++i) {
                    std::size_t proj = ext_dim(m, n, i);
                    if (proj != ext_dim_via_injectives(m, n, i))
                        return e.name + ": ext balance fails at i=" + std::to_string(i);
                    if (proj != ext_dim(k_dual(n), k_dual(m), i))
                        return e.name + ": duality transport fails at i=" + std::to_string(i);
                }
                FDModule dd = k_dual(k_dual(m));
                if (dd.dim() != m.dim()) return e.name + ": double dual changes dimension";
                bool same = true;
                for (std::size_t i = 0; i < e.algebra->dim(); ++i)
                    same = same && dd.act(i) == m.act(i);
                if (!same) return e.name + ": double dual is not the identity";
            }
    }
    for (const char* file : {"abba.ws", "gb.ws", "five_vertex.ws"}) {
        auto bw = build_workspace(parse_workspace(slurp(file)));
        BimoduleContext ctx = end_algebra(regular_module(bw.algebra));
        const StandardModules& sm = standard_modules(bw.algebra);
        for (const auto& s : sm.simples) {
            FDModule b = dual_wrt(s, ctx);  // a right Gamma-module
            if (b.dim() == 0) continue;
            for (const auto& einj : sm.injectives)
                for (std::size_t i = 1; i <= 2; ++i) {
                    std::size_t lhs = tor_dim(b, hom_into_gamma(ctx, einj), i);
                    std::size_t rhs = hom_space(ext_from_gamma(ctx, b, i), einj).size();
                    if (lhs != rhs)
                        return std::string(file) + ": Tor-Hom identity fails at i=" +
                               std::to_string(i);
                    ++eq1_instances;
                }
        }
    }
    if (eq1_instances < 10) return "fewer than 10 Tor-Hom instances";
    return "";
}

std::string ac9() {
    {
        auto bw = build_workspace(parse_workspace(slurp("a2.ws")));
        BimoduleContext ctx = end_algebra(regular_module(bw.algebra));
        AuditReport r = audit_double_dual(ctx, sample_family(bw.algebra), {"a2", 6, 4, false});
        if (r.consistency != "consistent") return "a2: " + r.consistency;
        Verdict b1 = Verdict::Vacuous, b3 = Verdict::Vacuous;
        for (const auto& c : r.conditions) {
            if (c.label.rfind("a3", 0) == 0 &&
                (c.verdict != Verdict::SampledConsistent || c.sample_size == 0))
                return "a2: mono preservation not confirmed on samples";
            if (c.label.rfind("b1", 0) == 0) b1 = c.verdict;
            if (c.label.rfind("b3", 0) == 0) b3 = c.verdict;
        }
        // at dominant dimension 1 a witnessed left-exactness failure is the
        // expected outcome; the contradiction would be failing at >= 2
        if (b1 == Verdict::Holds && b3 == Verdict::Fails)
            return "a2: left-exactness contradiction at dominant dimension >= 2";
    }
    {
        auto bw = build_workspace(parse_workspace(slurp("semisimple3.ws")));
        BimoduleContext ctx = end_algebra(regular_module(bw.algebra));
        AuditReport r = audit_double_dual(ctx, sample_family(bw.algebra), {"ss", 6, 4, false});
        if (r.consistency != "consistent") return "semisimple: " + r.consistency;
        for (const auto& c : r.conditions)
            if (c.label.rfind("b3", 0) == 0 &&
                (c.verdict == Verdict::Fails || c.sample_size == 0))
                return "semisimple: left-exactness not confirmed on samples";
    }
    return "";
}

std::string ac10() {
    std::vector<std::pair<std::string, RunOptions>> runs;
    RunOptions audit2;
    audit2.theorem = "2";
    audit2.k = 2;
    audit2.seed = 3;
    runs.push_back({"abba.ws", audit2});
    RunOptions auditdd;
    auditdd.theorem = "dd";
    auditdd.seed = 11;
    runs.push_back({"a2.ws", auditdd});
    for (const auto& [file, o] : runs) {
        std::string text = slurp(file);
        if (to_json(run_command("audit", text, o)) != to_json(run_command("audit", text, o)))
            return file + ": audit reports differ between identical runs";
    }
    std::string text = slurp("five_vertex.ws");
    if (to_json(run_command("invariants", text)) != to_json(run_command("invariants", text)))
        return "invariants reports differ between identical runs";
    return "";
}

}  // namespace

int main() {
    std::vector<CorpusEntry> corpus = load_corpus();
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"1: asymmetric flat dimensions of I_0 over GF(2) and Q", ac1},
        {"2: mirrored algebra has the transposed flat dimensions", ac2},
        {"3: five-vertex fd profile, injective dimension, transfer audit", ac3},
        {"4: left and right dominant dimensions agree across the corpus",
         [&] { return ac4(corpus); }},
        {"5: dominant-dimension conditions never disagree for k <= 3",
         [&] { return ac5(corpus); }},
        {"6: gorenstein profiles corroborated by chains, no sampled refutation",
         [&] { return ac6(corpus); }},
        {"7: strong grade matches the straight-line oracle on 20 modules", ac7},
        {"8: ext balance, duality transport, Tor-Hom identity, double duality",
         [&] { return ac8(corpus); }},
        {"9: double-dual audits on the A2 and semisimple contexts", ac9},
        {"10: byte-identical structured reports for identical seeds", ac10},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        std::string err;
        try {
            err = run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        if (err.empty()) {
            std::cout << "criterion " << name << ": PASS" << std::endl;
        } else {
            std::cout << "criterion " << name << ": FAIL (" << err << ")" << std::endl;
            ++failures;
        }
    }
    return failures;
}
