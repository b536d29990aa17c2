#include "homwb/workspace.hpp"

#include <sstream>

namespace homwb {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char c) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == c) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Field parse_field(const std::string& spec, std::size_t line) {
    std::string s = trim(spec);
    if (s == "Q") return Field::rationals();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        long p = 0;
        try {
            p = std::stol(s.substr(3, s.size() - 4));
        } catch (const std::exception&) {
            throw ParseError(line, "bad field spec '" + s + "'");
        }
        if (!is_prime(p)) throw ParseError(line, "field order must be prime, got " + s);
        return Field::prime(p);
    }
    throw ParseError(line, "bad field spec '" + s + "' (expected GF(p) or Q)");
}

std::size_t arrow_index(const Quiver& q, const std::string& label, std::size_t line) {
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        if (q.arrows[i].label == label) return i;
    throw ParseError(line, "unknown arrow '" + label + "'");
}

/// One relation line: a sum of optionally-scaled *-composed arrow words in
/// function-composition order ("b*a" = apply a, then b).
Relation parse_relation(const std::string& text, const Quiver& q, const Field& f,
                        std::size_t line) {
    Relation rel;
    std::string prepared;
    for (char c : text) {
        if (c == '-') prepared += "+-";
        else prepared += c;
    }
    for (std::string piece : split_on(prepared, '+')) {
        piece = trim(piece);
        if (piece.empty()) continue;
        Scalar coef = f.one();
        if (piece[0] == '-') {
            coef = f.neg(coef);
            piece = trim(piece.substr(1));
        }
        auto words = split_ws(piece);
        if (words.empty()) throw ParseError(line, "empty relation term");
        std::size_t start = 0;
        if (words.size() > 1) {
            try {
                coef = f.mul(coef, f.parse(words[0]));
                start = 1;
            } catch (const std::exception&) {
                throw ParseError(line, "bad coefficient '" + words[0] + "'");
            }
        }
        if (words.size() - start != 1)
            throw ParseError(line, "relation term must be a single *-composed word");
        RelationTerm term;
        term.coef = coef;
        auto names = split_on(words[start], '*');
        // written function order reversed = application order
        for (auto it = names.rbegin(); it != names.rend(); ++it)
            term.arrows.push_back(arrow_index(q, trim(*it), line));
        rel.terms.push_back(std::move(term));
    }
    if (rel.terms.empty()) throw ParseError(line, "empty relation");
    return rel;
}

Matrix parse_matrix(const std::string& text, const Field& f, std::size_t rows, std::size_t cols,
                    std::size_t line) {
    Matrix m(f, rows, cols);
    if (trim(text).empty()) {
        if (rows * cols != 0)
            throw ParseError(line, "expected " + std::to_string(rows) + " matrix rows, got none");
        return m;
    }
    auto row_texts = split_on(text, ';');
    if (row_texts.size() != rows)
        throw ParseError(line, "expected " + std::to_string(rows) + " matrix rows, got " +
                                   std::to_string(row_texts.size()));
    for (std::size_t i = 0; i < rows; ++i) {
        auto entries = split_ws(trim(row_texts[i]));
        if (entries.size() != cols)
            throw ParseError(line, "expected " + std::to_string(cols) + " entries in row " +
                                       std::to_string(i + 1));
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m.at(i, j) = f.parse(entries[j]);
            } catch (const std::exception&) {
                throw ParseError(line, "bad matrix entry '" + entries[j] + "'");
            }
        }
    }
    return m;
}

bool same_quiver(const Quiver& a, const Quiver& b) {
    if (a.vertices != b.vertices || a.arrows.size() != b.arrows.size()) return false;
    for (std::size_t i = 0; i < a.arrows.size(); ++i)
        if (a.arrows[i].label != b.arrows[i].label || a.arrows[i].src != b.arrows[i].src ||
            a.arrows[i].tgt != b.arrows[i].tgt)
            return false;
    return true;
}

}  // namespace

bool WorkspaceFile::operator==(const WorkspaceFile& o) const {
    return field == o.field && same_quiver(quiver, o.quiver) &&
           relation_texts == o.relation_texts && modules == o.modules && u_kind == o.u_kind &&
           u_name == o.u_name;
}

WorkspaceFile parse_workspace(const std::string& text) {
    WorkspaceFile ws;
    bool have_field = false, have_vertices = false;
    enum class Section { None, Arrows, Relations, Module };
    Section section = Section::None;
    ModuleSpec* current = nullptr;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));

        if (key == "field") {
            ws.field = parse_field(value, lineno);
            have_field = true;
            section = Section::None;
        } else if (key == "vertices") {
            ws.quiver.vertices = split_ws(value);
            if (ws.quiver.vertices.empty()) throw ParseError(lineno, "no vertices given");
            have_vertices = true;
            section = Section::None;
        } else if (key == "arrows") {
            if (!value.empty()) throw ParseError(lineno, "arrows header takes no value");
            if (!have_vertices) throw ParseError(lineno, "arrows before vertices");
            section = Section::Arrows;
        } else if (key == "relations") {
            if (!value.empty()) throw ParseError(lineno, "relations header takes no value");
            section = Section::Relations;
        } else if (key.rfind("module ", 0) == 0) {
            std::string name = trim(key.substr(7));
            if (name.empty() || !value.empty())
                throw ParseError(lineno, "module header is 'module <name>:'");
            for (const auto& m : ws.modules)
                if (m.name == name) throw ParseError(lineno, "duplicate module '" + name + "'");
            ws.modules.push_back(ModuleSpec{name, {}, {}});
            current = &ws.modules.back();
            section = Section::Module;
        } else if (key == "U") {
            auto words = split_ws(value);
            if (words.size() == 1 && (words[0] == "regular" || words[0] == "dual-regular")) {
                ws.u_kind = words[0];
            } else if (words.size() == 2 && words[0] == "module") {
                ws.u_kind = "module";
                ws.u_name = words[1];
            } else {
                throw ParseError(lineno, "U must be regular, dual-regular, or module <name>");
            }
            section = Section::None;
        } else if (section == Section::Arrows) {
            auto words = split_ws(value);
            if (words.size() != 3 || words[1] != "->")
                throw ParseError(lineno, "arrow line is '<name>: <src> -> <tgt>'");
            Quiver::Arrow a;
            a.label = key;
            try {
                a.src = ws.quiver.vertex_index(words[0]);
                a.tgt = ws.quiver.vertex_index(words[2]);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            ws.quiver.arrows.push_back(std::move(a));
        } else if (section == Section::Relations) {
            // relations are bare lines; a colon only appears in 'key: value'
            throw ParseError(lineno, "unexpected key '" + key + "' inside relations");
        } else if (section == Section::Module && key == "dim") {
            if (!have_vertices) throw ParseError(lineno, "module before vertices");
            for (const auto& w : split_ws(value)) {
                try {
                    current->dims.push_back(std::stoul(w));
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad dimension '" + w + "'");
                }
            }
            if (current->dims.size() != ws.quiver.vertices.size())
                throw ParseError(lineno, "need one dimension per vertex");
        } else if (section == Section::Module && key.rfind("arrow ", 0) == 0) {
            if (!have_field) throw ParseError(lineno, "module matrices before field");
            if (current->dims.empty()) throw ParseError(lineno, "arrow matrix before dim");
            std::string label = trim(key.substr(6));
            std::size_t idx = arrow_index(ws.quiver, label, lineno);
            std::size_t r = current->dims[ws.quiver.arrows[idx].tgt];
            std::size_t c = current->dims[ws.quiver.arrows[idx].src];
            current->arrow_matrices[label] = parse_matrix(value, ws.field, r, c, lineno);
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }

        if (section == Section::Relations && key == "relations") {
            // consume the following bare lines as relation expressions
            std::string rel_raw;
            while (in.peek() != EOF) {
                auto pos = in.tellg();
                if (!std::getline(in, rel_raw)) break;
                ++lineno;
                std::string rel = trim(rel_raw);
                if (auto hash = rel.find('#'); hash != std::string::npos)
                    rel = trim(rel.substr(0, hash));
                if (rel.empty()) continue;
                if (rel.find(':') != std::string::npos) {
                    in.seekg(pos);
                    --lineno;
                    break;
                }
                if (!have_field) throw ParseError(lineno, "relations before field");
                parse_relation(rel, ws.quiver, ws.field, lineno);  // validate eagerly
                ws.relation_texts.push_back(rel);
            }
            section = Section::None;
        }
    }
    if (!have_field) throw ParseError(lineno, "missing field");
    if (!have_vertices) throw ParseError(lineno, "missing vertices");
    if (ws.u_kind == "module") {
        bool found = false;
        for (const auto& m : ws.modules) found = found || m.name == ws.u_name;
        if (!found) throw ParseError(lineno, "U names unknown module '" + ws.u_name + "'");
    }
    return ws;
}

std::string serialize_workspace(const WorkspaceFile& ws) {
    std::ostringstream os;
    os << "field: "
       << (ws.field.is_finite() ? "GF(" + std::to_string(ws.field.characteristic()) + ")" : "Q")
       << "\n";
    os << "vertices:";
    for (const auto& v : ws.quiver.vertices) os << " " << v;
    os << "\n";
    if (!ws.quiver.arrows.empty()) {
        os << "arrows:\n";
        for (const auto& a : ws.quiver.arrows)
            os << "  " << a.label << ": " << ws.quiver.vertices[a.src] << " -> "
               << ws.quiver.vertices[a.tgt] << "\n";
    }
    if (!ws.relation_texts.empty()) {
        os << "relations:\n";
        for (const auto& r : ws.relation_texts) os << "  " << r << "\n";
    }
    for (const auto& m : ws.modules) {
        os << "module " << m.name << ":\n  dim:";
        for (auto d : m.dims) os << " " << d;
        os << "\n";
        for (const auto& [label, mat] : m.arrow_matrices) {
            os << "  arrow " << label << ":";
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                os << (i ? " ;" : "");
                for (std::size_t j = 0; j < mat.cols(); ++j)
                    os << " " << ws.field.to_string(mat.at(i, j));
            }
            os << "\n";
        }
    }
    os << "U: " << ws.u_kind;
    if (ws.u_kind == "module") os << " " << ws.u_name;
    os << "\n";
    return os.str();
}

namespace {

/// Action matrices of every algebra basis element on a representation given
/// by arrow matrices. Vertices act as block projections, arrows as their
/// blocks, and longer paths are resolved by factoring each basis element as
/// a product of an arrow and a shorter basis element in the algebra itself,
/// so the module convention always matches the algebra convention.
std::vector<Matrix> representation_actions(const FDAlgebra::Ptr& a, const ModuleSpec& spec) {
    const Field& f = a->field();
    const auto& info = a->path_info();
    if (!info) throw std::invalid_argument("named modules need a path algebra");
    const Quiver& q = info->quiver;
    std::vector<std::size_t> offset(q.vertices.size() + 1, 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) offset[v + 1] = offset[v] + spec.dims[v];
    std::size_t total = offset.back();

    auto unit_vec = [&](std::size_t i) {
        Matrix e = Matrix::zero(f, a->dim(), 1);
        e.at(i, 0) = f.one();
        return e;
    };

    std::vector<Matrix> acts(a->dim());
    std::vector<bool> done(a->dim(), false);
    std::vector<std::size_t> arrows_at;  // basis index per length-1 label
    for (std::size_t i = 0; i < a->dim(); ++i) {
        if (info->path_length[i] == 0) {
            // vertex idempotent: identity on its component
            std::size_t v = 0;
            while (v < q.vertices.size() && "e_" + q.vertices[v] != a->basis_labels()[i]) ++v;
            if (v == q.vertices.size())
                throw std::invalid_argument("unrecognized idempotent label");
            Matrix m = Matrix::zero(f, total, total);
            for (std::size_t t = 0; t < spec.dims[v]; ++t)
                m.at(offset[v] + t, offset[v] + t) = f.one();
            acts[i] = std::move(m);
            done[i] = true;
        } else if (info->path_length[i] == 1) {
            std::size_t idx = 0;
            while (idx < q.arrows.size() && q.arrows[idx].label != a->basis_labels()[i]) ++idx;
            if (idx == q.arrows.size()) throw std::invalid_argument("unrecognized arrow label");
            Matrix m = Matrix::zero(f, total, total);
            auto it = spec.arrow_matrices.find(q.arrows[idx].label);
            if (it != spec.arrow_matrices.end() && it->second.rows() > 0 && it->second.cols() > 0)
                m.set_block(offset[q.arrows[idx].tgt], offset[q.arrows[idx].src], it->second);
            acts[i] = std::move(m);
            done[i] = true;
            arrows_at.push_back(i);
        }
    }
    for (std::size_t len = 2; true; ++len) {
        bool any = false;
        for (std::size_t i = 0; i < a->dim(); ++i) {
            if (done[i] || info->path_length[i] != len) continue;
            any = true;
            bool found = false;
            for (std::size_t j : arrows_at) {
                for (std::size_t k = 0; k < a->dim() && !found; ++k) {
                    if (!done[k] || info->path_length[k] + 1 != len) continue;
                    if (a->multiply(unit_vec(j), unit_vec(k)) == unit_vec(i)) {
                        acts[i] = acts[j] * acts[k];
                        found = true;
                    } else if (a->multiply(unit_vec(k), unit_vec(j)) == unit_vec(i)) {
                        acts[i] = acts[k] * acts[j];
                        found = true;
                    }
                }
                if (found) break;
            }
            if (!found) throw std::runtime_error("basis path does not factor; corrupt algebra");
            done[i] = true;
        }
        if (!any) break;
    }
    return acts;
}

}  // namespace

BuiltWorkspace build_workspace(const WorkspaceFile& ws) {
    PathAlgebraPresentation p;
    p.quiver = ws.quiver;
    p.field = ws.field;
    for (std::size_t i = 0; i < ws.relation_texts.size(); ++i)
        p.relations.push_back(parse_relation(ws.relation_texts[i], ws.quiver, ws.field, i + 1));
    // the presented relations compose in function order; the workbench
    // algebra multiplies paths in application order, i.e. the opposite
    BuiltWorkspace out;
    out.algebra = build_path_algebra(p)->opposite();

    for (const auto& spec : ws.modules) {
        if (spec.dims.size() != ws.quiver.vertices.size())
            throw std::invalid_argument("module '" + spec.name + "' is missing its dim line");
        out.modules.emplace(spec.name,
                            FDModule::create(out.algebra, representation_actions(out.algebra, spec)));
    }

    if (ws.u_kind == "regular")
        out.u = regular_module(out.algebra);
    else if (ws.u_kind == "dual-regular")
        out.u = k_dual(regular_module(out.algebra->opposite()));
    else
        out.u = out.modules.at(ws.u_name);
    return out;
}

}  // namespace homwb
