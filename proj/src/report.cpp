#include "homwb/report.hpp"

#include <sstream>

namespace homwb {

namespace {

using json = nlohmann::ordered_json;

json options_echo(const RunOptions& o) {
    json j;
    j["depth"] = o.depth;
    j["cap"] = o.cap;
    j["k"] = o.k;
    j["m"] = o.m;
    j["seed"] = o.seed;
    j["sample_size"] = o.sample_size;
    j["override_hypotheses"] = o.override_hypotheses;
    return j;
}

json resolution_entry(const Resolution& r, const char* op) {
    json j;
    j["op"] = op;
    std::vector<std::size_t> dims;
    for (const auto& t : r.terms) dims.push_back(t.dim());
    j["term_dimensions"] = dims;
    j["terminated"] = r.terminated;
    return j;
}

json inspect_body(const WorkspaceFile& ws, const BuiltWorkspace& bw) {
    json j;
    j["field"] = ws.field.is_finite()
                     ? "GF(" + std::to_string(ws.field.characteristic()) + ")"
                     : "Q";
    j["vertices"] = ws.quiver.vertices;
    json arrows = json::array();
    for (const auto& a : ws.quiver.arrows)
        arrows.push_back({{"label", a.label},
                          {"src", ws.quiver.vertices[a.src]},
                          {"tgt", ws.quiver.vertices[a.tgt]}});
    j["arrows"] = arrows;
    j["relations"] = ws.relation_texts;
    j["algebra_dimension"] = bw.algebra->dim();

    const StandardModules& sm = standard_modules(bw.algebra);
    json table = json::array();
    for (std::size_t v = 0; v < ws.quiver.vertices.size(); ++v)
        table.push_back({{"vertex", ws.quiver.vertices[v]},
                         {"simple", sm.simples[v].dim()},
                         {"projective", sm.projectives[v].dim()},
                         {"injective", sm.injectives[v].dim()}});
    j["standard_modules"] = {{"op", "standard_modules"}, {"table", table}};

    json mods = json::array();
    for (const auto& [name, m] : bw.modules)
        mods.push_back({{"name", name}, {"dimension", m.dim()}});
    j["modules"] = mods;

    json u = {{"kind", ws.u_kind}, {"dimension", bw.u.dim()}};
    if (ws.u_kind == "module") u["name"] = ws.u_name;
    j["U"] = u;
    return j;
}

json resolve_body(const BuiltWorkspace& bw, const RunOptions& o) {
    json out = json::array();
    auto emit = [&](const std::string& name, const FDModule& m) {
        json e;
        e["module"] = name;
        e["dimension"] = m.dim();
        e["projective"] = resolution_entry(projective_resolution(m, o.depth),
                                           "projective_resolution");
        e["injective"] = resolution_entry(injective_resolution(m, o.depth),
                                          "injective_resolution");
        out.push_back(std::move(e));
    };
    if (!o.module_name.empty()) {
        auto it = bw.modules.find(o.module_name);
        if (it == bw.modules.end())
            throw std::invalid_argument("no module named '" + o.module_name + "'");
        emit(it->first, it->second);
    } else {
        emit("regular", regular_module(bw.algebra));
        for (const auto& [name, m] : bw.modules) emit(name, m);
    }
    return json{{"resolutions", out}};
}

json invariants_body(const WorkspaceFile& ws, const BuiltWorkspace& bw, const RunOptions& o) {
    json j;
    const auto& a = bw.algebra;
    auto op_a = a->opposite();
    FDModule reg = regular_module(a);
    FDModule reg_op = regular_module(op_a);

    j["algebra_dimension"] = a->dim();
    j["dominant_dimension"] = {{"op", "dominant_dimension"},
                               {"cap", o.cap},
                               {"left", to_string(dominant_dimension(a, o.cap))},
                               {"right", to_string(dominant_dimension(op_a, o.cap))}};
    j["injective_dimension"] = {{"op", "injective_dimension"},
                                {"cap", o.cap},
                                {"left", to_string(injective_dimension(reg, o.cap))},
                                {"right", to_string(injective_dimension(reg_op, o.cap))}};

    // flat dimensions of the leading terms of the minimal injective
    // resolution of the regular module, on both sides
    std::size_t lead = std::min<std::size_t>(o.depth, 3);
    auto fd_profile = [&](const FDModule& r) {
        Resolution res = injective_resolution(r, lead ? lead - 1 : 0);
        json vals = json::array();
        for (const auto& t : res.terms)
            vals.push_back(to_string(flat_dimension(t, o.cap)));
        return vals;
    };
    j["injective_term_flat_dimensions"] = {{"op", "flat_dimension"},
                                           {"cap", o.cap},
                                           {"left", fd_profile(reg)},
                                           {"right", fd_profile(reg_op)}};

    const StandardModules& sm = standard_modules(a);
    json simples = json::array();
    for (std::size_t v = 0; v < sm.simples.size(); ++v)
        simples.push_back(
            {{"vertex", ws.quiver.vertices[v]},
             {"projective_dimension", to_string(projective_dimension(sm.simples[v], o.cap))},
             {"injective_dimension", to_string(injective_dimension(sm.simples[v], o.cap))},
             {"grade_wrt_U", to_string(grade_wrt(sm.simples[v], bw.u, o.cap))}});
    j["simples"] = {{"op", "projective_dimension/injective_dimension/grade_wrt"},
                    {"cap", o.cap},
                    {"table", simples}};

    if (!bw.modules.empty()) {
        json mods = json::array();
        for (const auto& [name, m] : bw.modules)
            mods.push_back(
                {{"name", name},
                 {"projective_dimension", to_string(projective_dimension(m, o.cap))},
                 {"injective_dimension", to_string(injective_dimension(m, o.cap))},
                 {"grade_wrt_U", to_string(grade_wrt(m, bw.u, o.cap))}});
        j["modules"] = mods;
    }
    return j;
}

json audit_to_json(const AuditReport& r) {
    json conds = json::array();
    for (const auto& c : r.conditions)
        conds.push_back({{"label", c.label},
                         {"verdict", to_string(c.verdict)},
                         {"evidence", c.evidence},
                         {"samples", c.sample_size}});
    return json{{"context", r.context_id},
                {"theorem", r.theorem_id},
                {"consistency", r.consistency},
                {"out_of_hypothesis", r.out_of_hypothesis},
                {"conditions", conds},
                {"notes", r.notes}};
}

json audit_body(const BuiltWorkspace& bw, const RunOptions& o, const std::string& digest,
                int& exit_code) {
    BimoduleContext ctx = end_algebra(bw.u);
    AuditOptions aopts;
    aopts.context_id = digest.substr(0, 8);
    aopts.cap = o.cap;
    aopts.override_certification = o.override_hypotheses;

    SampleOptions so;
    so.seed = o.seed;
    so.size = o.sample_size;

    AuditReport r;
    if (o.theorem == "1")
        r = audit_theorem_I(ctx, o.k, sample_family(bw.algebra, so), aopts);
    else if (o.theorem == "2")
        r = audit_theorem_II(ctx, o.k, sample_family(bw.algebra, so), aopts);
    else if (o.theorem == "dd")
        r = audit_double_dual(ctx, sample_family(bw.algebra, so), aopts);
    else if (o.theorem == "gen")
        r = audit_generalized_gorenstein(ctx, o.k, sample_family(bw.algebra, so), aopts);
    else if (o.theorem == "transfer")
        r = audit_transfer(ctx, o.m, o.k, aopts);
    else if (o.theorem == "injdim")
        r = audit_injective_dimensions(ctx, o.cap, aopts);
    else
        throw std::invalid_argument("unknown theorem '" + o.theorem +
                                    "' (expected 1, 2, dd, gen, transfer, or injdim)");
    if (r.consistency != "consistent") exit_code = 4;
    return json{{"audit", audit_to_json(r)}};
}

void render(std::ostream& os, const json& j, int indent) {
    std::string pad(2 * indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !v[0].is_primitive())) {
                os << pad << k << ":\n";
                render(os, v, indent + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            os << pad << "-\n";
            render(os, v, indent + 1);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string fnv1a_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
    return os.str();
}

ReportDocument run_command(const std::string& command, const std::string& workspace_text,
                           const RunOptions& opts) {
    ReportDocument doc;
    doc.command = command;
    doc.input_digest = fnv1a_digest(workspace_text);

    WorkspaceFile ws = parse_workspace(workspace_text);
    BuiltWorkspace bw = build_workspace(ws);

    doc.body["options"] = options_echo(opts);
    if (command == "inspect")
        doc.body.update(inspect_body(ws, bw));
    else if (command == "resolve")
        doc.body.update(resolve_body(bw, opts));
    else if (command == "invariants")
        doc.body.update(invariants_body(ws, bw, opts));
    else if (command == "audit")
        doc.body.update(audit_body(bw, opts, doc.input_digest, doc.exit_code));
    else
        throw std::invalid_argument("unknown command '" + command + "'");
    return doc;
}

std::string to_json(const ReportDocument& doc) {
    json j;
    j["version"] = doc.version;
    j["schema"] = doc.schema;
    j["command"] = doc.command;
    j["input_digest"] = doc.input_digest;
    j["report"] = doc.body;
    return j.dump(2) + "\n";
}

std::string to_text(const ReportDocument& doc, double elapsed_seconds) {
    std::ostringstream os;
    os << doc.version << " (schema " << doc.schema << ")\n";
    os << "command: " << doc.command << "\n";
    os << "input digest: " << doc.input_digest << "\n";
    render(os, doc.body, 0);
    os << "elapsed: " << elapsed_seconds << " s\n";
    return os.str();
}

}  // namespace homwb
