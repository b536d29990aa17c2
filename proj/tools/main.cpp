// homwb: homological workbench for finite-dimensional quiver algebras.
// Exit codes: 0 ok, 2 workspace parse error, 3 hypothesis/certification
// failure, 4 audited refutation.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homwb/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological workbench for quiver path algebras"};
    app.require_subcommand(1);

    std::string workspace_path, format = "text";
    homwb::RunOptions opts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("workspace", workspace_path, "workspace file")->required();
        cmd->add_option("--depth", opts.depth, "resolution depth");
        cmd->add_option("--cap", opts.cap, "dimension search cap");
        cmd->add_option("--seed", opts.seed, "sampling seed");
        cmd->add_option("--sample-size", opts.sample_size, "sampled module count");
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return cmd;
    };

    add_common(app.add_subcommand("inspect", "algebra and module overview"));
    auto* resolve = add_common(app.add_subcommand("resolve", "minimal (co)resolutions"));
    resolve->add_option("--module", opts.module_name, "resolve only this named module");
    add_common(app.add_subcommand("invariants", "homological dimension tables"));
    auto* audit = add_common(app.add_subcommand("audit", "theorem condition audits"));
    audit->add_option("--theorem", opts.theorem, "1 | 2 | dd | gen | transfer | injdim")
        ->required();
    audit->add_option("--k", opts.k, "theorem level");
    audit->add_option("--m", opts.m, "transfer audit offset");
    audit->add_flag("--override-hypotheses", opts.override_hypotheses,
                    "run even on uncertified contexts");

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    try {
        auto t0 = std::chrono::steady_clock::now();
        std::string text = slurp(workspace_path);
        homwb::ReportDocument doc = homwb::run_command(command, text, opts);
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (format == "json" ? homwb::to_json(doc) : homwb::to_text(doc, elapsed));
        return doc.exit_code;
    } catch (const homwb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
