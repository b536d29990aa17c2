#ifndef HOMWB_WORKSPACE_HPP
#define HOMWB_WORKSPACE_HPP

#include <map>
#include <stdexcept>

#include "homwb/module.hpp"

namespace homwb {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// A named module given by a dimension vector and one matrix per arrow
/// (target-dimension x source-dimension blocks).
struct ModuleSpec {
    std::string name;
    std::vector<std::size_t> dims;
    std::map<std::string, Matrix> arrow_matrices;

    bool operator==(const ModuleSpec&) const = default;
};

/// Parsed form of a workspace file. Relation strings stay in the written
/// function-composition order: "b*a" means apply a, then b.
struct WorkspaceFile {
    Field field;
    Quiver quiver;
    std::vector<std::string> relation_texts;
    std::vector<ModuleSpec> modules;
    std::string u_kind = "regular";  // regular | dual-regular | module
    std::string u_name;              // set when u_kind == "module"

    bool operator==(const WorkspaceFile& o) const;
};

WorkspaceFile parse_workspace(const std::string& text);
std::string serialize_workspace(const WorkspaceFile& ws);

/// The algebra, the named modules, and the designated bimodule side U.
/// Paths act in application order: for the built algebra, the product of two
/// paths is "first path, then second path".
struct BuiltWorkspace {
    FDAlgebra::Ptr algebra;
    std::map<std::string, FDModule> modules;
    FDModule u;
};

BuiltWorkspace build_workspace(const WorkspaceFile& ws);

}  // namespace homwb

#endif
