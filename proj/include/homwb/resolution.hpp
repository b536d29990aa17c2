#ifndef HOMWB_RESOLUTION_HPP
#define HOMWB_RESOLUTION_HPP

#include "homwb/module.hpp"

namespace homwb {

/// A homological dimension that may exceed the search cap.
struct InvariantValue {
    enum class Kind { Exact, AtLeast, Infinite, ZeroModule };
    Kind kind = Kind::Exact;
    std::size_t value = 0;

    static InvariantValue exact(std::size_t n) { return {Kind::Exact, n}; }
    static InvariantValue at_least(std::size_t n) { return {Kind::AtLeast, n}; }
    static InvariantValue infinite() { return {Kind::Infinite, 0}; }
    static InvariantValue zero_module() { return {Kind::ZeroModule, 0}; }

    bool is_exact() const { return kind == Kind::Exact; }
    /// Known to be <= n (zero module counts as vanishing everywhere).
    bool known_at_most(std::size_t n) const {
        return kind == Kind::ZeroModule || (kind == Kind::Exact && value <= n);
    }
    /// Known to be >= n.
    bool known_at_least(std::size_t n) const {
        if (kind == Kind::ZeroModule) return false;
        if (kind == Kind::Infinite) return true;
        return value >= n;
    }
    bool operator==(const InvariantValue&) const = default;
};

std::string to_string(const InvariantValue& v);

/// Minimal cover/envelope; map is the epi P -> m (resp. mono m -> E).
struct Cover {
    FDModule module;
    Morphism map;
};
Cover projective_cover(const FDModule& m);
Cover injective_envelope(const FDModule& m);

/// Projective case: maps[0]: terms[0] -> m, maps[i]: terms[i] -> terms[i-1].
/// Injective case: maps[0]: m -> terms[0], maps[i]: terms[i-1] -> terms[i].
/// Minimal by construction. terminated means the next term would be zero.
struct Resolution {
    FDModule target;
    std::vector<FDModule> terms;
    std::vector<Morphism> maps;
    bool terminated = false;
};
Resolution projective_resolution(const FDModule& m, std::size_t depth);
Resolution injective_resolution(const FDModule& m, std::size_t depth);

/// i-th syzygy from the minimal resolution (i = 0 returns m itself).
FDModule syzygy(const FDModule& m, std::size_t i);

/// Ext^i(m, n) with the cochain data needed to put extra structure on it:
/// hom_basis spans Hom(P_i, n); cocycles/coboundaries are coordinate columns.
struct ExtData {
    std::size_t dim = 0;
    std::vector<Matrix> hom_basis;
    Matrix cocycles;
    Matrix coboundaries;
    FDModule p_i;
};
ExtData ext_data(const FDModule& m, const FDModule& n, std::size_t i,
                 const Resolution* res = nullptr);
std::size_t ext_dim(const FDModule& m, const FDModule& n, std::size_t i);
/// All of Ext^0..Ext^max_i at the cost of one resolution.
std::vector<std::size_t> ext_dims(const FDModule& m, const FDModule& n, std::size_t max_i);
/// Same values from an injective resolution of n (independent route).
std::size_t ext_dim_via_injectives(const FDModule& m, const FDModule& n, std::size_t i);

/// dim of b tensor_A m for a right module b (left module over the opposite).
std::size_t tensor_dim(const FDModule& b, const FDModule& m);
std::size_t tor_dim(const FDModule& b, const FDModule& m, std::size_t i);

InvariantValue projective_dimension(const FDModule& m, std::size_t cap = 8);
InvariantValue injective_dimension(const FDModule& m, std::size_t cap = 8);
/// Equals projective dimension for finitely generated modules over an artin
/// algebra (flats are projective); kept as its own entry point for reporting.
InvariantValue flat_dimension(const FDModule& m, std::size_t cap = 8);

/// Least i with Ext^i(m, u) != 0.
InvariantValue grade_wrt(const FDModule& m, const FDModule& u, std::size_t cap = 8);

/// Number of leading terms of the minimal injective resolution of the
/// regular module that are projective.
InvariantValue dominant_dimension(const FDAlgebra::Ptr& a, std::size_t cap = 8);

}  // namespace homwb

#endif
