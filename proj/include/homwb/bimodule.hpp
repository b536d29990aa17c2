#ifndef HOMWB_BIMODULE_HPP
#define HOMWB_BIMODULE_HPP

#include <string>

#include "homwb/resolution.hpp"

namespace homwb {

/// Bimodule data for U with Gamma = End of U as a left module. Gamma acts on
/// the right of U by u . gamma = gamma(u), so the algebra product
/// gamma1 * gamma2 is "gamma1 followed by gamma2" on U.
struct BimoduleContext {
    FDAlgebra::Ptr lambda;
    FDAlgebra::Ptr gamma;
    FDModule u;        // left lambda-module
    FDModule u_right;  // same space as a left module over gamma->opposite()
    std::vector<Matrix> end_basis;  // gamma basis as endomorphism matrices of u

    bool lambda_natural_iso = false;  // Lambda -> End of U over Gamma bijective
    bool gamma_natural_iso = false;   // Gamma -> End of the left module bijective

    bool faithfully_balanced() const { return lambda_natural_iso && gamma_natural_iso; }
};

BimoduleContext end_algebra(const FDModule& u);

/// The same bimodule read from the Gamma side: the base becomes gamma^op
/// acting on u_right, and the new Gamma is its endomorphism algebra.
BimoduleContext flip(const BimoduleContext& ctx);

/// Hom_Lambda(U, x) as a left Gamma-module, (gamma . phi)(u) = phi(u . gamma).
FDModule hom_into_gamma(const BimoduleContext& ctx, const FDModule& x);
/// Functorial on maps, by postcomposition.
Morphism hom_into_gamma(const BimoduleContext& ctx, const Morphism& f);

/// Hom_Lambda(x, U) as a right Gamma-module (left over gamma->opposite()),
/// Gamma acting by postcomposition.
FDModule dual_wrt(const FDModule& x, const BimoduleContext& ctx);
/// Contravariant on maps: Hom(f, U): dual_wrt(to) -> dual_wrt(from).
Morphism dual_wrt(const Morphism& f, const BimoduleContext& ctx);

/// Ext^i_Lambda(m, U) with the same right Gamma-structure on cochains.
FDModule ext_module_wrt(const FDModule& m, const BimoduleContext& ctx, std::size_t i);
/// Ext^i(f, U) over Lambda: ext_module_wrt(to) -> ext_module_wrt(from),
/// computed through a chain-map lift between minimal resolutions.
Morphism ext_map_wrt(const Morphism& f, const BimoduleContext& ctx, std::size_t i);

/// The mirrored functors on right Gamma-modules b (given over gamma^op):
/// Hom over Gamma of (b, U) and Ext^i over Gamma of (b, U), both carrying
/// the left Lambda-structure from U.
FDModule hom_from_gamma(const BimoduleContext& ctx, const FDModule& b);
Morphism hom_from_gamma(const BimoduleContext& ctx, const Morphism& g);
FDModule ext_from_gamma(const BimoduleContext& ctx, const FDModule& b, std::size_t i);
Morphism ext_from_gamma_map(const BimoduleContext& ctx, const Morphism& g, std::size_t i);

/// f**, with endpoints built exactly as in evaluation_map.
Morphism double_dual_map(const Morphism& f, const BimoduleContext& ctx);

/// Cokernel of the dualized map of a minimal projective presentation
/// P_1 -> P_0 -> m -> 0; zero when m is projective.
FDModule transpose_wrt(const FDModule& m, const BimoduleContext& ctx);

struct EvaluationReport {
    FDModule double_dual;
    Morphism sigma;  // m -> m**, x |-> (f |-> f(x))
    bool torsionless = false;
    bool reflexive = false;
};
EvaluationReport evaluation_map(const FDModule& m, const BimoduleContext& ctx);

/// Least i with Ext^i(m, U) != 0.
InvariantValue grade_wrt(const FDModule& m, const BimoduleContext& ctx, std::size_t cap = 8);

/// Minimum of grade_wrt over every submodule of m (finite fields only).
InvariantValue strong_grade_bruteforce(const FDModule& m, const BimoduleContext& ctx,
                                       std::size_t cap = 8);

/// Largest j <= k with Ext^i over Gamma of (Tr_U m, U) zero for 1 <= i <= j.
std::size_t torsionfree_index(const FDModule& m, const BimoduleContext& ctx, std::size_t k);

struct USyzygyChain {
    bool found = false;
    std::string note;
    std::vector<FDModule> terms;  // X_0 .. X_{k-1}, each in add U
    std::vector<Morphism> maps;   // m -> X_0, then X_{i-1} -> X_i
};
/// Greedy search for an exact 0 -> m -> X_0 -> ... -> X_{k-1} with every
/// X_i in add U, via minimal left add-U-approximations. Sound, not
/// complete: failure is reported in-band, not as nonexistence.
USyzygyChain u_syzygy_search(const FDModule& m, const BimoduleContext& ctx, std::size_t k);

struct UChainSearch {
    bool found = false;
    std::size_t length = 0;
    std::string note;
};
/// Greedy search for 0 -> X_n -> ... -> X_0 -> e -> 0 with every X_i in
/// add U, via right add-U-approximations. A successful search gives an
/// upper bound witness for the U-lim dimension of e; failure is in-band.
UChainSearch u_lim_chain_search(const BimoduleContext& ctx, const FDModule& e, std::size_t bound);

struct WakamatsuReport {
    bool self_orthogonal_lambda = false;
    bool self_orthogonal_gamma = false;
    bool balanced = false;
    bool coresolution_found = false;  // corroborating add-U coresolution of the regular module
    bool certified = false;
    std::vector<std::size_t> ext_lambda;  // dim Ext^i(U,U) over lambda, i = 0..depth
    std::vector<std::size_t> ext_gamma;   // same over gamma
};
WakamatsuReport verify_wakamatsu(const BimoduleContext& ctx, std::size_t depth);

enum class Side { Left, Right };

struct UDominantReport {
    InvariantValue value;
    std::vector<bool> in_add_terms;       // per injective term of the resolution of U
    std::vector<bool> cogenerated_terms;  // cogeneration comparison log
};
/// Number of leading terms of the minimal injective resolution of U (left)
/// or of U over Gamma (right) lying in add U.
UDominantReport u_dominant_dimension(const BimoduleContext& ctx, Side side, std::size_t cap = 8);

/// Flat dimension over Gamma of Hom_Lambda(U, e); equals the U-lim
/// dimension of the injective e. Throws if e is not injective.
InvariantValue u_lim_dim_injective(const BimoduleContext& ctx, const FDModule& e,
                                   std::size_t cap = 8);

}  // namespace homwb

#endif
