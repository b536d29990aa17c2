#ifndef HOMWB_MODULE_HPP
#define HOMWB_MODULE_HPP

#include <optional>
#include <vector>

#include "homwb/algebra.hpp"

namespace homwb {

/// Finite-dimensional left module: one action matrix per algebra basis
/// element. Value type; copying is cheap at desk scale.
class FDModule {
public:
    FDModule() = default;

    /// Validates that the action is a unital algebra homomorphism.
    static FDModule create(FDAlgebra::Ptr a, std::vector<Matrix> action);
    /// Skips validation; for internally constructed modules.
    static FDModule unchecked(FDAlgebra::Ptr a, std::vector<Matrix> action);
    static FDModule zero(FDAlgebra::Ptr a);

    const FDAlgebra::Ptr& algebra() const { return a_; }
    const Field& field() const { return a_->field(); }
    std::size_t dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }

    const Matrix& act(std::size_t i) const { return act_[i]; }
    /// Action of an arbitrary algebra element (coordinate vector).
    Matrix act_of(const Matrix& x) const;

private:
    FDAlgebra::Ptr a_;
    std::vector<Matrix> act_;
    std::size_t dim_ = 0;
};

/// A module map; mat is (to.dim x from.dim).
struct Morphism {
    FDModule from, to;
    Matrix mat;

    /// Validates the intertwining relation on the algebra's generators.
    static Morphism create(FDModule from, FDModule to, Matrix mat);
    static Morphism unchecked(FDModule from, FDModule to, Matrix mat);
    static Morphism identity(const FDModule& m);
    static Morphism zero(const FDModule& from, const FDModule& to);

    Morphism compose_after(const Morphism& inner) const;  // this o inner
    bool is_mono() const;
    bool is_epi() const;
    bool is_iso() const;
};

/// Basis of Hom(m, n) as matrices (n.dim x m.dim); deterministic order.
std::vector<Matrix> hom_space(const FDModule& m, const FDModule& n);

struct SubQuotient {
    FDModule module;
    Morphism map;  // inclusion (for submodules) or projection (for quotients)
};

/// Restriction to an action-invariant subspace (columns of basis must be
/// linearly independent and invariant).
SubQuotient submodule(const FDModule& m, const Matrix& basis);
SubQuotient quotient_module(const FDModule& m, const Matrix& subspace_basis);

Morphism kernel_inclusion(const Morphism& f);
SubQuotient image_submodule(const Morphism& f);
SubQuotient cokernel_projection(const Morphism& f);

struct DirectSum {
    FDModule module;
    std::vector<Morphism> inclusions;
    std::vector<Morphism> projections;
};
DirectSum direct_sum(const std::vector<FDModule>& parts);

/// K-linear dual as a left module over the opposite algebra. Applying it
/// twice returns the identical representation.
FDModule k_dual(const FDModule& m);
/// Contravariant on maps: D(f): D(to) -> D(from).
Morphism k_dual(const Morphism& f);

/// Smallest invariant subspace containing the given column vectors.
Matrix spin(const FDModule& m, const Matrix& vectors);

/// rad(A) * m as a subspace (columns).
Matrix radical_subspace(const FDModule& m);
/// m / rad(A) m.
SubQuotient top(const FDModule& m);

struct Summand {
    FDModule module;
    Morphism inclusion;
    Morphism projection;
};
/// Full decomposition into indecomposables (idempotent lifting on End/rad).
std::vector<Summand> decompose(const FDModule& m, unsigned long seed = 1);

/// End(m) as a structure-constant algebra, with its basis of matrices.
std::pair<FDAlgebra::Ptr, std::vector<Matrix>> endomorphism_algebra(const FDModule& m);

/// Is id_x a sum of maps factoring through u, i.e. x in add(u)?
bool in_add(const FDModule& x, const FDModule& u);

/// Do the maps x -> u jointly embed x, i.e. is x cogenerated by u?
bool is_cogenerated_by(const FDModule& x, const FDModule& u);

/// All submodules (as canonical column bases, including 0 and m). Finite
/// prime fields only; dim() must not exceed the bound.
std::vector<Matrix> enumerate_submodules(const FDModule& m, std::size_t dim_bound = 6);

bool is_isomorphic(const FDModule& m, const FDModule& n, unsigned long seed = 1);
/// The witnessing isomorphism, when the search finds one.
std::optional<Morphism> find_isomorphism(const FDModule& m, const FDModule& n,
                                         unsigned long seed = 1);

/// Solve g = f o epi... the two one-sided factorization problems through a
/// given map, inside the relevant Hom space.
std::optional<Morphism> factor_through_epi(const Morphism& f, const Morphism& epi);
std::optional<Morphism> factor_through_mono(const Morphism& f, const Morphism& mono);

FDModule regular_module(const FDAlgebra::Ptr& a);

struct StandardModules {
    // aligned: simples[i] = top of projectives[i] = socle of injectives[i]
    std::vector<FDModule> simples;
    std::vector<FDModule> projectives;
    std::vector<FDModule> injectives;
};
const StandardModules& standard_modules(const FDAlgebra::Ptr& a);

struct ShortExactSequence {
    Morphism mono;  // A -> B
    Morphism epi;   // B -> C
    bool is_exact() const;
};

}  // namespace homwb

#endif
