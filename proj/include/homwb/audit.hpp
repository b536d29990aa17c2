#ifndef HOMWB_AUDIT_HPP
#define HOMWB_AUDIT_HPP

#include "homwb/bimodule.hpp"
#include "homwb/sample.hpp"

namespace homwb {

/// Sampled verdicts are never promoted to holds; a witnessed failure on a
/// sample is a plain fails, since the witness is exact.
enum class Verdict { Holds, Fails, SampledConsistent, Vacuous };
std::string to_string(Verdict v);

struct ConditionEntry {
    std::string label;
    Verdict verdict = Verdict::Vacuous;
    std::string evidence;         // numeric profiles, witnesses, chain lengths
    std::size_t sample_size = 0;  // nonzero only for sampled conditions
};

/// One theorem audit over one context. consistency stays "consistent" unless
/// conditions declared equivalent received opposite exact verdicts, in which
/// case it starts with "REFUTATION" and names both conditions.
struct AuditReport {
    std::string context_id;
    std::string theorem_id;
    std::vector<ConditionEntry> conditions;  // sorted by label
    std::string consistency = "consistent";
    bool out_of_hypothesis = false;
    std::vector<std::string> notes;
};

struct AuditOptions {
    std::string context_id = "unnamed";
    std::size_t cap = 8;          // resolution depth cap for dimensions
    std::size_t chain_bound = 4;  // greedy add-U chain search bound
    bool override_certification = false;
};

/// Dominant-dimension package: U-dom.dim both sides, flatness of the leading
/// Hom(U, E_i), and sampled strong grades of first Ext, at level k.
AuditReport audit_theorem_I(const BimoduleContext& ctx, std::size_t k,
                            const SampleFamily& family, const AuditOptions& opts = {});

/// k-Gorenstein package: lim dimensions and flat dimensions of the injective
/// terms at most i, sampled strong grades at least i, and mono-preservation
/// of the level-i double-Ext functors, on both sides.
AuditReport audit_theorem_II(const BimoduleContext& ctx, std::size_t k,
                             const SampleFamily& family, const AuditOptions& opts = {});

/// Double-dual package: mono-preservation against dominant dimension at
/// least 1, left-exactness and first double-Ext vanishing against dominant
/// dimension at least 2, and the torsionless-target refinement.
AuditReport audit_double_dual(const BimoduleContext& ctx, const SampleFamily& family,
                              const AuditOptions& opts = {});

/// Shifted (non-symmetric) Gorenstein package: lim and flat dimensions of
/// E_i at most i+1, sampled grades, torsionless mono preservation, and the
/// extension-closure consequence for syzygy categories.
AuditReport audit_generalized_gorenstein(const BimoduleContext& ctx, std::size_t k,
                                         const SampleFamily& family,
                                         const AuditOptions& opts = {});

/// Left-right transfer: from a left fd profile up to m-1 and right fd bounds
/// through m+k-1, conclude the left fd bounds at m..m+k-1. Hypotheses and
/// conclusion are checked exactly; unmet hypotheses make the conclusion
/// vacuous, never a claim.
AuditReport audit_transfer(const BimoduleContext& ctx, std::size_t m, std::size_t k,
                           const AuditOptions& opts = {});

/// Injective dimension bookkeeping: l.id(U) and r.id(U) directly and via the
/// flat dimension of Hom into the full injective cogenerator, the cogenerator
/// property of the leading injective terms, and the dimension equalities that
/// hold when everything is finite.
AuditReport audit_injective_dimensions(const BimoduleContext& ctx, std::size_t cap,
                                       const AuditOptions& opts = {});

}  // namespace homwb

#endif
