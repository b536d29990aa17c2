#ifndef HOMWB_SAMPLE_HPP
#define HOMWB_SAMPLE_HPP

#include "homwb/module.hpp"

namespace homwb {

struct SampleOptions {
    unsigned long seed = 1;
    std::size_t size = 30;        // target number of modules
    std::size_t dim_bound = 6;    // per-module dimension bound
    std::size_t syzygy_depth = 2;
};

/// A reproducible test family over one algebra: structural modules (simples,
/// resolution terms, tops, radicals, syzygies) padded with random submodule
/// spins and random extensions. Identical options give identical families.
struct SampleFamily {
    unsigned long seed = 1;
    std::vector<FDModule> modules;
    std::vector<Morphism> monos;                // sampled injective maps
    std::vector<ShortExactSequence> sequences;  // sampled short exact sequences
};

SampleFamily sample_family(const FDAlgebra::Ptr& a, const SampleOptions& opts = {});

}  // namespace homwb

#endif
