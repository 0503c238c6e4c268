#ifndef IMPLACE_INSTANCE_GEN_HPP
#define IMPLACE_INSTANCE_GEN_HPP

#include <cstdint>
#include <string>

#include "implace/model.hpp"

namespace implace {

enum class GenMode {
    imp_feasible,  // satisfies the merge-placer condition by construction
    zds_feasible,  // satisfies the bipartition condition (hence both)
    adversarial,   // {n-1, 1 x (n-1)}: merge condition holds, bipartition fails
    unconstrained, // independent areas, no condition targeted
};

struct GenSpec {
    int n = 2;
    double lambda = 3.0;
    std::uint64_t seed = 0;
    GenMode mode = GenMode::imp_feasible;
    // Fraction of the mode's bound the generated ratios may approach, in
    // (0, 1]; 1 is the stress boundary. Constrained modes additionally
    // require ratio_spread * (lambda - 1) >= 1 so areas can stay sorted.
    double ratio_spread = 0.9;
};

const char *gen_mode_name(GenMode mode);

// Deterministic in the spec: same spec, byte-identical instance. Areas are
// built rear-to-front from s_n = 1; the circuit has area equal to the total
// with its ratio drawn within the shrunk legal band. Module factors are all
// spec.lambda; a netlist of n/2 random 2..5-pin nets is attached for
// wirelength smoke tests, and the generator name goes into the metadata.
Instance generate(const GenSpec &spec);

} // namespace implace

#endif
