#pragma once

#include <cstdint>
#include <optional>

#include "eggers/contact.hpp"

namespace eggers {

struct GermGenOptions {
    int max_branches = 5;
    int max_char_pairs = 2; // per branch
    int max_depth = 3;
};

/// Deterministic-from-seed valid germ.  Contacts are read off a random
/// ultrametric tree whose diameters respect the characteristic membership
/// rules, so the distance axioms, the contact compatibility and the
/// integrality of all pairwise intersection numbers hold by construction.
Germ random_germ(std::uint64_t seed, const GermGenOptions& opt = {});

enum class ProbeMode { transversal, tangent, branch, any };

/// A regular parameter with a valid placement against g.  Tangent attachments
/// are snapped to positions where every contact gives an integral
/// intersection number; when no such position exists the probe degrades to a
/// transversal one.  branch mode needs a smooth branch and yields nullopt
/// otherwise.
std::optional<ExternalBranch> random_probe(const Germ& g, std::uint64_t seed,
                                           ProbeMode mode = ProbeMode::any);

} // namespace eggers
