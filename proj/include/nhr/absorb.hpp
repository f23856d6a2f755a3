#pragma once

#include "nhr/budget.hpp"
#include "nhr/graph.hpp"
#include "nhr/pattern.hpp"
#include "nhr/tiling.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nhr {

struct SwitcherCheck {
    bool ok = false;
    std::optional<Tiling> without_u;
    std::optional<Tiling> without_v;
};

/// Both S - u and S - v perfectly tileable. False (not an error) when
/// |S| - 1 is not a multiple of k.
SwitcherCheck verify_switcher(const SimpleGraph& s, int u, int v, const PatternGraph& h);

struct Switcher {
    SimpleGraph graph;
    int u = 0;
    int v = 1;
    Tiling without_u;
    Tiling without_v;
};

/// Two copies of H sharing k - 1 vertices; u = 0 and v = 1 take the place
/// of pattern vertex 0 in one copy each.
Switcher build_switcher(const PatternGraph& h);

/// Vertices 0..k-1 are the external set X, the rest is the core L_X.
struct LocalAbsorber {
    SimpleGraph graph;
    Mask external = 0;
    Mask core = 0;
    Tiling core_tiling;
    Tiling full_tiling;
};

LocalAbsorber build_local_absorber(const PatternGraph& h, int external_size);

/// Bipartite template on 7l vertices: X = [0, 2l), Y = [2l, 4l), Z = [4l, 7l).
struct Template {
    int ell = 0;
    SimpleGraph graph;

    Mask x() const { return low_bits(2 * ell); }
    Mask y() const { return low_bits(4 * ell) & ~x(); }
    Mask z() const { return low_bits(7 * ell) & ~low_bits(4 * ell); }
};

enum class TemplateMode { Random, Complete };

struct TemplateCheck {
    bool valid = false;
    std::optional<Mask> failing_subset;
    std::uint64_t subsets_checked = 0;
};

inline constexpr std::uint64_t kTemplateSubsetLimit = 1'000'000;

TemplateCheck verify_template(const Template& t);
Template build_template(int ell, int max_degree_cap, std::uint64_t seed, TemplateMode mode, int attempts = 64);

/// Maximum matching from `left[i]` (a set of right vertices) into the right
/// side. Entry i is the matched right vertex or -1.
std::vector<int> bipartite_matching(const std::vector<Mask>& left);

struct AbsorberWitness {
    Mask r = 0;
    Tiling tiling;
};

struct AbsorberCertificate {
    Mask a = 0;
    Mask u = 0;
    int r = 0;
    SimpleGraph pattern;
    std::string pattern_name;
    std::vector<AbsorberWitness> log;
    bool witnesses_stored = true;
};

struct AbsorberVerdict {
    std::optional<AbsorberCertificate> certificate;
    std::optional<Mask> failing;
    std::uint64_t subsets_checked = 0;

    bool holds() const { return certificate.has_value(); }
};

inline constexpr std::uint64_t kAbsorberSubsetLimit = 100'000;

/// Every R within U of size at most r, by size then in subset order; A and U
/// may overlap. Stops at the first R whose union with A has no H-tiling.
AbsorberVerdict verify_absorber(const SimpleGraph& host, Mask a, Mask u, int r, const PatternGraph& h,
                                std::uint64_t subset_limit = kAbsorberSubsetLimit, Budget* budget = nullptr);

struct AbsorberScale {
    int u_size = 6;
    int r = 1;
    int ell = 1;
    int template_cap = 2;
    /// Common-neighbourhood size demanded of every pair in the pool; 0 picks k.
    int drc_m = 0;
    /// Largest allowed |A|; 0 means N.
    int max_order = 0;
    Colour colour = Colour::Blue;
    std::uint64_t seed = 1;
    int attempts = 64;
};

struct AssembledAbsorber {
    AbsorberCertificate certificate;
    Mask pool = 0;
    int attempts_used = 0;
    std::vector<std::string> trace;
};

/// Desk-scale run of the general absorber construction in colour class
/// `scale.colour` of K, whose other class must be G-free.
AssembledAbsorber assemble_general_absorber(const TwoColouring& k, const PatternGraph& g, const PatternGraph& h,
                                            const AbsorberScale& scale);

struct AliasBank {
    /// Disjoint H-copies covering W_I and W_{H-I}.
    std::vector<Embedding> copies;
    /// I: independent pattern vertices whose images form W_I.
    Mask independent = 0;
    /// W_A.
    Mask bank = 0;
    /// Bank vertex -> W_I vertices it may replace.
    std::map<int, Mask> alias_of;
};

/// Removes X from W_I by alias substitution, then moves bank vertices into
/// tiles k at a time until fewer than k remain.
Tiling absorb_via_alias_bank(const SimpleGraph& host, const PatternGraph& h, const AliasBank& bank, Mask x,
                             Budget* budget = nullptr);

}  // namespace nhr
