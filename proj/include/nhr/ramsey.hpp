#pragma once

#include "nhr/absorb.hpp"
#include "nhr/budget.hpp"
#include "nhr/constructions.hpp"
#include "nhr/pattern.hpp"
#include "nhr/tiling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nhr {

/// "Contains `copies` disjoint copies of some member" in one colour.
struct RamseyTarget {
    std::vector<PatternGraph> members;
    int copies = 1;

    static RamseyTarget of(const PatternGraph& h, int copies = 1);
    static RamseyTarget family(const GraphFamily& f);
    std::string key() const;
    friend bool operator==(const RamseyTarget& a, const RamseyTarget& b) { return a.key() == b.key(); }
};

enum class EdgeOrder {
    Column,  // (0,1), (0,2), (1,2), (0,3), ...: vertex by vertex
    Row,     // lexicographic on (min endpoint, max endpoint)
};

struct RamseyOptions {
    EdgeOrder order = EdgeOrder::Column;
    /// Lex-leader pruning over adjacent vertex transpositions (column order only).
    bool symmetry_breaking = true;
    std::uint64_t budget = kDefaultNodeBudget;
    std::optional<Budget::Clock::time_point> deadline;
    int threads = 1;
};

struct AvoidResult {
    bool holds = true;
    std::optional<Tiling> witness;  // the packing found when violated
};

/// True iff the colour class contains no target.
AvoidResult colouring_avoids(const TwoColouring& col, const RamseyTarget& target, Colour colour,
                             Budget* budget = nullptr);

/// A colouring of K_n with no red `red` and no blue `blue`, or none when
/// the complete search proves there is none. Timeout if undecided.
std::optional<TwoColouring> find_avoiding_colouring(const RamseyTarget& red, const RamseyTarget& blue, int n,
                                                    const RamseyOptions& options = {},
                                                    std::uint64_t* nodes = nullptr);

struct RamseyQuery {
    RamseyTarget red;
    RamseyTarget blue;
    int n_lo = 0;
    int n_hi = 14;
    RamseyOptions options;
};

struct RamseyResult {
    bool exact = false;
    int value = 0;                // exact value, or lower end of the bracket
    std::optional<int> upper;     // upper end when bracketed and known
    TwoColouring lower_witness;   // avoids both targets on value−1 vertices
    std::uint64_t nodes = 0;
};

RamseyResult ramsey_search(const RamseyQuery& q);

/// Exact r(red, blue) over families when the search settles within n_hi.
std::optional<int> family_ramsey(const GraphFamily& red, const GraphFamily& blue, int n_hi = 10,
                                 const RamseyOptions& options = {});

using CriticalPartition = ColouringPartition;

enum class BulletStatus { Pass, Fail, Unverifiable };
const char* to_string(BulletStatus s);

struct BulletReport {
    int index = 0;
    BulletStatus status = BulletStatus::Pass;
    std::string detail;
};

struct CriticalReport {
    std::vector<BulletReport> bullets;
    /// Tie sweep bookkeeping: candidate (red, blue) copy pairs examined.
    std::uint64_t tie_candidates = 0;

    bool holds() const;
};

inline constexpr std::uint64_t kTieSweepLimit = 10'000'000;

/// The four structural bullets of a critical colouring. `r_of_h` is r(H)
/// when known (e.g. from the cache); otherwise a bounded search is tried.
CriticalReport verify_critical_structure(const TwoColouring& col, const CriticalPartition& part,
                                         const PatternGraph& h, std::optional<int> r_of_h = std::nullopt,
                                         Budget* budget = nullptr);

struct FormulaRecord {
    int k = 0;
    int alpha = 0;
    int n = 0;
    long long symmetric = 0;  // (2k - alpha) n
    bool special_case = false;
    std::optional<long long> special_prediction;
    std::optional<int> derived_ramsey;   // r(D(G), H)
    std::optional<long long> asymmetric;  // n|H| + r(D(G), H) - 1
    std::optional<int> sandwich_lower;
    std::optional<int> sandwich_upper;
    /// Fields left symbolic because a family number was out of desk reach.
    std::vector<std::string> symbolic;
};

/// Some vertex has its whole neighbourhood inside a maximum independent set.
bool special_case_applies(const SimpleGraph& h);

FormulaRecord evaluate_formulas(const PatternGraph& h, int n, const std::optional<PatternGraph>& g = std::nullopt,
                                const RamseyOptions& options = {});

struct Sandwich {
    int lower = 0;
    int upper = 0;
    bool tight() const { return lower == upper; }
};

/// r(D_c(H), D(H)) - 2 and r(D_c'(H), D'(H)) - 2. Undecidable when either
/// family number is out of desk reach.
Sandwich bounds_sandwich(const PatternGraph& h, const RamseyOptions& options = {});

struct PipelineStep {
    std::string id;
    std::string detail;
};

struct PipelineResult {
    std::vector<PipelineStep> trace;
    std::optional<std::string> failed_step;
    /// Blue copies found: C', the tiles of B', and the absorber tiling.
    Tiling tiling;
    int copies = 0;
};

/// Deterministic run of the asymmetric upper-bound argument in blue with
/// the certificate's A and reservoir B. `threshold` stands in for r(G, H).
PipelineResult run_asymmetric_pipeline(const TwoColouring& col, const PatternGraph& g, const PatternGraph& h,
                                       const AbsorberCertificate& absorber, int threshold, Budget* budget = nullptr);

}  // namespace nhr
