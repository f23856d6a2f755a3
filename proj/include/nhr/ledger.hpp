#pragma once

#include "nhr/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nhr {

/// Exact values of the named constants for a given (Δ, k).
///
/// When 32Δ is not a power of two, s is a dyadic upper bound on log2(32Δ)
/// with 32 fractional bits, and integer exponents use ⌈s⌉. Every field
/// that then stops being exact says so through its *_exact flag.
struct ParamLedger {
    unsigned delta = 0;
    BigInt k = 0;

    Rational gamma;    // 1/(32Δ)
    Rational epsilon;  // γ^{2Δ} / (2^11 Δ^4)
    Rational s;        // log2(32Δ)
    bool s_exact = true;
    unsigned s_ceiling = 0;
    Rational beta;      // 1/(8s)
    BigInt m;           // 2^{90Δ+12} Δ^{33Δ+6} k
    Rational m0_coefficient;  // (γ/4) ε^{s−1} β^{s−2}, the factor of N
    bool m0_exact = true;     // false: lower bound (exponents rounded up)
    BigInt ramsey_ub;   // 2^{84Δ+2} Δ^{32Δ} k
    BigInt q;           // 2^{256Δ log²Δ} k
    bool q_exact = true;      // false: upper bound via ⌈log2 Δ⌉

    /// Name/value pairs in a fixed order, values as exact decimal strings.
    std::vector<std::pair<std::string, std::string>> fields() const;
};

ParamLedger param_ledger(unsigned delta, const BigInt& k);

/// Upper bound on log2(x) with `bits` fractional bits; exact when x is a
/// power of two. Second member reports exactness.
std::pair<Rational, bool> log2_upper(const BigInt& x, unsigned bits = 32);

}  // namespace nhr
