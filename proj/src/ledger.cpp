#include "nhr/ledger.hpp"

#include "nhr/error.hpp"

namespace nhr {

namespace {

    unsigned floor_log2(BigInt x)
    {
        unsigned r = 0;
        while (x > 1) {
            x >>= 1;
            ++r;
        }
        return r;
    }

    bool is_power_of_two(const BigInt& x) { return x > 0 && (x & (x - 1)) == 0; }

    BigInt pow2(unsigned e) { return BigInt(1) << e; }

    BigInt ipow(BigInt base, unsigned e)
    {
        BigInt r = 1;
        while (e) {
            if (e & 1U) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

}  // namespace

std::pair<Rational, bool> log2_upper(const BigInt& x, unsigned bits)
{
    require(x >= 1, ErrorKind::Precondition, "log2 of a value below one");
    const unsigned whole = floor_log2(x);
    if (is_power_of_two(x)) return {Rational(whole), true};

    // y = x / 2^whole in [1, 2), fixed point with `precision` bits, rounded up
    // after every squaring so the extracted digits never fall below the truth.
    constexpr unsigned precision = 96;
    const BigInt one = pow2(precision);
    BigInt y = (x << precision) >> whole;
    if (((y << whole) >> precision) != x) y += 1;
    BigInt digits = 0;
    for (unsigned i = 0; i < bits; ++i) {
        BigInt sq = y * y;
        BigInt next = sq >> precision;
        if ((next << precision) != sq) next += 1;
        y = next;
        digits <<= 1;
        if (y >= 2 * one) {
            digits |= 1;
            BigInt half = y >> 1;
            if ((half << 1) != y) half += 1;
            y = half;
        }
    }
    // Truncated digits plus one unit in the last place bound log2 from above.
    return {Rational(whole) + Rational(digits + 1, pow2(bits)), false};
}

ParamLedger param_ledger(unsigned delta, const BigInt& k)
{
    require(delta >= 1, ErrorKind::Precondition, "ledger needs delta >= 1");
    require(k >= 1, ErrorKind::Precondition, "ledger needs k >= 1");
    ParamLedger p;
    p.delta = delta;
    p.k = k;
    const BigInt d = delta;

    p.gamma = Rational(1, 32 * d);
    p.epsilon = pow(p.gamma, 2 * delta) / Rational(pow2(11) * ipow(d, 4));

    auto [s, exact] = log2_upper(32 * d);
    p.s = s;
    p.s_exact = exact;
    p.s_ceiling = static_cast<unsigned>(ceil(s));
    p.beta = Rational(1) / (8 * p.s);

    p.m = pow2(90 * delta + 12) * ipow(d, 33 * delta + 6) * k;

    // ε, β < 1, so rounding s up (in base and exponents) only shrinks m0.
    const unsigned sc = p.s_ceiling;
    const Rational beta_low = exact ? p.beta : Rational(1) / (8 * Rational(sc));
    p.m0_coefficient = (p.gamma / 4) * pow(p.epsilon, sc - 1) * pow(beta_low, sc - 2);
    p.m0_exact = exact;

    p.ramsey_ub = pow2(84 * delta + 2) * ipow(d, 32 * delta) * k;

    const bool delta_pow2 = is_power_of_two(d);
    const unsigned lg = delta_pow2 ? floor_log2(d) : floor_log2(d) + 1;
    p.q = pow2(256 * delta * lg * lg) * k;
    p.q_exact = delta_pow2;
    return p;
}

std::vector<std::pair<std::string, std::string>> ParamLedger::fields() const
{
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
    return {
        {"delta", std::to_string(delta)},
        {"k", to_string(k)},
        {"gamma", to_string(gamma)},
        {"epsilon", to_string(epsilon)},
        {"s", to_string(s)},
        {"s_exact", flag(s_exact)},
        {"s_ceiling", std::to_string(s_ceiling)},
        {"beta", to_string(beta)},
        {"m", to_string(m)},
        {"m0_coefficient", to_string(m0_coefficient)},
        {"m0_exact", flag(m0_exact)},
        {"ramsey_ub", to_string(ramsey_ub)},
        {"q", to_string(q)},
        {"q_exact", flag(q_exact)},
    };
}

}  // namespace nhr
