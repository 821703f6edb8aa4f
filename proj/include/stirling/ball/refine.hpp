#ifndef STIRLING_BALL_REFINE_HPP
#define STIRLING_BALL_REFINE_HPP

#include <mpfr.h>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace stirling
{

/// Adaptive precision schedule: initial_bits, then growth times more, up to max_bits.
struct precision_policy {
    long initial_bits = 64;
    long max_bits = 16384;
    long growth = 2;

    void validate() const
    {
        if (initial_bits < 2 || max_bits < initial_bits || growth < 2) {
            throw std::invalid_argument("precision_policy: need 2 <= initial_bits <= max_bits and growth >= 2");
        }
    }

    /// Defaults, with STIRLING_MAX_BITS overriding the cap when set.
    static precision_policy from_environment()
    {
        precision_policy p;
        if (const char *cap = std::getenv("STIRLING_MAX_BITS"); cap != nullptr && *cap != '\0') {
            char *end = nullptr;
            const long v = std::strtol(cap, &end, 10);
            if (end == cap || *end != '\0' || v < p.initial_bits) {
                throw std::invalid_argument("STIRLING_MAX_BITS must be an integer >= " + std::to_string(p.initial_bits));
            }
            p.max_bits = v;
        }
        return p;
    }

    friend bool operator==(const precision_policy &, const precision_policy &) = default;
};

/// The adaptive loop hit max_bits without the predicate deciding.
/// An engineering outcome, not a verdict on the claim being checked.
struct precision_exhausted : std::runtime_error {
    long max_bits;

    explicit precision_exhausted(long bits)
        : std::runtime_error("precision exhausted at " + std::to_string(bits) + " bits"), max_bits(bits)
    {
    }
};

template <typename R>
struct refine_result {
    std::optional<R> value;
    long bits = 0;

    [[nodiscard]] bool decided() const noexcept
    {
        return value.has_value();
    }
};

/// Evaluates produce(bits) at each precision of the policy and hands the
/// result to decide(), which returns an engaged optional once it can answer.
///
/// produce must be monotone (more bits give nested or tighter enclosures);
/// otherwise raising precision is pointless and the loop just runs to the cap.
template <typename Producer, typename Decider>
auto refine_until(Producer &&produce, Decider &&decide, const precision_policy &policy)
{
    policy.validate();
    using produced_t = std::invoke_result_t<Producer &, mpfr_prec_t>;
    using optional_t = std::invoke_result_t<Decider &, const produced_t &>;
    using value_t = typename optional_t::value_type;
    refine_result<value_t> out;
    long bits = policy.initial_bits;
    while (true) {
        out.bits = bits;
        optional_t verdict = decide(produce(static_cast<mpfr_prec_t>(bits)));
        if (verdict) {
            out.value = std::move(verdict);
            return out;
        }
        if (bits >= policy.max_bits) {
            return out;
        }
        bits = bits > policy.max_bits / policy.growth ? policy.max_bits : bits * policy.growth;
    }
}

} // namespace stirling

#endif
