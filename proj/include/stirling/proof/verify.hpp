#ifndef STIRLING_PROOF_VERIFY_HPP
#define STIRLING_PROOF_VERIFY_HPP

#include <stirling/proof/first_proof.hpp>
#include <stirling/proof/second_proof.hpp>

#include <array>
#include <future>
#include <optional>
#include <string_view>

namespace stirling
{

enum class verify_target { prop2, prop3, corollary3, prop4, prop5, theorem1_first, theorem1_second, all };

inline constexpr std::array<std::string_view, 8> verify_target_names{
    "prop2", "prop3", "corollary3", "prop4", "prop5", "theorem1-first", "theorem1-second", "all"};

inline std::string_view to_string(verify_target t)
{
    return verify_target_names[static_cast<std::size_t>(t)];
}

inline std::optional<verify_target> parse_verify_target(std::string_view s)
{
    for (std::size_t i = 0; i < verify_target_names.size(); ++i) {
        if (verify_target_names[i] == s) {
            return static_cast<verify_target>(i);
        }
    }
    return std::nullopt;
}

/// Runs one target. `all` runs both routes concurrently and merges them,
/// first route first.
inline proof_report verify(verify_target t, const proof_options &opts = {})
{
    switch (t) {
        case verify_target::prop2:
            return verify_prop2(opts);
        case verify_target::prop3:
            return verify_prop3(opts);
        case verify_target::corollary3:
            return verify_corollary3(opts);
        case verify_target::prop4:
            return verify_prop4(opts);
        case verify_target::prop5:
            return verify_prop5(opts);
        case verify_target::theorem1_first:
            return verify_theorem1_first(opts);
        case verify_target::theorem1_second:
            return verify_theorem1_second(opts);
        case verify_target::all: {
            auto second = std::async(std::launch::async, [&opts] { return verify_theorem1_second(opts); });
            proof_report r = verify_theorem1_first(opts);
            r.append(second.get());
            return r;
        }
    }
    return {};
}

} // namespace stirling

#endif
