#ifndef STIRLING_OUTCOME_HPP
#define STIRLING_OUTCOME_HPP

#include <string_view>

namespace stirling
{

/// Result of a certified check. undecided means the enclosures overlapped,
/// never that the claim is false.
enum class outcome { holds, fails, undecided };

inline std::string_view to_string(outcome o)
{
    switch (o) {
        case outcome::holds:
            return "holds";
        case outcome::fails:
            return "fails";
        case outcome::undecided:
            return "undecided";
    }
    return "";
}

} // namespace stirling

#endif
