#ifndef STIRLING_PROOF_REPORT_HPP
#define STIRLING_PROOF_REPORT_HPP

#include <stirling/ball/refine.hpp>
#include <stirling/exact/json.hpp>
#include <stirling/proof/check.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#ifndef STIRLING_VERSION
#define STIRLING_VERSION "1.0.0"
#endif

namespace stirling
{

enum class step_method { exact_polynomial, exact_ratfun, sign_certificate, ball_comparison };

inline std::string_view to_string(step_method m)
{
    switch (m) {
        case step_method::exact_polynomial:
            return "exact-polynomial";
        case step_method::exact_ratfun:
            return "exact-ratfun";
        case step_method::sign_certificate:
            return "sign-certificate";
        case step_method::ball_comparison:
            return "ball-comparison";
    }
    return "";
}

inline step_method step_method_from_string(std::string_view s)
{
    if (s == "exact-polynomial") {
        return step_method::exact_polynomial;
    }
    if (s == "exact-ratfun") {
        return step_method::exact_ratfun;
    }
    if (s == "sign-certificate") {
        return step_method::sign_certificate;
    }
    if (s == "ball-comparison") {
        return step_method::ball_comparison;
    }
    throw std::invalid_argument("unknown step method '" + std::string(s) + "'");
}

/// One machine-checked claim. witness["checks"] replays the status.
struct proof_step {
    std::string id;
    std::string claim;
    step_method method = step_method::exact_polynomial;
    step_status status = step_status::undecided;
    json witness;
    std::string paper_ref;
    // Informational steps are reported but do not affect the overall verdict.
    bool gating = true;

    [[nodiscard]] bool verified() const noexcept
    {
        return status == step_status::verified;
    }
};

/// Builds a step whose status is computed from its checks.
inline proof_step make_step(std::string id, std::string claim, step_method method, std::string ref, json check_list,
                            json extras = json::object())
{
    proof_step s;
    s.id = std::move(id);
    s.claim = std::move(claim);
    s.method = method;
    s.paper_ref = std::move(ref);
    s.status = check_list.empty() ? step_status::failed : evaluate_checks(check_list);
    s.witness = std::move(extras);
    s.witness["checks"] = std::move(check_list);
    return s;
}

/// Ordered steps plus exact constants derived along the way.
struct proof_report {
    std::vector<proof_step> steps;
    std::map<std::string, rational> derived_constants;
    precision_policy policy;

    [[nodiscard]] bool verified() const
    {
        for (const auto &s : steps) {
            if (s.gating && !s.verified()) {
                return false;
            }
        }
        return !steps.empty();
    }

    [[nodiscard]] const proof_step *find(std::string_view id) const
    {
        for (const auto &s : steps) {
            if (s.id == id) {
                return &s;
            }
        }
        return nullptr;
    }

    /// Appends another report's steps (skipping ids already present) and constants.
    void append(const proof_report &other)
    {
        std::set<std::string> seen;
        for (const auto &s : steps) {
            seen.insert(s.id);
        }
        for (const auto &s : other.steps) {
            if (seen.insert(s.id).second) {
                steps.push_back(s);
            }
        }
        for (const auto &[k, v] : other.derived_constants) {
            derived_constants.emplace(k, v);
        }
    }

    [[nodiscard]] bool any_undecided() const
    {
        for (const auto &s : steps) {
            if (s.gating && s.status == step_status::undecided) {
                return true;
            }
        }
        return false;
    }
};

inline json step_to_json(const proof_step &s)
{
    return json{{"id", s.id},
                {"claim", s.claim},
                {"method", std::string(to_string(s.method))},
                {"status", std::string(to_string(s.status))},
                {"witness", s.witness},
                {"paper_ref", s.paper_ref},
                {"gating", s.gating}};
}

inline proof_step step_from_json(const json &j)
{
    proof_step s;
    s.id = j.at("id").get<std::string>();
    s.claim = j.at("claim").get<std::string>();
    s.method = step_method_from_string(j.at("method").get<std::string>());
    s.status = step_status_from_string(j.at("status").get<std::string>());
    s.witness = j.at("witness");
    s.paper_ref = j.at("paper_ref").get<std::string>();
    s.gating = j.value("gating", true);
    return s;
}

/// Report document. nlohmann::json objects are key-sorted, so dump() is deterministic.
inline json report_to_json(const proof_report &r)
{
    json steps = json::array();
    for (const auto &s : r.steps) {
        steps.push_back(step_to_json(s));
    }
    json constants = json::object();
    for (const auto &[k, v] : r.derived_constants) {
        constants[k] = rational_to_json(v);
    }
    return json{{"tool_version", STIRLING_VERSION},
                {"policy",
                 {{"initial_bits", r.policy.initial_bits}, {"max_bits", r.policy.max_bits}, {"growth", r.policy.growth}}},
                {"steps", std::move(steps)},
                {"derived_constants", std::move(constants)},
                {"overall", r.verified() ? "verified" : "failed"}};
}

inline proof_report report_from_json(const json &j)
{
    proof_report r;
    for (const auto &s : j.at("steps")) {
        r.steps.push_back(step_from_json(s));
    }
    for (const auto &[k, v] : j.at("derived_constants").items()) {
        r.derived_constants.emplace(k, rational_from_json(v));
    }
    const json &p = j.at("policy");
    r.policy.initial_bits = p.at("initial_bits").get<long>();
    r.policy.max_bits = p.at("max_bits").get<long>();
    r.policy.growth = p.at("growth").get<long>();
    return r;
}

/// Re-runs every step's witness checks; returns the statuses in step order.
inline std::vector<step_status> replay(const proof_report &r)
{
    std::vector<step_status> out;
    out.reserve(r.steps.size());
    for (const auto &s : r.steps) {
        const json &list = s.witness.at("checks");
        out.push_back(list.empty() ? step_status::failed : evaluate_checks(list));
    }
    return out;
}

} // namespace stirling

#endif
