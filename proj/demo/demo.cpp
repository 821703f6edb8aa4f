// Walks through the main pieces: a certified theta_n, the envelopes around it,
// an exact sign certificate, and a short proof report.

#include <stirling/stirling.hpp>

#include <iostream>

int main()
{
    using namespace stirling;
    const precision_policy policy;

    for (unsigned long n : {1UL, 2UL, 3UL, 10UL, 1000UL}) {
        const ball t = theta(n, policy, make_rational(1, 1000000000));
        const auto [alpha, beta] = hirschhorn_bounds(n);
        std::cout << "theta_" << n << " = " << format_ball(t, 10) << "   in (" << alpha << ", " << beta << ")\n";
    }

    // 5n^2 - 11n - 11 has no root beyond 3.
    const polynomial p{rational(-11), rational(-11), rational(5)};
    std::cout << "\nroots of " << p << " in (3, 100): " << count_roots(p, rational(3), rational(100)) << '\n';

    const polynomial bracket{rational(20), rational(0), rational(-561), rational(-1455), rational(-1215), rational(-315)};
    const sign_certificate cert = certify_positive(bracket, make_rational(1, 7), positivity_strategy::companion);
    std::cout << bracket << " > 0 on " << "(0, 1/7]: " << to_string(cert.kind) << ", witness " << *cert.witness_value
              << ", replays " << std::boolalpha << replay(cert) << '\n';

    const proof_report r = verify_prop2();
    std::cout << '\n';
    for (const auto &s : r.steps) {
        std::cout << to_string(s.status) << "  " << s.id << "  " << s.claim << '\n';
    }
    return r.verified() ? 0 : 1;
}
