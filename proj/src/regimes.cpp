#include "actinfo/regimes.hpp"

#include <cmath>
#include <string>

namespace actinfo {

const char* to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::HarmfulToTarget: return "HarmfulToTarget";
        case Regime::MildKnowledge: return "MildKnowledge";
        case Regime::StrongKnowledge: return "StrongKnowledge";
        case Regime::BoundaryEqual: return "BoundaryEqual";
        case Regime::BoundaryMirror: return "BoundaryMirror";
    }
    return "?";
}

const char* interpretation(Regime regime) noexcept {
    switch (regime) {
        case Regime::HarmfulToTarget: return "Target harder, system more ordered";
        case Regime::MildKnowledge: return "Target easier, system more disordered";
        case Regime::StrongKnowledge:
            return "Target much easier AND system more ordered (jackpot)";
        case Regime::BoundaryEqual: return "Target unchanged, system equally ordered";
        case Regime::BoundaryMirror: return "Target easier, system equally ordered";
    }
    return "?";
}

Regime classify_regime(double p, double q) {
    if (!(p > 0.0 && p < 0.5))
        throw ValidationError(Errc::POutOfRange,
                              "p = " + std::to_string(p) + " must satisfy 0 < p < 1/2");
    if (!(q >= 0.0 && q <= 1.0))
        throw ValidationError(Errc::QOutOfRange,
                              "q = " + std::to_string(q) + " must lie in [0,1]");
    if (std::fabs(q - p) <= kRegimeBoundaryTol) return Regime::BoundaryEqual;
    if (std::fabs(q - (1.0 - p)) <= kRegimeBoundaryTol) return Regime::BoundaryMirror;
    if (q < p) return Regime::HarmfulToTarget;
    if (q > 1.0 - p) return Regime::StrongKnowledge;
    return Regime::MildKnowledge;
}

RegimeReport regime_report(double p, double q, LogBase base) {
    RegimeReport report;
    report.regime = classify_regime(p, q);
    report.p = p;
    report.q = q;
    report.interpretation = interpretation(report.regime);

    // active information log(q/p); p > 0 is guaranteed by the classifier
    report.active_info = (q == 0.0)
                             ? ExtReal::neg_inf()
                             : ExtReal::finite(base.from_nats(std::log(q) - std::log(p)));

    // binary-partition conserved active information log[p(1-p) / (q(1-q))]
    double nats = 0.0;
    bool inf = false;
    if (q == 0.0 || q == 1.0) {
        inf = true;  // numerator p(1-p) > 0, denominator 0
    } else {
        nats = (std::log(p) - std::log(q)) + (std::log(1.0 - p) - std::log(1.0 - q));
    }
    report.cai_coarsened = inf ? ExtReal::pos_inf() : ExtReal::finite(base.from_nats(nats));
    return report;
}

RegimeReport regime_from_distributions(const FiniteDistribution& p2, const Event& target,
                                       LogBase base) {
    if (target.space_size() != p2.size())
        throw ValidationError(Errc::SpaceMismatch, "target does not live on the given space");
    const std::size_t n = p2.size();
    if (2 * target.count() >= n)
        throw ValidationError(Errc::TargetTooLarge,
                              "|T| = " + std::to_string(target.count()) +
                                  " must be strictly below half of N = " + std::to_string(n));
    const double p = static_cast<double>(target.count()) / static_cast<double>(n);
    const double q = event_probability(p2, target);
    return regime_report(p, q, base);
}

}  // namespace actinfo
