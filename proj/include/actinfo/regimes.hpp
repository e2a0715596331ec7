// Knowledge regimes under a uniform baseline: a target of baseline
// probability p < 1/2 searched with informed probability q falls into one of
// three open regions (or two boundary lines) according to the signs of the
// active information log(q/p) and the coarsened conserved active information
// log[p(1-p)/(q(1-q))].

#pragma once

#include <string>

#include "actinfo/distribution.hpp"
#include "actinfo/ext_real.hpp"
#include "actinfo/log_base.hpp"

namespace actinfo {

enum class Regime {
    HarmfulToTarget,  // q < p:       target harder, system more ordered
    MildKnowledge,    // p < q < 1-p: target easier, system more disordered
    StrongKnowledge,  // q > 1-p:     target much easier and system more ordered
    BoundaryEqual,    // q = p
    BoundaryMirror,   // q = 1-p
};

const char* to_string(Regime regime) noexcept;
const char* interpretation(Regime regime) noexcept;

struct RegimeReport {
    double p = 0.0;
    double q = 0.0;
    Regime regime = Regime::BoundaryEqual;
    ExtReal active_info;
    ExtReal cai_coarsened;
    std::string interpretation;
};

// Boundary lines q = p and q = 1-p are detected within this tolerance.
inline constexpr double kRegimeBoundaryTol = 1e-12;

// The classification assumes a small target fraction; above this the
// "p well below 1/2" reading becomes a stretch and callers should warn.
inline constexpr double kTargetFractionWarnAbove = 0.1;

// Requires 0 < p < 1/2 and 0 <= q <= 1.
Regime classify_regime(double p, double q);

// Classification plus the two measure values on the binary partition.
RegimeReport regime_report(double p, double q, LogBase base = LogBase());

// Uniform-baseline convenience: p = |T|/N from the uniform distribution on
// p2's space, q = P2(T). Requires |T| < N/2 strictly.
RegimeReport regime_from_distributions(const FiniteDistribution& p2, const Event& target,
                                       LogBase base = LogBase());

}  // namespace actinfo
