// Information functionals over finite distributions: self-information of an
// event, active information between a baseline and an informed distribution,
// Shannon entropy, total information (the unweighted sum of outcome
// surprisals), conserved active information (its difference), KL divergence,
// total variation, and the Pinsker bound relating the two.
//
// Conventions, applied uniformly:
//   * log(0/0) is taken as 0 by continuity, per term in the unweighted sums
//     and per event in active information;
//   * a term log(x/0) with x > 0 is +inf, log(0/x) is -inf;
//   * an unweighted sum mixing +inf and -inf terms is Undefined;
//   * everything is computed in natural log and converted to the display
//     base once at the end.

#pragma once

#include <utility>

#include "actinfo/distribution.hpp"
#include "actinfo/ext_real.hpp"
#include "actinfo/log_base.hpp"

namespace actinfo {

// -log P(T). +inf when the event has zero mass.
ExtReal self_information(const FiniteDistribution& dist, const Event& target,
                         LogBase base = LogBase());

// log [P2(T) / P1(T)]: information gained about T by searching with p2
// instead of the baseline p1. Zero when both probabilities vanish.
ExtReal active_information(const FiniteDistribution& p1, const FiniteDistribution& p2,
                           const Event& target, LogBase base = LogBase());

// Shannon entropy -sum p log p, with 0 log 0 = 0. Always finite.
double entropy(const FiniteDistribution& dist, LogBase base = LogBase());

// Total information -sum_x log p(x): the unweighted surprisal mass of the
// whole system. +inf whenever some outcome has zero probability.
ExtReal total_information(const FiniteDistribution& dist, LogBase base = LogBase());

// Conserved active information: the change in total information when p1 is
// replaced by p2, equal to the unweighted sum of log [p1(x)/p2(x)].
// Positive means sustaining p2 needs information injected from outside;
// negative means the system redistributes what it already has.
ExtReal conserved_active_information(const FiniteDistribution& p1, const FiniteDistribution& p2,
                                     LogBase base = LogBase());

// Conserved active information of the binary coarsening {T, Tc}:
// log [p(1-p) / (q(1-q))] with p = P1(T), q = P2(T). Agrees exactly with
// conserved_active_information(coarsen(p1,T), coarsen(p2,T)).
ExtReal coarsened_cai(const FiniteDistribution& p1, const FiniteDistribution& p2,
                      const Event& target, LogBase base = LogBase());

// D(pa || pb) = sum pa log(pa/pb), +inf when pa charges an outcome pb does
// not. Nonnegative; zero iff the distributions agree entrywise.
ExtReal kl_divergence(const FiniteDistribution& pa, const FiniteDistribution& pb,
                      LogBase base = LogBase());

// sup_A |P2(A) - P1(A)| = half the L1 distance of the mass vectors.
double total_variation(const FiniteDistribution& p1, const FiniteDistribution& p2);

// Pinsker bound sqrt(KL(p2||p1)/2) on total_variation(p1,p2). The divergence
// is taken in nats regardless of the display base (the inequality's constant
// is base-dependent); the base parameter is accepted for signature symmetry.
ExtReal pinsker_bound(const FiniteDistribution& p1, const FiniteDistribution& p2,
                      LogBase base = LogBase());

// Two independent routes to the same quantity under a uniform baseline on
// N = |p2| outcomes: (N * KL(uniform || p2), conserved active information of
// uniform vs p2). The pair must agree; both sides are returned so callers
// can check. Requires p2 fully supported.
std::pair<ExtReal, ExtReal> uniform_baseline_identity(const FiniteDistribution& p2,
                                                      LogBase base = LogBase());

// Everything at once, for reporting.
struct MeasureReport {
    ExtReal endogenous_info;   // -log P1(T)
    ExtReal exogenous_info;    // -log P2(T)
    ExtReal active_info;       // log [P2(T)/P1(T)]
    ExtReal total_info_1;
    ExtReal total_info_2;
    double entropy_1 = 0.0;
    double entropy_2 = 0.0;
    ExtReal cai_full;          // conserved active information on the full space
    ExtReal cai_coarsened;     // same, on the binary partition {T, Tc}
    ExtReal kl_12;             // D(P1 || P2)
    ExtReal kl_21;             // D(P2 || P1)
    double tv = 0.0;
    ExtReal pinsker_bound;     // sqrt(KL(P2||P1)/2), nats
    LogBase base;
};

// Computes every field and enforces the internal consistency checks
// (tv in [0,1], finite KL >= 0, Pinsker bound >= tv, and cai_full equal to
// the difference of total informations when both are finite).
MeasureReport full_report(const FiniteDistribution& p1, const FiniteDistribution& p2,
                          const Event& target, LogBase base = LogBase());

}  // namespace actinfo
