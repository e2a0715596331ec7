#include "actinfo/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace actinfo {

namespace {

void require_same_space(const FiniteDistribution& a, const FiniteDistribution& b) {
    if (!a.same_labels(b))
        throw ValidationError(Errc::SpaceMismatch,
                              "distributions live on different label sets; merge them first");
}

// Accumulates sum of log(num/den) terms in nats with the edge conventions:
// a 0/0 term contributes nothing, num>0=den forces +inf, num=0<den forces
// -inf, and a mix of the two infinities makes the whole sum Undefined.
struct LogRatioSum {
    double nats = 0.0;
    bool has_pos_inf = false;
    bool has_neg_inf = false;

    void add(double num, double den) noexcept {
        if (num == 0.0) {
            if (den != 0.0) has_neg_inf = true;
            return;
        }
        if (den == 0.0) {
            has_pos_inf = true;
            return;
        }
        nats += std::log(num) - std::log(den);
    }

    ExtReal result(LogBase base) const noexcept {
        if (has_pos_inf && has_neg_inf) return ExtReal::undefined();
        if (has_pos_inf) return ExtReal::pos_inf();
        if (has_neg_inf) return ExtReal::neg_inf();
        return ExtReal::finite(base.from_nats(nats));
    }
};

}  // namespace

ExtReal self_information(const FiniteDistribution& dist, const Event& target, LogBase base) {
    const double p = event_probability(dist, target);
    if (p == 0.0) return ExtReal::pos_inf();
    return ExtReal::finite(base.from_nats(-std::log(p)));
}

ExtReal active_information(const FiniteDistribution& p1, const FiniteDistribution& p2,
                           const Event& target, LogBase base) {
    require_same_space(p1, p2);
    const double p = event_probability(p1, target);
    const double q = event_probability(p2, target);
    if (p == 0.0 && q == 0.0) return ExtReal::finite(0.0);  // log(0/0) = 0 by continuity
    if (p == 0.0) return ExtReal::pos_inf();
    if (q == 0.0) return ExtReal::neg_inf();
    return ExtReal::finite(base.from_nats(std::log(q) - std::log(p)));
}

double entropy(const FiniteDistribution& dist, LogBase base) {
    double nats = 0.0;
    for (double p : dist.probs())
        if (p > 0.0) nats -= p * std::log(p);
    return base.from_nats(std::max(nats, 0.0));
}

ExtReal total_information(const FiniteDistribution& dist, LogBase base) {
    double nats = 0.0;
    for (double p : dist.probs()) {
        if (p == 0.0) return ExtReal::pos_inf();
        nats -= std::log(p);
    }
    return ExtReal::finite(base.from_nats(nats));
}

ExtReal conserved_active_information(const FiniteDistribution& p1, const FiniteDistribution& p2,
                                     LogBase base) {
    require_same_space(p1, p2);
    LogRatioSum sum;
    for (std::size_t i = 0; i < p1.size(); ++i) sum.add(p1.probs()[i], p2.probs()[i]);
    return sum.result(base);
}

ExtReal coarsened_cai(const FiniteDistribution& p1, const FiniteDistribution& p2,
                      const Event& target, LogBase base) {
    require_same_space(p1, p2);
    // Same term sequence conserved_active_information would see on the
    // coarsened pair, so the two routes agree bit-for-bit.
    const double p = event_probability(p1, target);
    const double q = event_probability(p2, target);
    LogRatioSum sum;
    sum.add(p, q);
    sum.add(1.0 - p, 1.0 - q);
    return sum.result(base);
}

ExtReal kl_divergence(const FiniteDistribution& pa, const FiniteDistribution& pb, LogBase base) {
    require_same_space(pa, pb);
    double nats = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double a = pa.probs()[i];
        if (a == 0.0) continue;  // 0 log(0/x) = 0, including x = 0
        const double b = pb.probs()[i];
        if (b == 0.0) return ExtReal::pos_inf();
        nats += a * (std::log(a) - std::log(b));
    }
    return ExtReal::finite(base.from_nats(std::max(nats, 0.0)));
}

double total_variation(const FiniteDistribution& p1, const FiniteDistribution& p2) {
    require_same_space(p1, p2);
    double l1 = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i) l1 += std::fabs(p2.probs()[i] - p1.probs()[i]);
    return std::min(0.5 * l1, 1.0);
}

ExtReal pinsker_bound(const FiniteDistribution& p1, const FiniteDistribution& p2,
                      LogBase /*base*/) {
    const ExtReal kl_nats = kl_divergence(p2, p1, LogBase::natural());
    if (!kl_nats.is_finite()) return ExtReal::pos_inf();
    return ExtReal::finite(std::sqrt(kl_nats.value() / 2.0));
}

std::pair<ExtReal, ExtReal> uniform_baseline_identity(const FiniteDistribution& p2, LogBase base) {
    if (!p2.fully_supported())
        throw ValidationError(Errc::NotFullySupported,
                              "the identity requires every outcome to have positive mass");
    const auto n = static_cast<double>(p2.size());
    const FiniteDistribution baseline = FiniteDistribution::uniform(p2.size());
    const ExtReal scaled_kl = kl_divergence(baseline, p2, base).scaled(n);
    const ExtReal cai = conserved_active_information(baseline, p2, base);
    return {scaled_kl, cai};
}

MeasureReport full_report(const FiniteDistribution& p1, const FiniteDistribution& p2,
                          const Event& target, LogBase base) {
    require_same_space(p1, p2);
    MeasureReport r;
    r.endogenous_info = self_information(p1, target, base);
    r.exogenous_info = self_information(p2, target, base);
    r.active_info = active_information(p1, p2, target, base);
    r.total_info_1 = total_information(p1, base);
    r.total_info_2 = total_information(p2, base);
    r.entropy_1 = entropy(p1, base);
    r.entropy_2 = entropy(p2, base);
    r.cai_full = conserved_active_information(p1, p2, base);
    r.cai_coarsened = coarsened_cai(p1, p2, target, base);
    r.kl_12 = kl_divergence(p1, p2, base);
    r.kl_21 = kl_divergence(p2, p1, base);
    r.tv = total_variation(p1, p2);
    r.pinsker_bound = pinsker_bound(p1, p2, base);
    r.base = base;

    auto fail = [](const std::string& what) {
        throw std::logic_error("measure report consistency check failed: " + what);
    };
    if (!(r.tv >= 0.0 && r.tv <= 1.0)) fail("tv outside [0,1]");
    if (r.kl_12.is_finite() && r.kl_12.value() < 0.0) fail("negative KL(P1||P2)");
    if (r.kl_21.is_finite() && r.kl_21.value() < 0.0) fail("negative KL(P2||P1)");
    if (r.pinsker_bound.is_finite() && r.pinsker_bound.value() < r.tv - 1e-12)
        fail("Pinsker bound below TV");
    if (r.total_info_1.is_finite() && r.total_info_2.is_finite()) {
        const ExtReal diff = r.total_info_2 - r.total_info_1;
        const double scale = std::max(1.0, std::fabs(diff.value()));
        if (!approx_equal(r.cai_full, diff, 1e-9 * scale))
            fail("cai_full disagrees with the total-information difference");
    }
    return r;
}

}  // namespace actinfo
