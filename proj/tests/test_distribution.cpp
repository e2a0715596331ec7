#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "actinfo/distribution.hpp"
#include "support/generators.hpp"

using namespace actinfo;

namespace {
bool fails_with(Errc code, const auto& fn) {
    try {
        fn();
    } catch (const ValidationError& e) {
        return e.code() == code;
    }
    return false;
}
}  // namespace

TEST_CASE("construction validates mass and labels") {
    const FiniteDistribution ber(FiniteDistribution::bernoulli(0.5));
    CHECK(ber.probs() == std::vector<double>{0.5, 0.5});

    CHECK(fails_with(Errc::NotNormalized, [] {
        FiniteDistribution({"a", "b", "c"}, {0.3, 0.3, 0.3});
    }));
    CHECK(fails_with(Errc::NegativeMass, [] {
        FiniteDistribution({"a", "b"}, {1.0 + 1e-11, -1e-11});
    }));
    CHECK(fails_with(Errc::DuplicateLabel, [] {
        FiniteDistribution({"a", "a"}, {0.5, 0.5});
    }));
    CHECK(fails_with(Errc::LengthMismatch, [] {
        FiniteDistribution({"a"}, {0.5, 0.5});
    }));
    CHECK(fails_with(Errc::EmptySpace, [] { FiniteDistribution({}, {}); }));

    // zero-mass outcomes are legal; sub-tolerance negatives clamp to zero
    const FiniteDistribution point({"a", "b"}, {1.0, 0.0});
    CHECK(point.prob(1) == 0.0);
    CHECK_FALSE(point.fully_supported());
    const FiniteDistribution noisy({"a", "b"}, {1.0, -5e-13});
    CHECK(noisy.prob(1) == 0.0);
}

TEST_CASE("renormalization happens only on request") {
    // within construction tolerance but not an exact unit mass
    const FiniteDistribution rough({"a", "b", "c"}, {0.5, 0.25, 0.25 + 5e-10});
    double sum = 0.0;
    for (double p : rough.probs()) sum += p;
    CHECK(sum != 1.0);

    const FiniteDistribution exact = rough.normalized();
    double fixed = 0.0;
    for (double p : exact.probs()) fixed += p;
    CHECK(fixed == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(exact.labels() == rough.labels());
}

TEST_CASE("uniform") {
    CHECK(FiniteDistribution::uniform(2).probs() == std::vector<double>{0.5, 0.5});
    CHECK(FiniteDistribution::uniform(4).probs() == std::vector<double>(4, 0.25));
    CHECK(FiniteDistribution::uniform(1).probs() == std::vector<double>{1.0});
    CHECK(fails_with(Errc::EmptySpace, [] { FiniteDistribution::uniform(0); }));
}

TEST_CASE("bernoulli") {
    CHECK(FiniteDistribution::bernoulli(0.25).probs() == std::vector<double>{0.75, 0.25});
    CHECK(FiniteDistribution::bernoulli(0.25).labels() == std::vector<std::string>{"0", "1"});
    CHECK_THROWS_AS(FiniteDistribution::bernoulli(1.1), ValidationError);
    CHECK_THROWS_AS(FiniteDistribution::bernoulli(-0.1), ValidationError);
}

TEST_CASE("product spaces") {
    const auto two = product({FiniteDistribution::bernoulli(0.5),
                              FiniteDistribution::bernoulli(0.5)});
    CHECK(two.size() == 4);
    for (double p : two.probs()) CHECK(p == doctest::Approx(0.25));
    CHECK(two.labels() ==
          std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});

    // hand-multiplied masses, first component most significant
    const auto mixed = product({FiniteDistribution::bernoulli(0.2),
                                FiniteDistribution::bernoulli(0.3)});
    CHECK(mixed.probs()[0] == doctest::Approx(0.56).epsilon(1e-12));
    CHECK(mixed.probs()[1] == doctest::Approx(0.24).epsilon(1e-12));
    CHECK(mixed.probs()[2] == doctest::Approx(0.14).epsilon(1e-12));
    CHECK(mixed.probs()[3] == doctest::Approx(0.06).epsilon(1e-12));

    // a single component passes through unchanged
    const auto single = product({FiniteDistribution::uniform(3)});
    CHECK(single.labels() == FiniteDistribution::uniform(3).labels());
    CHECK(single.probs() == FiniteDistribution::uniform(3).probs());

    CHECK(fails_with(Errc::ProductSpaceTooLarge, [] {
        const auto u = FiniteDistribution::uniform(100);
        product({u, u, u, u});
    }));
    CHECK(fails_with(Errc::EmptySpace, [] { product({}); }));
}

TEST_CASE("product distributions stay normalized") {
    gen::Rng rng(2024);
    std::uniform_int_distribution<std::size_t> size_dist(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<FiniteDistribution> parts;
        const std::size_t k = size_dist(rng);
        for (std::size_t i = 0; i < k; ++i)
            parts.push_back(gen::distribution_of(
                gen::random_probs_with_zeros(rng, size_dist(rng) + 1, 0.2)));
        const auto prod = product(parts);
        double sum = 0.0;
        for (double p : prod.probs()) sum += p;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("events") {
    const Event e({3, 1, 3}, 5);  // unsorted with a duplicate
    CHECK(e.indices() == std::vector<std::size_t>{1, 3});
    CHECK(e.count() == 2);
    CHECK(e.contains(3));
    CHECK_FALSE(e.contains(0));
    CHECK(e.complement().indices() == std::vector<std::size_t>{0, 2, 4});
    CHECK(Event::full(3).count() == 3);
    CHECK(Event::empty(3).is_empty());
    CHECK(fails_with(Errc::IndexOutOfBounds, [] { Event({5}, 5); }));
}

TEST_CASE("event probability") {
    const auto u4 = FiniteDistribution::uniform(4);
    CHECK(event_probability(u4, Event({0, 1}, 4)) == doctest::Approx(0.5));
    CHECK(event_probability(u4, Event::empty(4)) == 0.0);
    CHECK(event_probability(FiniteDistribution::bernoulli(0.25), Event({1}, 2)) ==
          doctest::Approx(0.25));
    CHECK(fails_with(Errc::SpaceMismatch,
                     [&] { event_probability(u4, Event({0}, 5)); }));
}

TEST_CASE("event and complement probabilities sum to one") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 16);
        const auto dist = gen::distribution_of(gen::random_probs_with_zeros(rng, n, 0.25));
        const Event ev(gen::random_event_indices(rng, n), n);
        const double total =
            event_probability(dist, ev) + event_probability(dist, ev.complement());
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("coarsening") {
    const auto u10 = FiniteDistribution::uniform(10);
    const auto c = coarsen(u10, Event({0}, 10));
    CHECK(c.labels() == std::vector<std::string>{"T", "Tc"});
    CHECK(c.probs()[0] == doctest::Approx(0.1));
    CHECK(c.probs()[1] == doctest::Approx(0.9));

    const auto full = coarsen(u10, Event::full(10));
    CHECK(full.probs()[0] == 1.0);
    CHECK(full.probs()[1] == 0.0);

    const auto ber = coarsen(FiniteDistribution::bernoulli(0.25), Event({1}, 2));
    CHECK(ber.probs()[0] == doctest::Approx(0.25));

    // P(T) is preserved exactly through the coarsening
    gen::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 12);
        const auto dist = gen::distribution_of(gen::random_probs(rng, n));
        const Event ev(gen::random_event_indices(rng, n), n);
        const auto binary = coarsen(dist, ev);
        CHECK(event_probability(binary, Event({0}, 2)) == event_probability(dist, ev));
    }
}

TEST_CASE("merging two spaces") {
    const FiniteDistribution p1({"a", "b"}, {0.4, 0.6});
    const FiniteDistribution p2({"b", "c"}, {0.9, 0.1});
    const auto [m1, m2] = merge_spaces(p1, p2);
    CHECK(m1.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(m1.probs() == std::vector<double>{0.4, 0.6, 0.0});
    CHECK(m2.probs() == std::vector<double>{0.0, 0.9, 0.1});

    // identical label sets pass through unchanged
    const auto [s1, s2] = merge_spaces(p1, p1);
    CHECK(s1.labels() == p1.labels());
    CHECK(s1.probs() == p1.probs());

    const FiniteDistribution qa({"a"}, {1.0});
    const FiniteDistribution qb({"b"}, {1.0});
    const auto [e1, e2] = merge_spaces(qa, qb);
    CHECK(e1.probs() == std::vector<double>{1.0, 0.0});
    CHECK(e2.probs() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("merging preserves every original event") {
    // brute force: for every subset of the original space, the extended
    // distribution must give the same probability to the same labels
    gen::Rng rng(13);
    const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f",
                                           "g", "h", "i", "j", "k", "l"};
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n1 = 1 + static_cast<std::size_t>(rng() % 8);
        const std::size_t n2 = 1 + static_cast<std::size_t>(rng() % 8);
        const std::size_t offset = rng() % 4;  // overlap control
        std::vector<std::string> labels1(pool.begin(), pool.begin() + n1);
        std::vector<std::string> labels2(pool.begin() + offset,
                                         pool.begin() + std::min(offset + n2, pool.size()));
        const FiniteDistribution p1(labels1, gen::random_probs(rng, labels1.size()));
        const FiniteDistribution p2(labels2, gen::random_probs(rng, labels2.size()));
        const auto [m1, m2] = merge_spaces(p1, p2);

        auto check_all_subsets = [](const FiniteDistribution& original,
                                    const FiniteDistribution& merged) {
            const std::size_t n = original.size();
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                long double direct = 0.0L;
                std::vector<std::size_t> merged_indices;
                for (std::size_t i = 0; i < n; ++i) {
                    if (!(mask & (1u << i))) continue;
                    direct += original.probs()[i];
                    for (std::size_t j = 0; j < merged.size(); ++j)
                        if (merged.labels()[j] == original.labels()[i])
                            merged_indices.push_back(j);
                }
                const double extended = merged_indices.empty()
                                            ? 0.0
                                            : event_probability(
                                                  merged, Event(merged_indices, merged.size()));
                CHECK(extended ==
                      doctest::Approx(static_cast<double>(direct)).epsilon(1e-12));
            }
        };
        check_all_subsets(p1, m1);
        check_all_subsets(p2, m2);
    }
}

TEST_CASE("specification events") {
    const std::vector<double> f = {1.0, 5.0, 3.0};
    CHECK(specification_event(f, 3.0).indices() == std::vector<std::size_t>{1, 2});
    CHECK(specification_event(f, -1e18).count() == 3);
    CHECK(specification_event(f, 100.0).is_empty());
}

TEST_CASE("remapping events through labels") {
    const FiniteDistribution p1({"x", "y"}, {0.5, 0.5});
    const FiniteDistribution p2({"y", "z"}, {0.5, 0.5});
    const auto [m1, m2] = merge_spaces(p1, p2);
    const Event original({1}, 2);  // "y" in p1's order
    const Event remapped = remap_event(original, p1.labels(), m1);
    CHECK(event_probability(m1, remapped) == doctest::Approx(0.5));
    CHECK(m1.labels()[remapped.indices()[0]] == "y");
}

TEST_CASE("product events match product distributions") {
    gen::Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = 2 + static_cast<std::size_t>(rng() % 3);
        std::vector<FiniteDistribution> parts;
        std::vector<Event> events;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng() % 3);
            parts.push_back(gen::distribution_of(gen::random_probs(rng, n)));
            events.emplace_back(gen::random_event_indices(rng, n), n);
        }
        const auto joint = product(parts);
        const auto joint_event = product_event(events);
        double expected = 1.0;
        for (std::size_t i = 0; i < k; ++i)
            expected *= event_probability(parts[i], events[i]);
        CHECK(event_probability(joint, joint_event) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}
