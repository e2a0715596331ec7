#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actinfo/measures.hpp"
#include "actinfo/sweep.hpp"

using namespace actinfo;

TEST_CASE("grid validation") {
    auto validate = [](double lo, double hi, std::size_t steps) {
        SweepGrid{lo, hi, steps}.validate();
    };
    CHECK_THROWS_AS(validate(0.0, 0.9, 10), ValidationError);
    CHECK_THROWS_AS(validate(0.1, 1.0, 10), ValidationError);
    CHECK_THROWS_AS(validate(0.5, 0.4, 10), ValidationError);
    CHECK_THROWS_AS(validate(0.1, 0.9, 1), ValidationError);
    CHECK_NOTHROW(validate(0.01, 0.99, 2));

    const SweepGrid grid{0.1, 0.9, 5};
    CHECK(grid.point(0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(grid.point(4) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(grid.point(2) == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(bernoulli_curve(SweepKind::CaiSurface, grid), ValidationError);
    CHECK_THROWS_AS(bernoulli_surface(SweepKind::EntropyCurve, grid), ValidationError);
}

TEST_CASE("curves reproduce the pointwise measures") {
    const SweepGrid grid{0.01, 0.99, 99};
    const auto ti = bernoulli_curve(SweepKind::TotalInfoCurve, grid);
    const auto h = bernoulli_curve(SweepKind::EntropyCurve, grid);
    REQUIRE(ti.size() == 99);
    for (std::size_t i = 0; i < ti.size(); i += 7) {
        const auto ber = FiniteDistribution::bernoulli(ti[i].p);
        CHECK(ti[i].value == total_information(ber).value());
        CHECK(h[i].value == entropy(ber));
    }
    // the p = 0.5 row carries the landmark values
    CHECK(ti[49].p == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ti[49].value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(h[49].value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("surfaces reproduce the pointwise measures") {
    const SweepGrid grid{0.05, 0.95, 19};
    const auto cai = bernoulli_surface(SweepKind::CaiSurface, grid);
    const auto kl = bernoulli_surface(SweepKind::KlSurface, grid);
    REQUIRE(cai.size() == 19 * 19);
    for (std::size_t k = 0; k < cai.size(); k += 23) {
        const auto d1 = FiniteDistribution::bernoulli(cai[k].p);
        const auto d2 = FiniteDistribution::bernoulli(cai[k].q);
        CHECK(cai[k].value == conserved_active_information(d1, d2).value());
        CHECK(kl[k].value == kl_divergence(d1, d2).value());
    }
    // the diagonal is exactly zero; the frozen spot value sits at (0.25, 0.5)
    const std::size_t diag = 6 * 19 + 6;
    CHECK(cai[diag].p == cai[diag].q);
    CHECK(cai[diag].value == 0.0);
    const std::size_t spot = 4 * 19 + 9;  // p = 0.25, q = 0.5
    CHECK(cai[spot].p == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(cai[spot].q == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cai[spot].value == doctest::Approx(-0.4150374992788438).epsilon(1e-9));
}

TEST_CASE("parallel kernels match the serial references bit for bit") {
    const SweepGrid grid{0.02, 0.98, 83};
    for (SweepKind kind : {SweepKind::TotalInfoCurve, SweepKind::EntropyCurve}) {
        const auto par = bernoulli_curve(kind, grid);
        const auto ser = bernoulli_curve_serial(kind, grid);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].p == ser[i].p);
            CHECK(par[i].value == ser[i].value);
        }
    }
    for (SweepKind kind : {SweepKind::CaiSurface, SweepKind::KlSurface}) {
        const auto par = bernoulli_surface(kind, grid, LogBase::natural());
        const auto ser = bernoulli_surface_serial(kind, grid, LogBase::natural());
        REQUIRE(par.size() == ser.size());
        for (std::size_t k = 0; k < par.size(); ++k) {
            CHECK(par[k].p == ser[k].p);
            CHECK(par[k].q == ser[k].q);
            CHECK(par[k].value == ser[k].value);
        }
    }
}
