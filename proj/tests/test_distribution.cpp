#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "prd/distribution.hpp"
#include "prd/errors.hpp"

using prd::DiscreteDistribution;

TEST_CASE("valid weights are accepted unchanged") {
    DiscreteDistribution d({0.25, 0.75});
    CHECK(d.size() == 2);
    CHECK(d[0] == 0.25);
    CHECK(d[1] == 0.75);
}

TEST_CASE("construction rejects invalid weights") {
    CHECK_THROWS_AS(DiscreteDistribution(std::vector<double>{}), prd::DomainError);
    CHECK_THROWS_AS(DiscreteDistribution({0.5, 0.6}), prd::DomainError);
    CHECK_THROWS_AS(DiscreteDistribution({1.5, -0.5}), prd::DomainError);
    CHECK_THROWS_AS(DiscreteDistribution({std::numeric_limits<double>::quiet_NaN(), 1.0}),
                    prd::DomainError);
    // Inside the 1e-9 tolerance.
    CHECK_NOTHROW(DiscreteDistribution({0.5, 0.5 + 5e-10}));
}

TEST_CASE("normalized rescales counts") {
    auto d = DiscreteDistribution::normalized({1.0, 3.0, 0.0});
    CHECK(d[0] == doctest::Approx(0.25));
    CHECK(d[1] == doctest::Approx(0.75));
    CHECK(d[2] == 0.0);
    CHECK_THROWS_AS(DiscreteDistribution::normalized({0.0, 0.0}), prd::DomainError);
}

TEST_CASE("support uses the 1e-12 threshold") {
    DiscreteDistribution d({1.0 - 1e-13, 1e-13});
    CHECK(d.in_support(0));
    CHECK_FALSE(d.in_support(1));
}

TEST_CASE("factory helpers") {
    auto pm = DiscreteDistribution::point_mass(3, 1);
    CHECK(pm[1] == 1.0);
    CHECK_THROWS_AS(DiscreteDistribution::point_mass(3, 3), prd::DomainError);
    const std::size_t support[] = {0, 2};
    auto u = DiscreteDistribution::uniform_on(4, support);
    CHECK(u[0] == 0.5);
    CHECK(u[1] == 0.0);
    CHECK(u[2] == 0.5);
}
