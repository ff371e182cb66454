/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cmath>
#include <random>

#include "thzfh/units.hpp"

using namespace thzfh;

TEST_CASE("db conversions") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    // -48 dBm as milliwatts
    CHECK(db_to_linear(-48.0) == doctest::Approx(1.5849e-5).epsilon(1e-4));
    CHECK_THROWS_AS(db_to_linear(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(linear_to_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_to_db(-1.0), std::invalid_argument);
}

TEST_CASE("db round trip over the working range") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-200.0, 200.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        CHECK(linear_to_db(db_to_linear(x)) == doctest::Approx(x).epsilon(0).scale(1e-9));
    }
}
