// SPDX-License-Identifier: Apache-2.0
//
// rissim: system-level simulation of RIS-assisted mmWave vehicular links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "doctest.h"

#include "rissim/metrics.hpp"

using namespace rissim;

namespace
{

SampleLog losses(const std::vector<double> &pl, double tick = 1.0, const std::string &link = "l")
{
    SampleLog log;
    for (std::size_t i = 0; i < pl.size(); ++i)
        log.push_back({tick * static_cast<double>(i), link, Condition::los, PathKind::direct_los, pl[i], {}, 10.0});
    return log;
}

} // namespace

TEST_CASE("ECDF")
{
    const Ecdf e = ecdf({4, 2, 1, 2});
    CHECK(e.values() == std::vector<double>{1, 2, 4});
    CHECK(e.fractions() == std::vector<double>{0.25, 0.75, 1.0});
    CHECK(e.fraction_at(2) == 0.75);
    CHECK(e.fraction_at(1.999) == 0.25);
    CHECK(e.fraction_at(0.5) == 0.0);
    CHECK(e.fraction_at(100) == 1.0);
    CHECK(e.sample_count() == 4);

    const Ecdf flat = ecdf({3, 3, 3});
    CHECK(flat.values() == std::vector<double>{3});
    CHECK(flat.fractions() == std::vector<double>{1.0});

    CHECK_THROWS_AS(ecdf({}), EmptyInputError);
}

TEST_CASE("Outage fraction")
{
    CHECK(outage_fraction(losses({100, 150, 140}), 142) == doctest::Approx(1.0 / 3));
    CHECK(outage_fraction(losses({100, 120}), 142) == 0.0);
    CHECK(outage_fraction(losses({142, 142.000001}), 142) == 0.5);
    CHECK_THROWS_AS(outage_fraction({}, 142), EmptyInputError);
}

TEST_CASE("NLOS fraction")
{
    SampleLog log = losses({1, 2, 3, 4});
    CHECK(nlos_fraction(log) == 0.0);
    log[1].condition = Condition::nlos;
    log[2].condition = Condition::nlos;
    CHECK(nlos_fraction(log) == 0.5);
    for (auto &s : log)
        s.condition = Condition::nlos;
    CHECK(nlos_fraction(log) == 1.0);
    CHECK_THROWS_AS(nlos_fraction({}), EmptyInputError);
}

TEST_CASE("Gain area")
{
    const SampleLog base = losses({130, 130, 130, 130, 130, 130});
    CHECK(gain_area(base, base) == 0.0);
    CHECK(gain_area(base, losses({120, 120, 120, 120, 120, 120})) == doctest::Approx(50.0));
    CHECK(gain_area(base, losses({120, 135, 120, 120, 140, 120})) == doctest::Approx(30.0));
    CHECK(gain_area(losses({1, 1, 1}, 0.1), losses({0, 0, 0}, 0.1)) == doctest::Approx(0.2));

    CHECK_THROWS_AS(gain_area(base, losses({1, 2})), TimestampMismatchError);
    CHECK_THROWS_AS(gain_area(base, losses({1, 2, 3, 4, 5, 6}, 0.5)), TimestampMismatchError);
    CHECK_THROWS_AS(gain_area(base, losses({1, 2, 3, 4, 5, 6}, 1.0, "other")), TimestampMismatchError);
}

TEST_CASE("Gain area per link")
{
    SampleLog base, enh;
    for (int k = 0; k < 3; ++k)
    {
        const double t = k;
        base.push_back({t, "x", Condition::los, PathKind::direct_los, 120, {}, 1});
        base.push_back({t, "y", Condition::los, PathKind::direct_los, 130, {}, 1});
        enh.push_back({t, "x", Condition::los, PathKind::direct_los, 110, {}, 1});
        enh.push_back({t, "y", Condition::los, PathKind::direct_los, 129, {}, 1});
    }
    const auto by_link = gain_area_by_link(base, enh);
    CHECK(by_link.at("x") == doctest::Approx(20.0));
    CHECK(by_link.at("y") == doctest::Approx(2.0));
    CHECK(gain_area(base, enh) == doctest::Approx(22.0));
    CHECK(link_ids(base) == std::vector<std::string>{"x", "y"});
}

TEST_CASE("Summary")
{
    SampleLog log = losses({100, 150, 140});
    log[1].condition = Condition::nlos;
    const auto rows = summarize(log, 142);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].link_id == "l");
    CHECK(rows[1].link_id == "*");
    CHECK(rows[0].samples == 3);
    CHECK(rows[0].min_db == 100);
    CHECK(rows[0].max_db == 150);
    CHECK(rows[0].mean_db == doctest::Approx(130));
    CHECK(rows[0].outage_fraction == doctest::Approx(1.0 / 3));
    CHECK(rows[0].nlos_fraction == doctest::Approx(1.0 / 3));
}
