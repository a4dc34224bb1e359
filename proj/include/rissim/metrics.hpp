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

#ifndef RISSIM_METRICS_HPP
#define RISSIM_METRICS_HPP

#include "rissim/samples.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{

class EmptyInputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class TimestampMismatchError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Right-continuous empirical CDF over distinct sample values.
class Ecdf
{
public:
    explicit Ecdf(std::vector<double> samples); // throws EmptyInputError

    const std::vector<double> &values() const { return values_; }
    const std::vector<double> &fractions() const { return fractions_; }
    std::size_t sample_count() const { return n_; }

    // (count <= v) / n
    double fraction_at(double v) const;

private:
    std::vector<double> values_;
    std::vector<double> fractions_;
    std::size_t n_ = 0;
};

Ecdf ecdf(std::vector<double> values);

std::vector<double> path_losses(const SampleLog &log);
SampleLog filter_link(const SampleLog &log, const std::string &link_id);
// Link ids in order of first appearance.
std::vector<std::string> link_ids(const SampleLog &log);

// Fraction of samples with selected loss strictly above the budget.
double outage_fraction(const SampleLog &log, double budget_db);
// Fraction of samples whose direct path is NLOS.
double nlos_fraction(const SampleLog &log);

// Left Riemann sum of max(0, baseline - enhanced) over each link's ticks, in dB*s, summed over links.
// Both logs must list the same (t, link) pairs in the same order.
double gain_area(const SampleLog &baseline, const SampleLog &enhanced);
std::map<std::string, double> gain_area_by_link(const SampleLog &baseline, const SampleLog &enhanced);

struct LinkSummary
{
    std::string link_id; // "*" pools all links
    std::size_t samples = 0;
    double outage_fraction = 0.0;
    double nlos_fraction = 0.0;
    double min_db = 0.0;
    double max_db = 0.0;
    double mean_db = 0.0;
};

// One entry per link in order of first appearance, followed by the pooled "*" entry.
std::vector<LinkSummary> summarize(const SampleLog &log, double budget_db);

} // namespace rissim

#endif
