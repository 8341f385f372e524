// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/momentum.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qwalk {

Momentum Momentum::rational(int64_t p, int64_t q) {
    if (q <= 0 || p <= 0 || p >= q) {
        throw std::invalid_argument(
            "momentum fraction " + std::to_string(p) + "/" + std::to_string(q) + " must satisfy 0 < p/q < 1");
    }
    int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    return Momentum(Fraction{p, q}, -std::numbers::pi * static_cast<double>(p) / static_cast<double>(q));
}

Momentum Momentum::from_value(double value) {
    if (!(value > -std::numbers::pi && value < 0.0)) {
        throw std::invalid_argument("momentum value must lie strictly inside (-pi, 0)");
    }
    return Momentum(std::nullopt, value);
}

Momentum Momentum::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("momentum '" + std::string(text) + "' is not of the form p/q");
    }
    auto parse_int = [&](std::string_view part) {
        int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw std::invalid_argument("momentum '" + std::string(text) + "' is not of the form p/q");
        }
        return v;
    };
    return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

double Momentum::energy() const {
    return 2.0 * std::cos(value_);
}

bool Momentum::is(int64_t p, int64_t q) const {
    if (!fraction_) {
        return false;
    }
    int64_t g = std::gcd(p, q);
    return fraction_->p == p / g && fraction_->q == q / g;
}

std::string Momentum::str() const {
    if (fraction_) {
        return std::to_string(fraction_->p) + "/" + std::to_string(fraction_->q);
    }
    std::ostringstream out;
    out.precision(17);
    out << value_;
    return out.str();
}

bool Momentum::operator==(const Momentum &other) const {
    if (fraction_ && other.fraction_) {
        return *fraction_ == *other.fraction_;
    }
    return value_ == other.value_;
}

bool Momentum::operator<(const Momentum &other) const {
    if (fraction_ && other.fraction_) {
        // -p1/q1 < -p2/q2  <=>  p1 q2 > p2 q1
        return fraction_->p * other.fraction_->q > other.fraction_->p * fraction_->q;
    }
    return value_ < other.value_;
}

std::vector<Momentum> momentum_grid(int64_t q) {
    return momentum_grid(std::vector<int64_t>{q});
}

std::vector<Momentum> momentum_grid(const std::vector<int64_t> &denominators) {
    std::vector<Momentum> grid;
    for (int64_t q : denominators) {
        for (int64_t j = 1; j < q; j++) {
            grid.push_back(Momentum::rational(j, q));
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace qwalk
