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

#ifndef QWALK_MOMENTUM_H
#define QWALK_MOMENTUM_H

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

/// A reduced fraction p/q with 0 < p/q < 1.
struct Fraction {
    int64_t p;
    int64_t q;

    bool operator==(const Fraction &) const = default;
};

/// An incoming momentum k in (-pi, 0).
///
/// Most momenta of interest are rational multiples of pi; those carry the exact
/// fraction p/q with k = -pi * p / q. Free-standing momenta only carry the value.
class Momentum {
   public:
    /// k = -pi * p / q. The fraction is reduced; throws unless 0 < p/q < 1.
    static Momentum rational(int64_t p, int64_t q);
    /// Throws unless value lies strictly inside (-pi, 0).
    static Momentum from_value(double value);
    /// Parses the "p/q" syntax meaning -pi * p / q.
    static Momentum parse(std::string_view text);

    double value() const {
        return value_;
    }
    /// E(k) = 2 cos k.
    double energy() const;
    const std::optional<Fraction> &fraction() const {
        return fraction_;
    }
    bool is_rational() const {
        return fraction_.has_value();
    }
    /// True iff this is exactly -pi * p / q.
    bool is(int64_t p, int64_t q) const;

    /// "p/q" for rational momenta, the decimal value otherwise.
    std::string str() const;

    bool operator==(const Momentum &other) const;
    /// Orders by value, most negative first.
    bool operator<(const Momentum &other) const;

   private:
    Momentum(std::optional<Fraction> fraction, double value) : fraction_(fraction), value_(value) {
    }

    std::optional<Fraction> fraction_;
    double value_;
};

/// {-pi j / q : j = 1..q-1}, reduced and deduplicated, sorted by value.
std::vector<Momentum> momentum_grid(int64_t q);

/// Union of several grids, sorted by value.
std::vector<Momentum> momentum_grid(const std::vector<int64_t> &denominators);

}  // namespace qwalk

#endif
