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

#include "qwalk/q2.h"

#include <cmath>
#include <numbers>

namespace qwalk {

Q2Scalar &Q2Scalar::operator*=(const Q2Scalar &o) {
    // Separate temporaries: o may alias *this.
    mpq_class a = a_ * o.a_;
    a += 2 * b_ * o.b_;
    mpq_class b = a_ * o.b_;
    b += b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Q2Scalar Q2Scalar::inverse() const {
    // (a + b r)(a - b r) = a^2 - 2 b^2, nonzero unless a = b = 0 since r is irrational.
    mpq_class n = norm();
    if (sgn(n) == 0) {
        throw std::domain_error("inverse of zero in Q(sqrt2)");
    }
    return Q2Scalar(a_ / n, -b_ / n);
}

double Q2Scalar::to_double() const {
    return a_.get_d() + b_.get_d() * std::numbers::sqrt2;
}

int Q2Scalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sa == 0 ? sb : sa;
    }
    // Opposite signs: compare a^2 with 2 b^2.
    int cmp_result = cmp(a_ * a_, 2 * b_ * b_);
    return cmp_result > 0 ? sa : sb;
}

std::string Q2Scalar::str() const {
    std::string out = a_.get_str();
    if (sgn(b_) < 0) {
        out += "-" + mpq_class(-b_).get_str();
    } else {
        out += "+" + b_.get_str();
    }
    return out + "*sqrt2";
}

Q2Scalar Q2Scalar::parse(std::string_view text) {
    const std::string_view suffix = "*sqrt2";
    auto fail = [&]() {
        return std::invalid_argument("'" + std::string(text) + "' is not of the form a/b+c/d*sqrt2");
    };
    if (text.size() <= suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
        throw fail();
    }
    std::string_view body = text.substr(0, text.size() - suffix.size());
    // The separator is the last sign that is not the leading one.
    size_t split = std::string_view::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        throw fail();
    }
    try {
        mpq_class a(std::string(body.substr(0, split)));
        std::string irr(body.substr(split + 1));
        mpq_class b(irr);
        if (body[split] == '-') {
            b = -b;
        }
        return Q2Scalar(a, b);
    } catch (const std::invalid_argument &) {
        throw fail();
    }
}

Q2Complex Q2Complex::inverse() const {
    Q2Scalar n = abs2();
    if (n.is_zero()) {
        throw std::domain_error("inverse of zero in Q(sqrt2, i)");
    }
    Q2Scalar inv = n.inverse();
    return Q2Complex(re_ * inv, -im_ * inv);
}

Q2Vector q2_mat_vec(const Q2Matrix &m, const Q2Vector &v) {
    return mat_vec(m, v);
}

Q2Matrix q2_nullspace(const Q2Matrix &m) {
    if (m.empty()) {
        return {};
    }
    return nullspace(m, static_cast<int>(m[0].size()));
}

Q2Scalar cos_quarter_pi(long m) {
    static const Q2Scalar half_root(0, mpq_class(1, 2));
    switch (((m % 8) + 8) % 8) {
        case 0:
            return 1;
        case 1:
        case 7:
            return half_root;
        case 2:
        case 6:
            return 0;
        case 3:
        case 5:
            return -half_root;
        default:
            return -1;
    }
}

Q2Scalar sin_quarter_pi(long m) {
    return cos_quarter_pi(m - 2);
}

}  // namespace qwalk
