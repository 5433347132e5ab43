// Copyright 2026 The qparadox Authors
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

#include "qparadox/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qparadox {

std::string_view perspective_name(Perspective p) {
    switch (p) {
        case Perspective::Global_G:
            return "Global_G";
        case Perspective::Local_A:
            return "Local_A";
        case Perspective::Local_B:
            return "Local_B";
    }
    return "?";
}

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::vector<std::pair<std::string, std::string>> details) {
    if (!(residual >= 0)) {
        throw ValidityError("residual of " + name + " must be a non-negative number");
    }
    return CheckReport{std::move(name), residual < tolerance, residual, std::move(details)};
}

bool all_passed(std::span<const CheckReport> reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport &r) { return r.passed; });
}

std::string format_real(double x) {
    if (x == 0) {
        x = 0;  // drop the sign of -0
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.10g", x);
    return buf;
}

std::string format_complex(Complex z) {
    // Parts that round to zero at 10 decimals print unsigned.
    double re = std::abs(z.real()) < 5e-11 ? 0.0 : z.real();
    double im = std::abs(z.imag()) < 5e-11 ? 0.0 : z.imag();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.10f%c%.10fi", re, im < 0 ? '-' : '+', std::abs(im));
    return buf;
}

std::string format_vector(const CVector &v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.dim(); k++) {
        if (k) {
            out += ", ";
        }
        out += format_complex(v[k]);
    }
    return out + ")";
}

std::string format_matrix(const CMatrix &m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); r++) {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); c++) {
            if (c) {
                out += ", ";
            }
            out += format_complex(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace qparadox
