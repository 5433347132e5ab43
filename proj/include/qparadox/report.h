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

#ifndef QPARADOX_REPORT_H
#define QPARADOX_REPORT_H

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qparadox/qcore.h"

namespace qparadox {

enum class Perspective { Global_G, Local_A, Local_B };

std::string_view perspective_name(Perspective p);

/// Outcome of one named verification. `passed` is always
/// `residual < tolerance`; use make_report to keep that true.
struct CheckReport {
    std::string name;
    bool passed;
    double residual;
    std::vector<std::pair<std::string, std::string>> details;

    bool operator==(const CheckReport &) const = default;
};

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::vector<std::pair<std::string, std::string>> details = {});

bool all_passed(std::span<const CheckReport> reports);

/// 10 significant digits, e.g. "0.7071067812", "0.000000000", "1.000000000e-17".
std::string format_real(double x);
/// Fixed 10 decimals per part, e.g. "0.7071067812+0.0000000000i".
std::string format_complex(Complex z);
/// "(a, b, ...)" using format_complex.
std::string format_vector(const CVector &v);
/// "[[a, b], [c, d]]" using format_complex.
std::string format_matrix(const CMatrix &m);

}  // namespace qparadox

#endif
