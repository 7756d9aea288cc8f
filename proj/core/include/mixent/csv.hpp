// Copyright 2026 The mixent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iomanip>
#include <locale>
#include <sstream>
#include <string>

namespace mixent {

/// Twelve significant digits, '.' decimal separator regardless of locale.
inline std::string csv_number(double x) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(12) << x;
    return out.str();
}

}  // namespace mixent
