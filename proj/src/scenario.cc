// Copyright 2026 The Bellcone Authors
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

#include "bellcone/scenario.h"

#include <stdexcept>

namespace bellcone {

Scenario::Scenario(int m_a, int m_b, int d_a, int d_b)
    : m_a(m_a), m_b(m_b), d_a(d_a), d_b(d_b) {
    if (m_a < 1 || m_b < 1 || d_a < 1 || d_b < 1) {
        throw std::invalid_argument(
            "scenario counts must all be at least 1, got (" + std::to_string(m_a) + "," +
            std::to_string(m_b) + "," + std::to_string(d_a) + "," + std::to_string(d_b) + ")");
    }
}

std::string Scenario::str() const {
    return "(" + std::to_string(m_a) + " " + std::to_string(m_b) + " " + std::to_string(d_a) +
           " " + std::to_string(d_b) + ")";
}

}  // namespace bellcone
