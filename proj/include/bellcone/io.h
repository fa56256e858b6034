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

#ifndef BELLCONE_IO_H
#define BELLCONE_IO_H

#include <string>

#include <Eigen/Dense>

#include "bellcone/behaviour.h"
#include "bellcone/bell.h"

namespace bellcone {

/// Formats a double with 17 significant digits ("%.17g"), enough for exact
/// binary round-trips.
std::string format_float(double v);

/// Behaviour JSON document:
///   {"scenario": {"mA": .., "mB": .., "dA": .., "dB": ..},
///    "p": [[[[..]]]]}
/// with p nested in (x, y, a, b) order. Indices are 1-based in diagnostics to
/// match the documented file format; storage order is unaffected.
std::string behaviour_to_json(const Behaviour &b);
void write_behaviour_json(const Behaviour &b, const std::string &path);
Behaviour behaviour_from_json(const std::string &text);
Behaviour read_behaviour_json(const std::string &path);

/// Matrix CSV: a "c1,c2,..." header row, then row-major values with 17
/// significant digits, '.' decimal point and ',' separators. Reading accepts
/// files with or without the header row.
std::string matrix_to_csv(const Eigen::MatrixXd &m);
void write_matrix_csv(const Eigen::MatrixXd &m, const std::string &path);
Eigen::MatrixXd matrix_from_csv(const std::string &text);
Eigen::MatrixXd read_matrix_csv(const std::string &path);

/// Bell expressions travel as a coefficient CSV plus a JSON sidecar
/// {"scenario": {...}, "name": ".."} so the scenario survives serialization.
void write_expression(const BellExpression &g, const std::string &csv_path,
                      const std::string &sidecar_path);
BellExpression read_expression(const std::string &csv_path, const std::string &sidecar_path);

/// Plain-text helpers shared by the writers above; both throw
/// std::runtime_error with the offending path on failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

}  // namespace bellcone

#endif  // BELLCONE_IO_H
