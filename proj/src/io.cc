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

#include "bellcone/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace bellcone {

namespace {

using nlohmann::json;

int require_positive_int(const json &node, const std::string &key, const std::string &context) {
    if (!node.contains(key)) {
        throw std::runtime_error(context + ": missing \"" + key + "\"");
    }
    const json &v = node.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw std::runtime_error(context + ": \"" + key + "\" must be a positive integer");
    }
    return v.get<int>();
}

Scenario scenario_from_json(const json &node, const std::string &context) {
    if (!node.is_object()) {
        throw std::runtime_error(context + ": \"scenario\" must be an object");
    }
    return Scenario(require_positive_int(node, "mA", context),
                    require_positive_int(node, "mB", context),
                    require_positive_int(node, "dA", context),
                    require_positive_int(node, "dB", context));
}

std::string scenario_to_json(const Scenario &s) {
    std::ostringstream out;
    out << "{\"mA\": " << s.m_a << ", \"mB\": " << s.m_b << ", \"dA\": " << s.d_a
        << ", \"dB\": " << s.d_b << "}";
    return out.str();
}

json parse_json(const std::string &text, const std::string &context) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::runtime_error(context + ": " + e.what());
    }
}

const json &array_of_size(const json &node, size_t expected, const std::string &where,
                          const std::string &axis) {
    if (!node.is_array()) {
        throw std::runtime_error("behaviour json: " + where + " must be an array");
    }
    if (node.size() != expected) {
        throw std::runtime_error("behaviour json: " + where + " has " +
                                 std::to_string(node.size()) + " entries, expected " + axis +
                                 " = " + std::to_string(expected));
    }
    return node;
}

}  // namespace

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file for reading: " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed while writing file: " + path);
    }
}

std::string behaviour_to_json(const Behaviour &b) {
    const Scenario &s = b.scenario();
    std::ostringstream out;
    out << "{\n  \"scenario\": " << scenario_to_json(s) << ",\n  \"p\": [\n";
    for (int x = 0; x < s.m_a; ++x) {
        out << "    [\n";
        for (int y = 0; y < s.m_b; ++y) {
            out << "      [";
            for (int a = 0; a < s.d_a; ++a) {
                out << (a == 0 ? "[" : " [");
                for (int b_i = 0; b_i < s.d_b; ++b_i) {
                    if (b_i > 0) out << ", ";
                    out << format_float(b(x, y, a, b_i));
                }
                out << "]";
                if (a + 1 < s.d_a) out << ",";
            }
            out << "]";
            if (y + 1 < s.m_b) out << ",";
            out << "\n";
        }
        out << "    ]";
        if (x + 1 < s.m_a) out << ",";
        out << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

void write_behaviour_json(const Behaviour &b, const std::string &path) {
    write_text_file(path, behaviour_to_json(b));
}

Behaviour behaviour_from_json(const std::string &text) {
    json doc = parse_json(text, "behaviour json");
    if (!doc.is_object() || !doc.contains("scenario") || !doc.contains("p")) {
        throw std::runtime_error("behaviour json: expected an object with \"scenario\" and \"p\"");
    }
    Scenario s = scenario_from_json(doc.at("scenario"), "behaviour json scenario");

    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(s.m_a) * s.m_b * s.d_a * s.d_b);
    const json &px = array_of_size(doc.at("p"), s.m_a, "p", "mA");
    for (int x = 0; x < s.m_a; ++x) {
        std::string wx = "p[" + std::to_string(x + 1) + "]";
        const json &py = array_of_size(px.at(x), s.m_b, wx, "mB");
        for (int y = 0; y < s.m_b; ++y) {
            std::string wy = wx + "[" + std::to_string(y + 1) + "]";
            const json &pa = array_of_size(py.at(y), s.d_a, wy, "dA");
            for (int a = 0; a < s.d_a; ++a) {
                std::string wa = wy + "[" + std::to_string(a + 1) + "]";
                const json &pb = array_of_size(pa.at(a), s.d_b, wa, "dB");
                for (int b_i = 0; b_i < s.d_b; ++b_i) {
                    const json &v = pb.at(b_i);
                    if (!v.is_number()) {
                        throw std::runtime_error("behaviour json: " + wa + "[" +
                                                 std::to_string(b_i + 1) + "] is not a number");
                    }
                    flat.push_back(v.get<double>());
                }
            }
        }
    }
    return Behaviour::from_flat(s, std::move(flat));
}

Behaviour read_behaviour_json(const std::string &path) {
    return behaviour_from_json(read_text_file(path));
}

std::string matrix_to_csv(const Eigen::MatrixXd &m) {
    std::ostringstream out;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c > 0) out << ",";
        out << "c" << (c + 1);
    }
    out << "\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ",";
            out << format_float(m(r, c));
        }
        out << "\n";
    }
    return out.str();
}

void write_matrix_csv(const Eigen::MatrixXd &m, const std::string &path) {
    write_text_file(path, matrix_to_csv(m));
}

Eigen::MatrixXd matrix_from_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    size_t line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        size_t field_no = 0;
        bool parse_failed = false;
        while (std::getline(fields, field, ',')) {
            ++field_no;
            try {
                size_t consumed = 0;
                double v = std::stod(field, &consumed);
                while (consumed < field.size() &&
                       (field[consumed] == ' ' || field[consumed] == '\t')) {
                    ++consumed;
                }
                if (consumed != field.size()) throw std::invalid_argument(field);
                row.push_back(v);
            } catch (const std::exception &) {
                if (first_content_line) {
                    parse_failed = true;  // header row, skip it
                    break;
                }
                throw std::runtime_error("matrix csv line " + std::to_string(line_no) +
                                         ", field " + std::to_string(field_no) +
                                         ": cannot parse \"" + field + "\" as a number");
            }
        }
        first_content_line = false;
        if (parse_failed) continue;
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::runtime_error("matrix csv line " + std::to_string(line_no) + ": has " +
                                     std::to_string(row.size()) + " fields, expected " +
                                     std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::runtime_error("matrix csv: no numeric rows found");
    }
    Eigen::MatrixXd m(rows.size(), rows.front().size());
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    return m;
}

Eigen::MatrixXd read_matrix_csv(const std::string &path) {
    try {
        return matrix_from_csv(read_text_file(path));
    } catch (const std::runtime_error &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_expression(const BellExpression &g, const std::string &csv_path,
                      const std::string &sidecar_path) {
    write_matrix_csv(g.coeffs, csv_path);
    std::ostringstream out;
    out << "{\"scenario\": " << scenario_to_json(g.scenario) << ", \"name\": "
        << json(g.name).dump() << "}\n";
    write_text_file(sidecar_path, out.str());
}

BellExpression read_expression(const std::string &csv_path, const std::string &sidecar_path) {
    Eigen::MatrixXd coeffs = read_matrix_csv(csv_path);
    json doc = parse_json(read_text_file(sidecar_path), "expression sidecar json");
    if (!doc.is_object() || !doc.contains("scenario")) {
        throw std::runtime_error("expression sidecar json: expected an object with \"scenario\"");
    }
    Scenario s = scenario_from_json(doc.at("scenario"), "expression sidecar scenario");
    std::string name;
    if (doc.contains("name") && doc.at("name").is_string()) {
        name = doc.at("name").get<std::string>();
    }
    return make_expression(s, std::move(coeffs), std::move(name));
}

}  // namespace bellcone
