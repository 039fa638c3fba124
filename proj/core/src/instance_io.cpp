// Copyright 2026 The discnep Authors.
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


#include "discnep/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace discnep {
namespace {

using nlohmann::json;

std::vector<double> read_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw ModelError(what + " must contain numbers");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ModelError(what + " must be finite");
    out.push_back(d);
  }
  return out;
}

Eigen::MatrixXd read_matrix(const json& j, const std::string& what,
                            std::size_t rows) {
  if (!j.is_array()) throw ModelError(what + " must be a list of rows");
  if (j.empty()) return Eigen::MatrixXd(static_cast<Eigen::Index>(rows), 0);
  if (j.size() != rows) {
    throw ModelError(what + " must have " + std::to_string(rows) + " rows");
  }
  std::size_t cols = 0;
  std::vector<std::vector<double>> data;
  for (std::size_t r = 0; r < j.size(); ++r) {
    data.push_back(read_vector(j[r], what + " row"));
    if (r == 0) cols = data.back().size();
    if (data.back().size() != cols) throw ModelError(what + " is ragged");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = data[r][c];
    }
  }
  return m;
}

std::vector<std::int64_t> read_bounds(const json& j, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (v.is_null()) throw ModelError(what + ": unbounded box");
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s == "inf" || s == "+inf" || s == "-inf") {
        throw ModelError(what + ": unbounded box");
      }
      throw ModelError(what + " must contain integers");
    }
    if (v.is_number_integer()) {
      out.push_back(v.get<std::int64_t>());
      continue;
    }
    if (!v.is_number()) throw ModelError(what + " must contain integers");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ModelError(what + ": unbounded box");
    if (d != std::floor(d)) throw ModelError(what + ": non-integer bound");
    out.push_back(static_cast<std::int64_t>(d));
  }
  return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  if (m.cols() == 0) return rows;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Problem load_problem(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("players") || !doc["players"].is_array()) {
    throw ModelError("instance document needs a \"players\" list");
  }
  std::vector<PlayerData> players;
  for (std::size_t nu = 0; nu < doc["players"].size(); ++nu) {
    const auto& pj = doc["players"][nu];
    const std::string tag = "player " + std::to_string(nu) + " ";
    for (const char* key : {"Q", "C", "b", "l", "u"}) {
      if (!pj.contains(key)) throw ModelError(tag + "is missing \"" + key + "\"");
    }
    PlayerData p;
    const auto b = read_vector(pj["b"], tag + "b");
    p.b = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
    p.Q = read_matrix(pj["Q"], tag + "Q", b.size());
    p.C = read_matrix(pj["C"], tag + "C", b.size());
    p.l = read_bounds(pj["l"], tag + "l");
    p.u = read_bounds(pj["u"], tag + "u");
    players.push_back(std::move(p));
  }
  return Problem(std::move(players));
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_problem(ss.str());
}

std::string dump_problem(const Problem& problem) {
  json players = json::array();
  for (const auto& p : problem.players()) {
    json pj;
    pj["Q"] = matrix_to_json(p.Q);
    pj["C"] = matrix_to_json(p.C);
    pj["b"] = std::vector<double>(p.b.data(), p.b.data() + p.b.size());
    pj["l"] = p.l;
    pj["u"] = p.u;
    players.push_back(std::move(pj));
  }
  json doc;
  doc["players"] = std::move(players);
  return doc.dump(2) + "\n";
}

}  // namespace discnep
