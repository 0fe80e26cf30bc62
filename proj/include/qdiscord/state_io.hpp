// Copyright 2026 The qdiscord Authors
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

#pragma once

// JSON state files:
//   {"dim_s": n, "dim_a": m, "re": [[...], ...], "im": [[...], ...]}
// Row-major (n m) x (n m) matrices in the composite index convention. "im"
// may be omitted for real matrices.

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "qdiscord/errors.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

namespace detail {
inline std::vector<std::vector<double>> read_real_matrix(const nlohmann::json& doc,
                                                         const char* key, std::size_t n) {
  const auto& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != n)
    throw Error(ErrorKind::kDimensionMismatch,
                std::string("\"") + key + "\" must have " + std::to_string(n) + " rows");
  std::vector<std::vector<double>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorKind::kDimensionMismatch,
                  std::string("\"") + key + "\" rows must have " + std::to_string(n) + " entries");
    out.push_back(row.get<std::vector<double>>());
  }
  return out;
}
}  // namespace detail

inline BipartiteState state_from_json(const nlohmann::json& doc) {
  std::size_t dim_s = 0, dim_a = 0;
  std::vector<std::vector<double>> re, im;
  try {
    if (!doc.is_object()) throw Error(ErrorKind::kParseError, "state file must be a JSON object");
    dim_s = doc.at("dim_s").get<std::size_t>();
    dim_a = doc.at("dim_a").get<std::size_t>();
    if (dim_s == 0 || dim_a == 0) throw Error(ErrorKind::kParseError, "dims must be positive");
    const std::size_t n = dim_s * dim_a;
    re = detail::read_real_matrix(doc, "re", n);
    if (doc.contains("im")) {
      im = detail::read_real_matrix(doc, "im", n);
    } else {
      im.assign(n, std::vector<double>(n, 0.0));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  const std::size_t n = dim_s * dim_a;
  ComplexMatrix rho(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rho(i, j) = Complex(re[i][j], im[i][j]);
  return validate(std::move(rho), dim_s, dim_a);
}

inline BipartiteState read_state(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  return state_from_json(doc);
}

inline nlohmann::json state_to_json(const BipartiteState& state) {
  const std::size_t n = state.dim();
  std::vector<std::vector<double>> re(n, std::vector<double>(n)), im = re;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      re[i][j] = state.rho()(i, j).real();
      im[i][j] = state.rho()(i, j).imag();
    }
  return {{"dim_s", state.dim_s()}, {"dim_a", state.dim_a()}, {"re", re}, {"im", im}};
}

inline void write_state(std::ostream& out, const BipartiteState& state) {
  out << state_to_json(state).dump(2) << '\n';
}

}  // namespace qdiscord
