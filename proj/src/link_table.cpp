// Copyright 2026 The covertlab Authors
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

#include "covertlab/link_table.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "covertlab/errors.hpp"

namespace covertlab::link {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double field(const std::string& text, int line, const char* name) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw ParseError("link table line " + std::to_string(line) + ": bad " + name + " '" + text +
                     "'");
  }
  return v;
}

}  // namespace

LinkTable::LinkTable(std::vector<LinkRow> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i].params.validate();
    if (i > 0 && !(rows_[i].wavelength_nm > rows_[i - 1].wavelength_nm)) {
      throw DomainError("link table wavelengths must be strictly increasing");
    }
  }
}

LinkTable parse_link_table(std::string_view text) {
  std::vector<LinkRow> rows;
  bool header_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kLinkHeader) {
        throw ParseError("link table line " + std::to_string(line_no) + ": expected header '" +
                         std::string(kLinkHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(trim(cell));
    if (cells.size() != 3) {
      throw ParseError("link table line " + std::to_string(line_no) + ": expected 3 fields, got " +
                       std::to_string(cells.size()));
    }
    LinkRow row{field(cells[0], line_no, "wavelength_nm"),
                {field(cells[1], line_no, "eta"), field(cells[2], line_no, "nbar_b")}};
    try {
      row.params.validate();
    } catch (const DomainError& e) {
      throw ParseError("link table line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!rows.empty() && !(row.wavelength_nm > rows.back().wavelength_nm)) {
      throw ParseError("link table line " + std::to_string(line_no) +
                       ": wavelengths must be strictly increasing");
    }
    rows.push_back(row);
  }
  if (!header_seen) throw ParseError("link table is empty");
  return LinkTable(std::move(rows));
}

LinkTable load_link_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open link table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_link_table(buf.str());
}

std::vector<sweep::SweepRow> sweep_fso(const LinkTable& table, double duration_s,
                                       double bandwidth_hz, double delta, double vartheta,
                                       sweep::Backend backend) {
  if (!(duration_s > 0.0) || !(bandwidth_hz > 0.0)) {
    throw DomainError("duration and bandwidth must be positive");
  }
  const sweep::SweepSettings settings{duration_s * bandwidth_hz, delta, vartheta};
  std::vector<double> abscissa;
  std::vector<ChannelParams> points;
  for (const auto& row : table.rows()) {
    abscissa.push_back(row.wavelength_nm);
    points.push_back(row.params);
  }
  return sweep::evaluate_rows(abscissa, points, settings, backend);
}

}  // namespace covertlab::link
