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

#include "covertlab/run_config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "covertlab/errors.hpp"

namespace covertlab::config {

void RunConfig::merge(const RunConfig& over) {
  auto take = [](auto& mine, const auto& theirs) {
    if (theirs) mine = theirs;
  };
  take(command, over.command);
  take(preset, over.preset);
  take(eta, over.eta);
  take(nbar_b, over.nbar_b);
  take(n, over.n);
  take(delta, over.delta);
  take(vartheta, over.vartheta);
  take(q, over.q);
  take(grid, over.grid);
  take(seed, over.seed);
  take(table, over.table);
  take(duration, over.duration);
  take(bandwidth, over.bandwidth);
  take(suite, over.suite);
  take(tolerance_scale, over.tolerance_scale);
}

namespace {

RunConfig make_nbar_preset(std::string name, double eta, double n) {
  RunConfig c;
  c.command = "sweep-nbar";
  c.preset = std::move(name);
  c.eta = eta;
  c.n = n;
  c.delta = kDefaultDelta;
  c.vartheta = kDefaultVartheta;
  c.grid = std::string(kDefaultNbarGrid);
  return c;
}

RunConfig make_eta_preset(std::string name, double nbar_b) {
  RunConfig c;
  c.command = "sweep-eta";
  c.preset = std::move(name);
  c.nbar_b = nbar_b;
  c.n = 6e10;
  c.delta = kDefaultDelta;
  c.vartheta = kDefaultVartheta;
  c.grid = std::string(kDefaultEtaGrid);
  return c;
}

RunConfig make_fso_preset(std::string name, double bandwidth) {
  RunConfig c;
  c.command = "sweep-fso";
  c.preset = std::move(name);
  c.table = "data/sample_link_table.csv";
  c.duration = 60.0;
  c.bandwidth = bandwidth;
  c.delta = kDefaultDelta;
  c.vartheta = kDefaultVartheta;
  return c;
}

const std::map<std::string, RunConfig, std::less<>>& presets() {
  static const auto* table = [] {
    auto* m = new std::map<std::string, RunConfig, std::less<>>;
    const std::pair<const char*, double> nbar_sweeps[] = {
        {"fig4a", 0.95}, {"fig4b", 0.8}, {"fig4c", 0.65}};
    for (const auto& [name, eta] : nbar_sweeps) {
      (*m)[name] = make_nbar_preset(name, eta, 1e8);
      const std::string text = std::string(name) + "-text";
      (*m)[text] = make_nbar_preset(text, eta, 6e10);
    }
    const std::pair<const char*, double> eta_sweeps[] = {
        {"fig5a", 1e-6}, {"fig5b", 1e-3}, {"fig5c", 1e-1}};
    for (const auto& [name, nbar] : eta_sweeps) (*m)[name] = make_eta_preset(name, nbar);
    (*m)["fig6"] = make_fso_preset("fig6", 1e10);
    (*m)["fig6-text"] = make_fso_preset("fig6-text", 1e9);
    return m;
  }();
  return *table;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double number(const std::string& value, const std::string& key, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || !std::isfinite(v)) {
    throw ParseError("config line " + std::to_string(line) + ": '" + key +
                     "' needs a number, got '" + value + "'");
  }
  return v;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : presets()) v.push_back(name);
    return v;
  }();
  return names;
}

RunConfig preset(std::string_view name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw ParseError("unknown preset '" + std::string(name) + "'");
  return it->second;
}

RunConfig parse_config_text(std::string_view text) {
  RunConfig c;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    for (char& ch : key) {
      if (ch == '_') ch = '-';
    }
    if (key == "eta") {
      c.eta = number(value, key, line_no);
    } else if (key == "nbar-b") {
      c.nbar_b = number(value, key, line_no);
    } else if (key == "n") {
      c.n = number(value, key, line_no);
    } else if (key == "delta") {
      c.delta = number(value, key, line_no);
    } else if (key == "vartheta") {
      c.vartheta = number(value, key, line_no);
    } else if (key == "q") {
      c.q = number(value, key, line_no);
    } else if (key == "duration") {
      c.duration = number(value, key, line_no);
    } else if (key == "bandwidth") {
      c.bandwidth = number(value, key, line_no);
    } else if (key == "tolerance-scale") {
      c.tolerance_scale = number(value, key, line_no);
    } else if (key == "seed") {
      const double v = number(value, key, line_no);
      if (v < 0 || v != std::floor(v) || v > 1.8e19) {
        throw ParseError("config line " + std::to_string(line_no) + ": seed must be an integer");
      }
      c.seed = std::stoull(value);
    } else if (key == "grid") {
      c.grid = value;
    } else if (key == "preset") {
      c.preset = value;
    } else if (key == "table") {
      c.table = value;
    } else if (key == "suite") {
      c.suite = value;
    } else {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

sweep::EchoLines echo(const RunConfig& c) {
  sweep::EchoLines lines;
  auto put_s = [&](const char* key, const std::optional<std::string>& v) {
    if (v) lines.emplace_back(key, *v);
  };
  auto put_d = [&](const char* key, const std::optional<double>& v) {
    if (v) lines.emplace_back(key, sweep::format_number(*v));
  };
  put_s("command", c.command);
  put_s("preset", c.preset);
  put_d("eta", c.eta);
  put_d("nbar-b", c.nbar_b);
  put_d("n", c.n);
  put_d("delta", c.delta);
  put_d("vartheta", c.vartheta);
  put_d("q", c.q);
  put_s("grid", c.grid);
  if (c.seed) lines.emplace_back("seed", std::to_string(*c.seed));
  put_s("table", c.table);
  put_d("duration", c.duration);
  put_d("bandwidth", c.bandwidth);
  put_s("suite", c.suite);
  put_d("tolerance-scale", c.tolerance_scale);
  return lines;
}

}  // namespace covertlab::config
