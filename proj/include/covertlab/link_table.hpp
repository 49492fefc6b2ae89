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

#pragma once

// Wavelength -> (eta, nbar_b) table for the free-space optical scenario.
// Format: CSV with header wavelength_nm,eta,nbar_b; '#' lines are comments.

#include <string>
#include <string_view>
#include <vector>

#include "covertlab/sweep.hpp"

namespace covertlab::link {

inline constexpr std::string_view kLinkHeader = "wavelength_nm,eta,nbar_b";

struct LinkRow {
  double wavelength_nm;
  ChannelParams params;
};

/// Rows with eta in [0,1], nbar_b >= 0 and strictly increasing wavelengths.
class LinkTable {
 public:
  explicit LinkTable(std::vector<LinkRow> rows);

  const std::vector<LinkRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<LinkRow> rows_;
};

/// Throws ParseError naming the offending line.
LinkTable parse_link_table(std::string_view text);
LinkTable load_link_table(const std::string& path);

/// Per wavelength: n = duration_s * bandwidth_hz, then the three totals.
std::vector<sweep::SweepRow> sweep_fso(const LinkTable& table, double duration_s,
                                       double bandwidth_hz, double delta, double vartheta,
                                       sweep::Backend backend = sweep::Backend::kParallel);

}  // namespace covertlab::link
