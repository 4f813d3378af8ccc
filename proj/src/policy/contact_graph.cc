// Copyright 2026 The Taxsan Authors.
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

#include "taxsan/policy/contact_graph.h"

#include <fstream>
#include <sstream>

#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"
#include "taxsan/policy/rules.h"

namespace taxsan::policy {

ContactGraph ContactGraph::load(std::istream &in) {
  ContactGraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string> f = text::split(line, '\t');
    if (f.size() != 3) throw ParseError("expected owner, contact and category", lineno);
    for (std::string &s : f) s = std::string(text::trim(s));
    if (f[0].empty() || f[1].empty() || f[2].empty()) throw ParseError("empty field", lineno);
    try {
      g.add(UserId(f[0]), UserId(f[1]), f[2]);
    } catch (const ConflictError &e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return g;
}

ContactGraph ContactGraph::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open contact graph: " + path.string());
  return load(in);
}

void ContactGraph::add(const UserId &owner, const UserId &contact, std::string category) {
  auto &row = edges_[owner];
  auto [it, inserted] = row.emplace(contact, category);
  if (!inserted && it->second != category) {
    throw ConflictError("contact " + contact.str() + " of " + owner.str() + " already in category " + it->second);
  }
}

std::string ContactGraph::category_of(const UserId &owner, const UserId &contact) const {
  auto row = edges_.find(owner);
  if (row == edges_.end()) return std::string(kStrangers);
  auto it = row->second.find(contact);
  return it == row->second.end() ? std::string(kStrangers) : it->second;
}

std::string ContactGraph::to_tsv() const {
  std::ostringstream out;
  for (const auto &[owner, row] : edges_) {
    for (const auto &[contact, category] : row) out << owner << '\t' << contact << '\t' << category << '\n';
  }
  return out.str();
}

std::size_t ContactGraph::size() const {
  std::size_t n = 0;
  for (const auto &[owner, row] : edges_) n += row.size();
  return n;
}

}  // namespace taxsan::policy
