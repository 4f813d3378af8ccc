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

#include "taxsan/engine/monitor.h"

#include <algorithm>
#include <mutex>

#include "taxsan/policy/topics.h"

namespace taxsan::engine {

EffectivePolicy effective_policy(const annotate::AnnotatedMessage &message, const UserId &reader,
                                 const store::Repository &repo, const kb::KnowledgeBase &kb) {
  std::vector<UserId> parties{message.publisher};
  for (const UserId &u : message.co_publishers) {
    if (std::find(parties.begin(), parties.end(), u) == parties.end()) parties.push_back(u);
  }

  struct Gathered {
    std::vector<policy::AccessLevel> levels;
    std::vector<std::string> scope_labels;
  };
  std::vector<std::string> order;
  std::map<std::string, Gathered> by_topic;
  for (const UserId &party : parties) {
    if (party == reader) continue;
    std::optional<policy::RuleSet> rules = repo.find_rules(party);
    if (!rules) continue;
    std::string category = repo.get_category(party, reader);
    // Categories the party never declared fall back to strangers.
    bool declared = std::find(rules->categories.begin(), rules->categories.end(), category) != rules->categories.end();
    if (!declared) category = std::string(policy::kStrangers);
    for (const policy::PrivacyRule &r : policy::rule_for(*rules, category)) {
      auto [it, fresh] = by_topic.try_emplace(r.topic);
      if (fresh) order.push_back(r.topic);
      it->second.levels.push_back(policy::resolve(r.al, kb));
      for (const std::string &l : rules->scope_of(r.topic)) it->second.scope_labels.push_back(l);
    }
  }

  EffectivePolicy out;
  for (const std::string &topic : order) {
    const Gathered &g = by_topic.at(topic);
    TopicLevel tl;
    tl.topic = topic;
    if (const policy::Topic *t = policy::TopicCatalog::system().find(topic)) tl.entity = t->entity;
    tl.al = policy::resolve_conflict(g.levels, kb);
    if (tl.al.is_null() && !tl.entity) {
      for (const std::string &l : g.scope_labels) {
        for (const ConceptId &c : policy::resolve_label(kb, l)) tl.scope.insert(c);
      }
    }
    out.levels.push_back(std::move(tl));
  }
  return out;
}

SanitizedMessage Monitor::handle_access(const AccessRequest &request) {
  requests_.fetch_add(1, std::memory_order_relaxed);
  annotate::AnnotatedMessage message = repo_.get_annotated(request.message);
  EffectivePolicy policy = effective_policy(message, request.reader, repo_, kb_);
  auto key = std::make_pair(message.id, policy.fingerprint());
  {
    std::shared_lock lock(cache_mu_);
    if (auto it = cache_.find(key); it != cache_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return *it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  auto fresh = std::make_shared<const SanitizedMessage>(sanitize(message, policy, kb_, &counters_));
  std::unique_lock lock(cache_mu_);
  // A concurrent request may have filled the entry first; keep that one.
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(fresh));
  return *it->second;
}

MonitorStats Monitor::stats() const {
  MonitorStats s;
  s.requests = requests_.load();
  s.cache_hits = hits_.load();
  s.cache_misses = misses_.load();
  s.membership_checks = counters_.membership_checks.load();
  s.branch_queries = counters_.branch_queries.load();
  return s;
}

std::size_t Monitor::cache_size() const {
  std::shared_lock lock(cache_mu_);
  return cache_.size();
}

void Monitor::clear_cache() {
  std::unique_lock lock(cache_mu_);
  cache_.clear();
}

}  // namespace taxsan::engine
