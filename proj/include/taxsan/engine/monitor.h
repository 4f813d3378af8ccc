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

#ifndef TAXSAN_ENGINE_MONITOR_H_
#define TAXSAN_ENGINE_MONITOR_H_

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>

#include "taxsan/engine/sanitizer.h"
#include "taxsan/kb/knowledge_base.h"
#include "taxsan/store/repository.h"

namespace taxsan::engine {

struct AccessRequest {
  UserId reader;
  MessageId message;
};

struct MonitorStats {
  std::uint64_t requests = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::uint64_t membership_checks = 0;
  std::uint64_t branch_queries = 0;
};

// Effective access levels for a reader of a message. Every party (the
// publisher and each co-publisher) other than the reader contributes the rule
// of the reader's category in that party's rule set; parties without a rule
// set impose nothing. Per topic the contributions are combined with
// policy::resolve_conflict, and the NULL scopes are united.
EffectivePolicy effective_policy(const annotate::AnnotatedMessage &message, const UserId &reader,
                                 const store::Repository &repo, const kb::KnowledgeBase &kb);

// Intercepts access requests and serves sanitized versions. Versions are
// cached by (message id, effective policy fingerprint), so readers whose
// categories map to the same levels share one version. Safe for concurrent
// requests.
class Monitor {
 public:
  Monitor(const kb::KnowledgeBase &kb, const store::Repository &repo) : kb_(kb), repo_(repo) {}

  // Throws NotFoundError for unknown messages. Readers without a contact
  // edge are strangers.
  SanitizedMessage handle_access(const AccessRequest &request);

  MonitorStats stats() const;
  std::size_t cache_size() const;
  void clear_cache();

 private:
  const kb::KnowledgeBase &kb_;
  const store::Repository &repo_;

  mutable std::shared_mutex cache_mu_;
  std::map<std::pair<MessageId, std::string>, std::shared_ptr<const SanitizedMessage>> cache_;

  std::atomic<std::uint64_t> requests_{0};
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
  SensitivityCounters counters_;
};

}  // namespace taxsan::engine

#endif  // TAXSAN_ENGINE_MONITOR_H_
