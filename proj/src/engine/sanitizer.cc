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

#include "taxsan/engine/sanitizer.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "taxsan/common/errors.h"
#include "taxsan/common/text.h"
#include "taxsan/nlp/pipeline.h"

namespace taxsan::engine {
namespace {

using Source = SensitiveOccurrence::Source;

void bump(SensitivityCounters *c, std::atomic<std::uint64_t> SensitivityCounters::*field, std::uint64_t n = 1) {
  if (c) (c->*field).fetch_add(n, std::memory_order_relaxed);
}

kb::ConceptSet fetch_branch(const kb::KnowledgeBase &kb, const ConceptId &node, SensitivityCounters *c) {
  bump(c, &SensitivityCounters::branch_queries);
  return kb.branch(node);
}

// A candidate decision for one occurrence under one topic.
struct Verdict {
  bool withheld = false;
  std::size_t hops = 0;
  std::size_t topic_order = 0;
  std::string replacement;
  std::optional<ConceptId> generalization;
  std::string topic;
  std::string rule;

  // More restrictive verdicts win.
  bool beats(const Verdict &o) const {
    if (withheld != o.withheld) return withheld;
    if (hops != o.hops) return hops > o.hops;
    return topic_order < o.topic_order;
  }
};

std::vector<ConceptId> distinct_senses(const annotate::AnnotatedMessage &m) {
  std::vector<ConceptId> out;
  for (const annotate::AnnotatedPhrase &p : m.phrases) {
    if (p.chosen) out.push_back(*p.chosen);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Verdicts keyed by chosen sense for a concept level.
std::map<ConceptId, Verdict> concept_verdicts(const std::vector<ConceptId> &senses, const TopicLevel &tl,
                                              std::size_t order, const kb::KnowledgeBase &kb,
                                              SensitivityCounters *counters) {
  std::vector<std::pair<ConceptId, kb::ConceptSet>> branches;
  for (const ConceptId &n : tl.al.nodes) {
    kb::ConceptSet b = fetch_branch(kb, n, counters);
    if (!b.empty()) branches.emplace_back(n, std::move(b));
  }
  std::map<ConceptId, Verdict> out;
  const std::string rule = tl.al.display();
  for (const ConceptId &s : senses) {
    std::vector<ConceptId> under;
    for (const auto &[n, b] : branches) {
      bump(counters, &SensitivityCounters::membership_checks);
      if (b.contains(s)) under.push_back(n);
    }
    if (under.empty() || tl.al.nodes.contains(s)) continue;
    // Nearest node by parent hops; ties go to the smallest id.
    std::optional<ConceptId> best;
    std::size_t best_hops = 0;
    for (const ConceptId &n : under) {
      std::size_t h = ancestor_distance(kb, s, n).value_or(0);
      if (!best || h < best_hops) {
        best = n;
        best_hops = h;
      }
    }
    out[s] = Verdict{false, best_hops, order, kb.label(*best), best, tl.topic, rule};
  }
  return out;
}

std::map<ConceptId, Verdict> null_verdicts(const std::vector<ConceptId> &senses, const TopicLevel &tl,
                                           std::size_t order, const kb::KnowledgeBase &kb,
                                           SensitivityCounters *counters) {
  std::map<ConceptId, Verdict> out;
  const Verdict withheld{true, 0, order, std::string(kWithheld), std::nullopt, tl.topic, "null"};
  if (tl.scope.empty()) {
    for (const ConceptId &s : senses) out[s] = withheld;
    return out;
  }
  std::vector<kb::ConceptSet> branches;
  for (const ConceptId &n : tl.scope) {
    kb::ConceptSet b = fetch_branch(kb, n, counters);
    if (!b.empty()) branches.push_back(std::move(b));
  }
  for (const ConceptId &s : senses) {
    bool in_scope = tl.scope.contains(s);
    for (const kb::ConceptSet &b : branches) {
      if (in_scope) break;
      bump(counters, &SensitivityCounters::membership_checks);
      in_scope = b.contains(s);
    }
    if (in_scope) out[s] = withheld;
  }
  return out;
}

void offer(std::map<std::pair<Source, std::size_t>, Verdict> &best, Source src, std::size_t index,
           const Verdict &v) {
  auto key = std::make_pair(src, index);
  auto it = best.find(key);
  if (it == best.end()) {
    best.emplace(key, v);
  } else if (v.beats(it->second)) {
    it->second = v;
  }
}

}  // namespace

std::string_view entity_placeholder(nlp::EntityCategory c) {
  switch (c) {
    case nlp::EntityCategory::kTime: return "a time";
    case nlp::EntityCategory::kLocation: return "a location";
    case nlp::EntityCategory::kOrganization: return "an organization";
    case nlp::EntityCategory::kPerson: return "a person";
    case nlp::EntityCategory::kMoney: return "an amount";
    case nlp::EntityCategory::kPercent: return "a percentage";
    case nlp::EntityCategory::kDate: return "a date";
  }
  return "an entity";
}

std::string EffectivePolicy::fingerprint() const {
  std::string out;
  for (const TopicLevel &tl : levels) {
    out += tl.topic + '=' + tl.al.fingerprint();
    if (tl.al.is_null()) {
      out += "@";
      for (const ConceptId &c : tl.scope) out += c.str() + ';';
    }
    if (tl.entity) out += "#" + std::string(nlp::to_string(*tl.entity));
    out += '|';
  }
  return out;
}

EffectivePolicy single_level(policy::AccessLevel al) {
  TopicLevel tl;
  tl.topic = "*";
  tl.entity = al.entity;
  tl.al = std::move(al);
  return EffectivePolicy{{std::move(tl)}};
}

std::vector<SensitiveOccurrence> assess_sensitivity(const annotate::AnnotatedMessage &message,
                                                    const EffectivePolicy &policy, const kb::KnowledgeBase &kb,
                                                    SensitivityCounters *counters) {
  const std::vector<ConceptId> senses = distinct_senses(message);
  std::map<std::pair<Source, std::size_t>, Verdict> best;

  for (std::size_t order = 0; order < policy.levels.size(); ++order) {
    const TopicLevel &tl = policy.levels[order];
    if (!tl.al.resolved()) throw ConfigurationError("unresolved access level for topic " + tl.topic);

    if (tl.entity) {
      if (tl.al.kind == policy::AccessKind::kNeName) continue;
      const bool withhold = tl.al.is_null();
      for (std::size_t i = 0; i < message.entities.size(); ++i) {
        const nlp::NamedEntity &e = message.entities[i];
        if (e.category != *tl.entity) continue;
        std::string replacement(withhold ? kWithheld : entity_placeholder(e.category));
        offer(best, Source::kEntity, i, Verdict{withhold, 0, order, replacement, std::nullopt, tl.topic, tl.al.display()});
      }
      continue;
    }
    if (tl.al.is_entity()) continue;

    std::map<ConceptId, Verdict> by_sense = tl.al.is_null() ? null_verdicts(senses, tl, order, kb, counters)
                                                            : concept_verdicts(senses, tl, order, kb, counters);
    for (std::size_t i = 0; i < message.phrases.size(); ++i) {
      const annotate::AnnotatedPhrase &p = message.phrases[i];
      if (!p.chosen) continue;
      if (auto it = by_sense.find(*p.chosen); it != by_sense.end()) offer(best, Source::kPhrase, i, it->second);
    }
  }

  std::vector<SensitiveOccurrence> out;
  for (const auto &[key, v] : best) {
    SensitiveOccurrence o;
    o.source = key.first;
    o.index = key.second;
    if (o.source == Source::kPhrase) {
      o.span = message.phrases[o.index].phrase.span;
      o.surface = message.phrases[o.index].phrase.surface;
    } else {
      o.span = message.entities[o.index].span;
      o.surface = message.entities[o.index].surface;
    }
    o.replacement = v.replacement;
    o.generalization = v.generalization;
    o.topic = v.topic;
    o.rule = v.rule;
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [](const SensitiveOccurrence &a, const SensitiveOccurrence &b) { return a.span < b.span; });
  return out;
}

std::string apply_substitutions(std::string_view text, const std::vector<Substitution> &subs) {
  std::string out;
  std::size_t pos = 0;
  for (const Substitution &s : subs) {
    if (s.span.start < pos || s.span.end > text.size() || s.span.start > s.span.end) {
      throw Error("substitution spans overlap or exceed the text");
    }
    out.append(text.substr(pos, s.span.start - pos));
    out.append(s.replacement);
    pos = s.span.end;
  }
  out.append(text.substr(pos));
  return out;
}

SanitizedMessage sanitize(const annotate::AnnotatedMessage &message, const EffectivePolicy &policy,
                          const kb::KnowledgeBase &kb, SensitivityCounters *counters) {
  SanitizedMessage out;
  out.id = message.id;
  out.cache_key = message.id.str() + "|" + policy.fingerprint();
  for (const SensitiveOccurrence &o : assess_sensitivity(message, policy, kb, counters)) {
    out.substitutions.push_back({o.span, o.surface, o.replacement, o.topic, o.rule});
  }
  out.text = apply_substitutions(message.text, out.substitutions);
  return out;
}

std::string SanitizedMessage::ledger_tsv() const {
  std::ostringstream out;
  out << "start\tend\toriginal\treplacement\ttopic\trule\n";
  for (const Substitution &s : substitutions) {
    out << s.span.start << '\t' << s.span.end << '\t' << s.original << '\t' << s.replacement << '\t' << s.topic
        << '\t' << s.rule << '\n';
  }
  return out.str();
}

annotate::AnnotatedMessage as_annotated(const annotate::AnnotatedMessage &original,
                                        const SanitizedMessage &sanitized,
                                        const std::vector<SensitiveOccurrence> &occurrences) {
  annotate::AnnotatedMessage out;
  out.id = original.id;
  out.publisher = original.publisher;
  out.co_publishers = original.co_publishers;
  out.text = sanitized.text;

  // Maps an original offset outside every substitution to the new text.
  const auto &subs = sanitized.substitutions;
  auto shift = [&](std::size_t pos) {
    long long delta = 0;
    for (const Substitution &s : subs) {
      if (s.span.end <= pos) {
        delta += static_cast<long long>(s.replacement.size()) - static_cast<long long>(s.span.size());
      }
    }
    return static_cast<std::size_t>(static_cast<long long>(pos) + delta);
  };
  auto replaced = [&](const nlp::Span &sp) {
    return std::find_if(subs.begin(), subs.end(), [&](const Substitution &s) { return s.span.overlaps(sp); });
  };

  for (const nlp::Token &t : original.tokens) {
    if (replaced(t.span) != subs.end()) continue;
    nlp::Token nt = t;
    nt.span = {shift(t.span.start), shift(t.span.end)};
    out.tokens.push_back(std::move(nt));
  }
  for (const Substitution &s : subs) {
    std::size_t start = shift(s.span.start);
    std::size_t sentence = 0;
    for (const nlp::Token &t : original.tokens) {
      if (t.span.overlaps(s.span)) {
        sentence = t.sentence;
        break;
      }
    }
    for (nlp::Token t : nlp::tokenize(s.replacement)) {
      t.span = {t.span.start + start, t.span.end + start};
      t.sentence = sentence;
      out.tokens.push_back(std::move(t));
    }
  }
  std::sort(out.tokens.begin(), out.tokens.end(),
            [](const nlp::Token &a, const nlp::Token &b) { return a.span < b.span; });

  auto token_range = [&](const nlp::Span &sp) {
    nlp::TokenRange r{out.tokens.size(), 0};
    for (std::size_t i = 0; i < out.tokens.size(); ++i) {
      if (out.tokens[i].span.start >= sp.start && out.tokens[i].span.end <= sp.end) {
        r.first = std::min(r.first, i);
        r.last = i + 1;
      }
    }
    if (r.first > r.last) r.first = r.last;
    return r;
  };

  for (const nlp::NamedEntity &e : original.entities) {
    if (replaced(e.span) != subs.end()) continue;
    nlp::NamedEntity ne = e;
    ne.span = {shift(e.span.start), shift(e.span.end)};
    ne.tokens = token_range(ne.span);
    out.entities.push_back(std::move(ne));
  }
  for (std::size_t i = 0; i < original.phrases.size(); ++i) {
    const annotate::AnnotatedPhrase &p = original.phrases[i];
    auto occ = std::find_if(occurrences.begin(), occurrences.end(), [&](const SensitiveOccurrence &o) {
      return o.source == SensitiveOccurrence::Source::kPhrase && o.index == i;
    });
    annotate::AnnotatedPhrase np = p;
    if (occ == occurrences.end()) {
      np.phrase.span = {shift(p.phrase.span.start), shift(p.phrase.span.end)};
    } else {
      if (!occ->generalization) continue;
      std::size_t start = shift(p.phrase.span.start);
      np.phrase.span = {start, start + occ->replacement.size()};
      np.phrase.surface = occ->replacement;
      np.phrase.key = text::to_lower(occ->replacement);
      auto words = nlp::tokenize(occ->replacement);
      np.phrase.head = words.empty() ? np.phrase.key : text::to_lower(words.back().text);
      np.candidates = {*occ->generalization};
      np.chosen = occ->generalization;
    }
    np.phrase.tokens = token_range(np.phrase.span);
    out.phrases.push_back(std::move(np));
  }
  return out;
}

}  // namespace taxsan::engine
