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

#include "taxsan/annotate/disambiguator.h"

#include <algorithm>
#include <limits>

namespace taxsan::annotate {
namespace {

constexpr double kEpsilon = 1e-12;

using Picks = std::vector<std::size_t>;

struct Problem {
  // Variable v owns flat candidates [offset[v], offset[v] + size[v]),
  // sorted by concept id.
  std::vector<std::size_t> offset;
  std::vector<std::size_t> size;
  std::vector<ConceptId> ids;
  Eigen::MatrixXd d;

  std::size_t vars() const { return size.size(); }
  double dist(std::size_t a, std::size_t b) const {
    return d(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }
  std::size_t flat(std::size_t v, std::size_t pick) const { return offset[v] + pick; }

  // Cost added by placing candidate `pick` of variable k after picks[0..k).
  // Every search path accumulates in this order so totals are bit-identical.
  double extend(double cost, const Picks &picks, std::size_t k, std::size_t pick) const {
    const std::size_t c = flat(k, pick);
    for (std::size_t i = 0; i < k; ++i) cost += dist(flat(i, picks[i]), c);
    return cost;
  }
};

// Scans complete assignments in lexicographic order; a later one wins only
// when strictly cheaper beyond the tolerance.
struct Best {
  double cost = std::numeric_limits<double>::infinity();
  Picks picks;

  void offer(double c, const Picks &p) {
    if (picks.empty() || c < cost - kEpsilon) {
      cost = c;
      picks = p;
    }
  }
};

void exhaustive(const Problem &pb, Picks &picks, std::size_t k, double cost, Best &best) {
  if (k == pb.vars()) {
    best.offer(cost, picks);
    return;
  }
  for (std::size_t c = 0; c < pb.size[k]; ++c) {
    picks[k] = c;
    exhaustive(pb, picks, k + 1, pb.extend(cost, picks, k, c), best);
  }
}

struct State {
  Picks picks;
  double cost = 0.0;
  double bound = 0.0;
};

// Admissible completion bound for states that have fixed variables [0, k):
// each free variable contributes its cheapest link to the fixed ones, and each
// free pair its cheapest pairwise distance.
class Lookahead {
 public:
  explicit Lookahead(const Problem &pb) : pb_(pb), free_pairs_(pb.vars() + 1, 0.0) {
    const std::size_t m = pb.vars();
    std::vector<std::vector<double>> pair_min(m, std::vector<double>(m, 0.0));
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < pb.size[u]; ++a) {
          for (std::size_t b = 0; b < pb.size[v]; ++b) best = std::min(best, pb.dist(pb.flat(u, a), pb.flat(v, b)));
        }
        pair_min[u][v] = best;
      }
    }
    for (std::size_t k = m; k-- > 0;) {
      double s = free_pairs_[k + 1];
      for (std::size_t v = k + 1; v < m; ++v) s += pair_min[k][v];
      free_pairs_[k] = s;
    }
  }

  double operator()(const Picks &picks, std::size_t k) const {
    double extra = free_pairs_[k];
    for (std::size_t u = k; u < pb_.vars(); ++u) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < pb_.size[u]; ++c) {
        double link = 0.0;
        for (std::size_t i = 0; i < k; ++i) link += pb_.dist(pb_.flat(i, picks[i]), pb_.flat(u, c));
        best = std::min(best, link);
      }
      extra += best;
    }
    return extra;
  }

 private:
  const Problem &pb_;
  std::vector<double> free_pairs_;
};

// Orders by bound, treating bounds within the tolerance of a run's first
// element as equal and ordering those by picks.
void rank(std::vector<State> &states) {
  std::sort(states.begin(), states.end(), [](const State &a, const State &b) {
    return a.bound != b.bound ? a.bound < b.bound : a.picks < b.picks;
  });
  for (std::size_t i = 0; i < states.size();) {
    std::size_t j = i + 1;
    while (j < states.size() && states[j].bound - states[i].bound <= kEpsilon) ++j;
    std::sort(states.begin() + static_cast<std::ptrdiff_t>(i), states.begin() + static_cast<std::ptrdiff_t>(j),
              [](const State &a, const State &b) { return a.picks < b.picks; });
    i = j;
  }
}

Best beam(const Problem &pb, std::size_t width) {
  const Lookahead lookahead(pb);
  std::vector<State> states(1);
  for (std::size_t k = 0; k < pb.vars(); ++k) {
    std::vector<State> next;
    next.reserve(states.size() * pb.size[k]);
    for (const State &s : states) {
      for (std::size_t c = 0; c < pb.size[k]; ++c) {
        State n{s.picks, 0.0, 0.0};
        n.picks.push_back(c);
        n.cost = pb.extend(s.cost, n.picks, k, c);
        n.bound = n.cost + lookahead(n.picks, k + 1);
        next.push_back(std::move(n));
      }
    }
    rank(next);
    if (next.size() > width) next.resize(width);
    states = std::move(next);
  }
  std::sort(states.begin(), states.end(), [](const State &a, const State &b) { return a.picks < b.picks; });
  Best best;
  for (const State &s : states) best.offer(s.cost, s.picks);
  return best;
}

}  // namespace

Disambiguation disambiguate(const std::vector<std::vector<SenseCandidate>> &groups,
                            const DisambiguationOptions &options) {
  Disambiguation out;
  out.chosen.assign(groups.size(), std::nullopt);

  Problem pb;
  std::vector<std::size_t> var_group;
  std::vector<SenseCandidate> flat;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<const SenseCandidate *> sorted;
    for (const SenseCandidate &c : groups[g]) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const SenseCandidate *a, const SenseCandidate *b) { return a->concept_id < b->concept_id; });
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](const SenseCandidate *a, const SenseCandidate *b) {
                               return a->concept_id == b->concept_id;
                             }),
                 sorted.end());
    if (sorted.empty()) continue;
    var_group.push_back(g);
    pb.offset.push_back(flat.size());
    pb.size.push_back(sorted.size());
    for (const SenseCandidate *c : sorted) {
      flat.push_back(*c);
      pb.ids.push_back(c->concept_id);
    }
  }
  if (var_group.empty()) {
    out.empty = true;
    return out;
  }
  pb.d = distance_matrix(flat);

  std::size_t combinations = 1;
  for (std::size_t s : pb.size) {
    combinations = combinations > std::numeric_limits<std::size_t>::max() / s
                       ? std::numeric_limits<std::size_t>::max()
                       : combinations * s;
  }
  bool use_exhaustive = options.strategy == SearchStrategy::kExhaustive ||
                        (options.strategy == SearchStrategy::kAuto && combinations <= options.exhaustive_bound);

  Best best;
  if (use_exhaustive) {
    Picks picks(pb.vars(), 0);
    exhaustive(pb, picks, 0, 0.0, best);
  } else {
    best = beam(pb, std::max<std::size_t>(options.beam_width, 1));
  }
  out.exhaustive = use_exhaustive;
  out.cost = best.cost;
  for (std::size_t v = 0; v < pb.vars(); ++v) out.chosen[var_group[v]] = pb.ids[pb.flat(v, best.picks[v])];
  return out;
}

}  // namespace taxsan::annotate
