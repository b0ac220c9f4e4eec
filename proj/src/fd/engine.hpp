// Copyright 2026 The csm Authors
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

#ifndef CSM_SRC_FD_ENGINE_HPP_
#define CSM_SRC_FD_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "csm/fd/problem.hpp"

namespace csm::fd {

enum class Truth { kFalse, kTrue, kUnknown };

// Propagation state plus depth-first search over one Problem. Domains are
// restored on backtrack from a trail of saved domains.
class Engine {
 public:
  using BoundFn = std::function<std::optional<std::int64_t>()>;
  // Returning false stops the search.
  using EmitFn = std::function<bool(Solution)>;

  explicit Engine(const Problem& problem);

  // When `bound` yields a value, every node constrains the objective to be at
  // most that value before propagating.
  void search(std::optional<BoundFn> bound, const EmitFn& emit);

 private:
  const Domain& dom(VarId v) const { return doms_[v.index]; }

  bool set_min(VarId v, std::int64_t lo);
  bool set_max(VarId v, std::int64_t hi);
  bool remove(VarId v, std::int64_t value);
  bool assign(VarId v, std::int64_t value);
  bool intersect(VarId v, const Domain& other);
  void save(VarId v);
  void changed(VarId v);
  void flush_changed();
  struct Mark {
    std::size_t domains;
    std::size_t entailments;
  };
  Mark mark() const { return {trail_.size(), entail_trail_.size()}; }
  void undo(const Mark& mark);

  bool fixpoint();
  void drop_queue();
  bool propagate(const Constraint& c);
  // True when `c` holds for every completion of the current domains.
  bool entailed_now(const Constraint& c) const;
  void mark_entailed(std::uint32_t c);
  bool propagate_element(const ElementAtom& e, Op op, bool allow_out_of_range);
  bool propagate_compare(VarId left, Op op, const Operand& right);
  bool propagate_reified(const ReifiedAtom& r);
  bool propagate_sum(const WeightedSum& s);

  Truth truth(const Atom& atom) const;
  Truth element_truth(const ElementAtom& e) const;
  Truth compare_truth(const Domain& left, Op op, const Domain& right) const;
  Truth compare_truth(const Domain& left, Op op, std::int64_t right) const;
  Truth compare_truth(const Domain& left, Op op, const Operand& right) const;

  bool apply_bound();
  bool dfs(std::size_t depth);
  bool verify_leaf() const;

  const Problem& problem_;
  std::vector<Domain> doms_;
  std::vector<std::vector<std::uint32_t>> watchers_;
  std::vector<std::uint32_t> queue_;
  std::vector<char> queued_;
  // Variables modified since their watchers were last queued.
  std::vector<VarId> dirty_;
  std::vector<char> is_dirty_;

  // Entailed constraints are skipped until the search backtracks past the
  // point where they became entailed.
  std::vector<char> entailed_;
  std::vector<std::uint32_t> entail_trail_;

  // Single-interval domains are saved inline; `old` is used otherwise.
  struct TrailEntry {
    VarId var;
    Domain::Interval range{0, -1};
    bool inline_range = false;
    Domain old;
  };
  std::vector<TrailEntry> trail_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t node_ = 1;

  std::vector<VarId> order_;
  std::optional<BoundFn> bound_;
  const EmitFn* emit_ = nullptr;
};

// Direct evaluation under a complete assignment (indexed by VarId).
bool Evaluate(const Constraint& c, const std::vector<std::int64_t>& values);

}  // namespace csm::fd

#endif  // CSM_SRC_FD_ENGINE_HPP_
