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

#include "engine.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace csm::fd {
namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

using Wide = __int128;

std::int64_t Clamp(Wide v) {
  if (v < kMin) return kMin;
  if (v > kMax) return kMax;
  return static_cast<std::int64_t>(v);
}

Wide Abs(Wide v) { return v < 0 ? -v : v; }

void CollectVars(const Atom& atom, std::vector<VarId>& out) {
  if (const auto* e = std::get_if<ElementAtom>(&atom)) {
    out.push_back(e->index);
    if (const VarId* v = std::get_if<VarId>(&e->value)) out.push_back(*v);
  } else {
    const auto& c = std::get<CompareAtom>(atom);
    out.push_back(c.left);
    if (const VarId* v = std::get_if<VarId>(&c.right)) out.push_back(*v);
  }
}

std::vector<VarId> ConstraintVars(const Constraint& c) {
  std::vector<VarId> out;
  std::visit(
      [&out](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ElementAtom> || std::is_same_v<T, CompareAtom>) {
          CollectVars(Atom(k), out);
        } else if constexpr (std::is_same_v<T, ReifiedAtom>) {
          CollectVars(k.atom, out);
          out.push_back(k.truth);
        } else {
          out.push_back(k.total);
          for (const SumTerm& t : k.terms) out.push_back(t.var);
        }
      },
      c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t OperandValue(const Operand& o, const std::vector<std::int64_t>& values) {
  if (const VarId* v = std::get_if<VarId>(&o)) return values[v->index];
  return std::get<std::int64_t>(o);
}

bool EvaluateAtom(const Atom& atom, const std::vector<std::int64_t>& values) {
  if (const auto* e = std::get_if<ElementAtom>(&atom)) {
    const std::int64_t k = values[e->index.index];
    if (k < 0 || k >= static_cast<std::int64_t>(e->list.size())) return false;
    return Holds(e->list[static_cast<std::size_t>(k)], e->op,
                 OperandValue(e->value, values));
  }
  const auto& c = std::get<CompareAtom>(atom);
  return Holds(values[c.left.index], c.op, OperandValue(c.right, values));
}

Wide TermValue(const SumTerm& t, std::int64_t x) {
  switch (t.kind) {
    case SumTerm::Kind::kValue: return Wide(t.weight) * x;
    case SumTerm::Kind::kFalsity: return Wide(t.weight) * (1 - Wide(x));
    case SumTerm::Kind::kDistance: return Wide(t.weight) * Abs(Wide(x) - t.reference);
  }
  return 0;
}

}  // namespace

bool Evaluate(const Constraint& c, const std::vector<std::int64_t>& values) {
  return std::visit(
      [&values](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ElementAtom> || std::is_same_v<T, CompareAtom>) {
          return EvaluateAtom(Atom(k), values);
        } else if constexpr (std::is_same_v<T, ReifiedAtom>) {
          return values[k.truth.index] == (EvaluateAtom(k.atom, values) ? 1 : 0);
        } else {
          Wide sum = 0;
          for (const SumTerm& t : k.terms) sum += TermValue(t, values[t.var.index]);
          return Wide(values[k.total.index]) == sum;
        }
      },
      c);
}

Engine::Engine(const Problem& problem) : problem_(problem) {
  const auto& vars = problem.variables();
  doms_.reserve(vars.size());
  for (const auto& v : vars) doms_.push_back(v.domain);
  watchers_.resize(vars.size());
  stamp_.assign(vars.size(), 0);
  const auto& cs = problem.constraints();
  queued_.assign(cs.size(), 0);
  entailed_.assign(cs.size(), 0);
  is_dirty_.assign(vars.size(), 0);
  for (std::uint32_t i = 0; i < cs.size(); ++i) {
    for (VarId v : ConstraintVars(cs[i])) watchers_[v.index].push_back(i);
  }
  for (std::uint32_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].auxiliary) order_.push_back(VarId{i});
  }
  for (std::uint32_t i = 0; i < vars.size(); ++i) {
    if (vars[i].auxiliary) order_.push_back(VarId{i});
  }
}

void Engine::save(VarId v) {
  if (stamp_[v.index] == node_) return;
  stamp_[v.index] = node_;
  const Domain& d = doms_[v.index];
  if (d.intervals().size() == 1) {
    trail_.push_back({v, d.intervals()[0], true, Domain()});
  } else {
    trail_.push_back({v, {0, -1}, false, d});
  }
}

// Watchers are queued lazily: a variable narrowed many times during one pass
// over the queue wakes its watchers once.
void Engine::changed(VarId v) {
  if (is_dirty_[v.index]) return;
  is_dirty_[v.index] = 1;
  dirty_.push_back(v);
}

void Engine::flush_changed() {
  for (VarId v : dirty_) {
    is_dirty_[v.index] = 0;
    for (std::uint32_t c : watchers_[v.index]) {
      if (queued_[c] || entailed_[c]) continue;
      queued_[c] = 1;
      queue_.push_back(c);
    }
  }
  dirty_.clear();
}

void Engine::undo(const Mark& mark) {
  while (entail_trail_.size() > mark.entailments) {
    entailed_[entail_trail_.back()] = 0;
    entail_trail_.pop_back();
  }
  while (trail_.size() > mark.domains) {
    TrailEntry& e = trail_.back();
    if (e.inline_range) {
      doms_[e.var.index].reset(e.range.lo, e.range.hi);
    } else {
      doms_[e.var.index] = std::move(e.old);
    }
    stamp_[e.var.index] = 0;
    trail_.pop_back();
  }
}

bool Engine::set_min(VarId v, std::int64_t lo) {
  Domain& d = doms_[v.index];
  if (lo <= d.min()) return true;
  save(v);
  d.restrict_min(lo);
  changed(v);
  return !d.empty();
}

bool Engine::set_max(VarId v, std::int64_t hi) {
  Domain& d = doms_[v.index];
  if (hi >= d.max()) return true;
  save(v);
  d.restrict_max(hi);
  changed(v);
  return !d.empty();
}

bool Engine::remove(VarId v, std::int64_t value) {
  Domain& d = doms_[v.index];
  if (!d.contains(value)) return true;
  save(v);
  d.remove(value);
  changed(v);
  return !d.empty();
}

bool Engine::assign(VarId v, std::int64_t value) {
  Domain& d = doms_[v.index];
  if (!d.contains(value)) return false;
  if (d.fixed()) return true;
  save(v);
  d.assign(value);
  changed(v);
  return true;
}

bool Engine::intersect(VarId v, const Domain& other) {
  if (doms_[v.index].subset_of(other)) return true;
  Domain narrowed = doms_[v.index];
  if (!narrowed.intersect(other)) return true;
  save(v);
  doms_[v.index] = std::move(narrowed);
  changed(v);
  return !doms_[v.index].empty();
}


bool Engine::fixpoint() {
  bool ok = true;
  std::size_t head = 0;
  const auto& cs = problem_.constraints();
  for (;;) {
    if (head == queue_.size()) {
      if (dirty_.empty()) break;
      flush_changed();
      continue;
    }
    const std::uint32_t c = queue_[head++];
    queued_[c] = 0;
    if (entailed_[c]) continue;
    if (!propagate(cs[c])) {
      ok = false;
      break;
    }
    if (entailed_now(cs[c])) mark_entailed(c);
  }
  queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(head));
  drop_queue();
  return ok;
}

void Engine::mark_entailed(std::uint32_t c) {
  entailed_[c] = 1;
  entail_trail_.push_back(c);
}

bool Engine::entailed_now(const Constraint& c) const {
  // Element truth scans the index domain, so only fixed indexes are checked.
  const auto element = [this](const ElementAtom& e) {
    return dom(e.index).fixed() ? element_truth(e) : Truth::kUnknown;
  };
  const auto compare = [this](const CompareAtom& k) {
    return compare_truth(dom(k.left), k.op, k.right);
  };
  return std::visit(
      [&](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ElementAtom>) {
          return element(k) == Truth::kTrue;
        } else if constexpr (std::is_same_v<T, CompareAtom>) {
          return compare(k) == Truth::kTrue;
        } else if constexpr (std::is_same_v<T, ReifiedAtom>) {
          if (!dom(k.truth).fixed()) return false;
          const auto* e = std::get_if<ElementAtom>(&k.atom);
          const Truth t = e ? element(*e) : compare(std::get<CompareAtom>(k.atom));
          return t != Truth::kUnknown && (t == Truth::kTrue) == (dom(k.truth).value() == 1);
        } else {
          return false;
        }
      },
      c);
}

void Engine::drop_queue() {
  for (std::uint32_t c : queue_) queued_[c] = 0;
  queue_.clear();
  for (VarId v : dirty_) is_dirty_[v.index] = 0;
  dirty_.clear();
}

bool Engine::propagate(const Constraint& c) {
  return std::visit(
      [this](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ElementAtom>) {
          return propagate_element(k, k.op, false);
        } else if constexpr (std::is_same_v<T, CompareAtom>) {
          return propagate_compare(k.left, k.op, k.right);
        } else if constexpr (std::is_same_v<T, ReifiedAtom>) {
          return propagate_reified(k);
        } else {
          return propagate_sum(k);
        }
      },
      c);
}

bool Engine::propagate_element(const ElementAtom& e, Op op, bool allow_out_of_range) {
  const std::int64_t n = static_cast<std::int64_t>(e.list.size());
  if (!allow_out_of_range) {
    if (!set_min(e.index, 0) || !set_max(e.index, n - 1)) return false;
  }
  const VarId* value_var = std::get_if<VarId>(&e.value);
  if (dom(e.index).fixed()) {
    const std::int64_t k = dom(e.index).value();
    if (k < 0 || k >= n) return allow_out_of_range;
    const std::int64_t x = e.list[static_cast<std::size_t>(k)];
    if (!value_var) return Holds(x, op, std::get<std::int64_t>(e.value));
    return propagate_compare(*value_var, Mirror(op), x);
  }
  // Copied: the index and value may be the same variable.
  const Domain value_dom = value_var ? dom(*value_var) : Domain();
  const std::int64_t constant = value_var ? 0 : std::get<std::int64_t>(e.value);

  auto supported = [&](std::int64_t x) {
    if (!value_var) return Holds(x, op, constant);
    switch (op) {
      case Op::kEq: return value_dom.contains(x);
      case Op::kNe: return !(value_dom.fixed() && value_dom.value() == x);
      case Op::kLt: return x < value_dom.max();
      case Op::kLe: return x <= value_dom.max();
      case Op::kGt: return x > value_dom.min();
      case Op::kGe: return x >= value_dom.min();
    }
    return false;
  };

  // Drop unsupported in-range index values.
  std::vector<std::int64_t> doomed;
  bool out_of_range = false;
  std::vector<std::int64_t> surviving;
  for (const Domain::Interval& iv : dom(e.index).intervals()) {
    if (iv.lo < 0 || iv.hi >= n) out_of_range = true;
    const std::int64_t lo = std::max<std::int64_t>(iv.lo, 0);
    const std::int64_t hi = std::min<std::int64_t>(iv.hi, n - 1);
    for (std::int64_t k = lo; k <= hi; ++k) {
      const std::int64_t x = e.list[static_cast<std::size_t>(k)];
      if (supported(x)) {
        surviving.push_back(x);
      } else {
        doomed.push_back(k);
      }
    }
  }
  if (!doomed.empty()) {
    if (!out_of_range && doomed.size() > 8) {
      std::vector<std::int64_t> keep;
      std::size_t j = 0;
      dom(e.index).for_each([&](std::int64_t k) {
        if (j < doomed.size() && doomed[j] == k) {
          ++j;
        } else {
          keep.push_back(k);
        }
      });
      if (!intersect(e.index, Domain::Values(keep))) return false;
    } else {
      for (std::int64_t k : doomed) {
        if (!remove(e.index, k)) return false;
      }
    }
  }
  if (!value_var || (allow_out_of_range && out_of_range)) return true;
  if (surviving.empty()) return false;

  // Narrow the value variable to what the surviving entries support.
  const auto [lo_it, hi_it] = std::minmax_element(surviving.begin(), surviving.end());
  const std::int64_t lo = *lo_it;
  const std::int64_t hi = *hi_it;
  switch (op) {
    case Op::kEq: return intersect(*value_var, Domain::Values(surviving));
    case Op::kNe: return lo != hi || remove(*value_var, lo);
    case Op::kLt: return lo != kMax && set_min(*value_var, lo + 1);
    case Op::kLe: return set_min(*value_var, lo);
    case Op::kGt: return hi != kMin && set_max(*value_var, hi - 1);
    case Op::kGe: return set_max(*value_var, hi);
  }
  return true;
}

bool Engine::propagate_compare(VarId left, Op op, const Operand& right) {
  if (const std::int64_t* c = std::get_if<std::int64_t>(&right)) {
    switch (op) {
      case Op::kEq: return assign(left, *c);
      case Op::kNe: return remove(left, *c);
      case Op::kLt: return *c != kMin && set_max(left, *c - 1);
      case Op::kLe: return set_max(left, *c);
      case Op::kGt: return *c != kMax && set_min(left, *c + 1);
      case Op::kGe: return set_min(left, *c);
    }
    return true;
  }
  VarId x = left;
  VarId y = std::get<VarId>(right);
  if (x == y) return Holds(0, op, 0);
  if (op == Op::kGt || op == Op::kGe) {
    std::swap(x, y);
    op = Mirror(op);
  }
  switch (op) {
    case Op::kEq: {
      if (dom(y).fixed()) return assign(x, dom(y).value());
      if (dom(x).fixed()) return assign(y, dom(x).value());
      const Domain ydom = dom(y);
      if (!intersect(x, ydom)) return false;
      const Domain xdom = dom(x);
      return intersect(y, xdom);
    }
    case Op::kNe:
      if (dom(y).fixed() && !remove(x, dom(y).value())) return false;
      if (dom(x).fixed() && !remove(y, dom(x).value())) return false;
      return true;
    case Op::kLt:
      if (dom(y).max() == kMin || dom(x).min() == kMax) return false;
      return set_max(x, dom(y).max() - 1) && set_min(y, dom(x).min() + 1);
    case Op::kLe:
      return set_max(x, dom(y).max()) && set_min(y, dom(x).min());
    default:
      return true;
  }
}

Truth Engine::compare_truth(const Domain& x, Op op, const Domain& y) const {
  switch (op) {
    case Op::kEq:
    case Op::kNe: {
      Truth eq = Truth::kUnknown;
      if (x.fixed() && y.fixed()) {
        eq = x.value() == y.value() ? Truth::kTrue : Truth::kFalse;
      } else if (x.max() < y.min() || y.max() < x.min()) {
        eq = Truth::kFalse;
      } else if (!x.intersects(y)) {
        eq = Truth::kFalse;
      }
      if (op == Op::kEq || eq == Truth::kUnknown) return eq;
      return eq == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
    }
    case Op::kLt:
      if (x.max() < y.min()) return Truth::kTrue;
      if (x.min() >= y.max()) return Truth::kFalse;
      return Truth::kUnknown;
    case Op::kLe:
      if (x.max() <= y.min()) return Truth::kTrue;
      if (x.min() > y.max()) return Truth::kFalse;
      return Truth::kUnknown;
    case Op::kGt:
      return compare_truth(y, Op::kLt, x);
    case Op::kGe:
      return compare_truth(y, Op::kLe, x);
  }
  return Truth::kUnknown;
}

Truth Engine::element_truth(const ElementAtom& e) const {
  const std::int64_t n = static_cast<std::int64_t>(e.list.size());
  const Domain& index = dom(e.index);
  bool any_true = false;
  bool any_false = index.min() < 0 || index.max() >= n;
  const std::int64_t* constant = std::get_if<std::int64_t>(&e.value);
  const Domain* value_dom = constant ? nullptr : &dom(std::get<VarId>(e.value));
  for (const Domain::Interval& iv : index.intervals()) {
    const std::int64_t lo = std::max<std::int64_t>(iv.lo, 0);
    const std::int64_t hi = std::min<std::int64_t>(iv.hi, n - 1);
    for (std::int64_t k = lo; k <= hi; ++k) {
      const std::int64_t x = e.list[static_cast<std::size_t>(k)];
      Truth t;
      if (constant) {
        t = Holds(x, e.op, *constant) ? Truth::kTrue : Truth::kFalse;
      } else {
        t = compare_truth(*value_dom, Mirror(e.op), x);
      }
      if (t == Truth::kUnknown) return t;
      (t == Truth::kTrue ? any_true : any_false) = true;
      if (any_true && any_false) return Truth::kUnknown;
    }
  }
  return any_true ? Truth::kTrue : Truth::kFalse;
}

Truth Engine::truth(const Atom& atom) const {
  if (const auto* e = std::get_if<ElementAtom>(&atom)) return element_truth(*e);
  const auto& c = std::get<CompareAtom>(atom);
  return compare_truth(dom(c.left), c.op, c.right);
}

Truth Engine::compare_truth(const Domain& left, Op op, const Operand& right) const {
  if (const VarId* v = std::get_if<VarId>(&right)) return compare_truth(left, op, dom(*v));
  return compare_truth(left, op, std::get<std::int64_t>(right));
}

Truth Engine::compare_truth(const Domain& x, Op op, std::int64_t c) const {
  const bool all = [&] {
    switch (op) {
      case Op::kEq: return x.fixed() && x.value() == c;
      case Op::kNe: return !x.contains(c);
      case Op::kLt: return x.max() < c;
      case Op::kLe: return x.max() <= c;
      case Op::kGt: return x.min() > c;
      case Op::kGe: return x.min() >= c;
    }
    return false;
  }();
  if (all) return Truth::kTrue;
  const bool none = [&] {
    switch (op) {
      case Op::kEq: return !x.contains(c);
      case Op::kNe: return x.fixed() && x.value() == c;
      case Op::kLt: return x.min() >= c;
      case Op::kLe: return x.min() > c;
      case Op::kGt: return x.max() <= c;
      case Op::kGe: return x.max() < c;
    }
    return false;
  }();
  return none ? Truth::kFalse : Truth::kUnknown;
}

bool Engine::propagate_reified(const ReifiedAtom& r) {
  if (!set_min(r.truth, 0) || !set_max(r.truth, 1)) return false;
  if (!dom(r.truth).fixed()) {
    switch (truth(r.atom)) {
      case Truth::kTrue: return assign(r.truth, 1);
      case Truth::kFalse: return assign(r.truth, 0);
      case Truth::kUnknown: return true;
    }
  }
  const bool holds = dom(r.truth).value() == 1;
  if (const auto* e = std::get_if<ElementAtom>(&r.atom)) {
    return holds ? propagate_element(*e, e->op, false)
                 : propagate_element(*e, Negate(e->op), true);
  }
  const auto& c = std::get<CompareAtom>(r.atom);
  return propagate_compare(c.left, holds ? c.op : Negate(c.op), c.right);
}

bool Engine::propagate_sum(const WeightedSum& s) {
  // Forward bounds only: the total is narrowed to the range the terms allow.
  Wide lo = 0;
  Wide hi = 0;
  for (const SumTerm& t : s.terms) {
    const Domain& d = dom(t.var);
    Wide a = 0;
    Wide b = 0;
    switch (t.kind) {
      case SumTerm::Kind::kValue:
        a = Wide(t.weight) * d.min();
        b = Wide(t.weight) * d.max();
        break;
      case SumTerm::Kind::kFalsity:
        a = Wide(t.weight) * (1 - Wide(d.max()));
        b = Wide(t.weight) * (1 - Wide(d.min()));
        break;
      case SumTerm::Kind::kDistance: {
        const Wide near = Abs(Wide(d.nearest(t.reference)) - t.reference);
        const Wide far = std::max(Abs(Wide(d.min()) - t.reference),
                                  Abs(Wide(d.max()) - t.reference));
        a = Wide(t.weight) * near;
        b = Wide(t.weight) * far;
        break;
      }
    }
    if (a > b) std::swap(a, b);
    lo += a;
    hi += b;
  }
  if (lo > kMax || hi < kMin) return false;
  return set_min(s.total, Clamp(lo)) && set_max(s.total, Clamp(hi));
}

bool Engine::apply_bound() {
  if (!bound_ || !problem_.objective()) return true;
  const std::optional<std::int64_t> best = (*bound_)();
  return !best || set_max(*problem_.objective(), *best);
}

bool Engine::verify_leaf() const {
  std::vector<std::int64_t> values;
  values.reserve(doms_.size());
  for (const Domain& d : doms_) {
    if (!d.fixed()) return false;
    values.push_back(d.value());
  }
  for (const Constraint& c : problem_.constraints()) {
    if (!Evaluate(c, values)) return false;
  }
  return true;
}

bool Engine::dfs(std::size_t depth) {
  while (depth < order_.size() && dom(order_[depth]).fixed()) ++depth;
  if (depth == order_.size()) {
    assert(verify_leaf());
    Solution s;
    const auto& vars = problem_.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!vars[i].auxiliary) s.assignment.emplace(vars[i].name, doms_[i].value());
    }
    if (problem_.objective()) s.objective_value = dom(*problem_.objective()).value();
    return (*emit_)(std::move(s));
  }
  const VarId var = order_[depth];
  const Domain snapshot = dom(var);
  for (const Domain::Interval& iv : snapshot.intervals()) {
    for (std::int64_t value = iv.lo;; ++value) {
      const Mark mark = this->mark();
      ++node_;
      bool keep = true;
      const bool ok = assign(var, value) && apply_bound();
      if (ok ? fixpoint() : (drop_queue(), false)) keep = dfs(depth + 1);
      undo(mark);
      if (!keep) return false;
      if (value == iv.hi) break;
    }
  }
  return true;
}

void Engine::search(std::optional<BoundFn> bound, const EmitFn& emit) {
  bound_ = std::move(bound);
  emit_ = &emit;
  for (std::uint32_t c = 0; c < problem_.constraints().size(); ++c) {
    queued_[c] = 1;
    queue_.push_back(c);
  }
  if (!fixpoint()) return;
  dfs(0);
}

}  // namespace csm::fd
