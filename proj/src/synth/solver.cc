// Copyright 2026 The Minipol Authors
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

#include "minipol/synth/solver.h"

#include <stdexcept>
#include <vector>

namespace minipol {

namespace {

struct Timeout {};

class Search {
 public:
  Search(const ConstraintSystem& cs, const SolverOptions& options)
      : cs_(cs), options_(options), rows_(cs.row_values.size()) {
    for (int i = 0; i < cs.n0; ++i) {
      std::vector<Scalar> column(rows_);
      for (size_t r = 0; r < rows_; ++r) column[r] = cs.row_values[r][i];
      pool_.push_back({cs.inputs[i].type, std::move(column), -1});
    }
    used_.assign(cs.blocks.size(), false);
    for (size_t b = 0; b < cs.blocks.size(); ++b) {
      size_t c = 0;
      while (!cs.blocks[c].SameClass(cs.blocks[b])) ++c;
      class_key_.push_back(c);
    }
  }

  SolveResult Run() {
    SolveResult result;
    try {
      if (cs_.blocks.empty()) {
        SolveTrivial(result);
      } else {
        for (size_t k = 1; k <= cs_.blocks.size(); ++k) {
          if (Extend(0, static_cast<int>(k), result)) break;
        }
      }
    } catch (const Timeout&) {
      result.status = SolveStatus::kTimeout;
      result.model.clear();
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Operand {
    Type type;
    std::vector<Scalar> values;  // per row
    int block = -1;              // index into cs_.blocks; -1 for an input
    int args[2] = {-1, -1};      // pool indices
    int consumers = 0;
  };

  void Tick() {
    ++nodes_;
    if ((nodes_ & 1023) == 0 && options_.deadline &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      throw Timeout{};
    }
  }

  bool MatchesExpected(const std::vector<Scalar>& values) const {
    for (size_t r = 0; r < rows_; ++r) {
      if ((values[r].i != 0) != cs_.expected[r]) return false;
    }
    return true;
  }

  bool SameValues(const Operand& a, const std::vector<Scalar>& values) const {
    for (size_t r = 0; r < rows_; ++r) {
      if (!a.values[r].Equals(values[r], a.type)) return false;
    }
    return true;
  }

  void SolveTrivial(SolveResult& result) {
    for (int i = 0; i < cs_.n0; ++i) {
      Tick();
      if (pool_[i].type == Type::kBool && MatchesExpected(pool_[i].values)) {
        for (int j = 0; j < cs_.n0; ++j) {
          result.model[ConstraintSystem::InputLoc(j)] = j + 1;
        }
        result.model[ConstraintSystem::kRootLoc] = i + 1;
        result.status = SolveStatus::kSat;
        return;
      }
    }
  }

  // Identical blocks are used in id order.
  bool Usable(size_t b) const {
    if (used_[b]) return false;
    for (size_t c = 0; c < b; ++c) {
      if (!used_[c] && cs_.blocks[c].SameClass(cs_.blocks[b])) return false;
    }
    return true;
  }

  // Two adjacent lines where the second does not read the first can be
  // swapped, so only the order with non-decreasing class keys is explored.
  bool InCanonicalOrder(size_t b, int a0, int a1) const {
    const int prev = static_cast<int>(pool_.size()) - 1;
    if (prev < cs_.n0 || a0 == prev || a1 == prev) return true;
    return class_key_[pool_[prev].block] <= class_key_[b];
  }

  int UnconsumedLines() const {
    int count = 0;
    for (size_t p = cs_.n0; p < pool_.size(); ++p) {
      if (pool_[p].consumers == 0) ++count;
    }
    return count;
  }

  // Places line `depth` of a `k`-line program.
  bool Extend(int depth, int k, SolveResult& result) {
    const bool last = depth == k - 1;
    for (size_t b = 0; b < cs_.blocks.size(); ++b) {
      const BuildingBlock& block = cs_.blocks[b];
      if (!Usable(b)) continue;
      if (last && block.result_type != Type::kBool) continue;
      std::vector<int> candidates;
      for (size_t p = 0; p < pool_.size(); ++p) {
        if (pool_[p].type == block.operand_type) {
          candidates.push_back(static_cast<int>(p));
        }
      }
      const bool commutative = IsCommutative(block.op);
      const size_t n = candidates.size();
      for (size_t x = 0; x < n; ++x) {
        if (block.arity() == 1) {
          if (TryLine(b, candidates[x], -1, depth, k, result)) return true;
          continue;
        }
        for (size_t y = commutative ? x : 0; y < n; ++y) {
          if (TryLine(b, candidates[x], candidates[y], depth, k, result)) {
            return true;
          }
        }
      }
    }
    return false;
  }

  bool TryLine(size_t b, int a0, int a1, int depth, int k,
               SolveResult& result) {
    if (!InCanonicalOrder(b, a0, a1)) return false;
    Tick();
    const BuildingBlock& block = cs_.blocks[b];
    const bool last = depth == k - 1;
    std::vector<Scalar> values(rows_);
    for (size_t r = 0; r < rows_; ++r) {
      Scalar args[2] = {pool_[a0].values[r],
                        a1 >= 0 ? pool_[a1].values[r] : Scalar{}};
      auto v = ApplyBlock(block, args);
      if (!v) return false;
      values[r] = *v;
    }
    if (last && !MatchesExpected(values)) return false;
    if (!last) {
      // A line equal to an existing operand can be replaced by it.
      for (const auto& op : pool_) {
        if (op.type == block.result_type && SameValues(op, values)) {
          return false;
        }
      }
    }
    pool_[a0].consumers++;
    if (a1 >= 0) pool_[a1].consumers++;
    bool found = false;
    if (last) {
      found = UnconsumedLines() == 0 && Complete(b, a0, a1, result);
    } else {
      // Every later line nets at most one consumption, the final one two.
      const int remaining = k - depth - 1;
      if (UnconsumedLines() + 1 <= remaining + 1) {
        used_[b] = true;
        pool_.push_back({block.result_type, std::move(values),
                         static_cast<int>(b), {a0, a1}});
        found = Extend(depth + 1, k, result);
        pool_.pop_back();
        used_[b] = false;
      }
    }
    pool_[a0].consumers--;
    if (a1 >= 0) pool_[a1].consumers--;
    return found;
  }

  // Turns the program in pool_ plus a final line into a location model.
  bool Complete(size_t root_block, int a0, int a1, SolveResult& result) {
    const int n0 = cs_.n0;
    std::vector<Operand> lines(pool_.begin() + n0, pool_.end());
    lines.push_back({Type::kBool, {}, static_cast<int>(root_block), {a0, a1}});

    std::vector<bool> placed_block(cs_.blocks.size(), false);
    std::vector<int> line_slot(lines.size(), 0);
    std::vector<bool> type_available(5, false);
    for (const auto& in : cs_.inputs) type_available[int(in.type)] = true;
    std::vector<bool> in_program(cs_.blocks.size(), false);
    for (const auto& l : lines) in_program[l.block] = true;

    LocationModel model;
    for (int i = 0; i < n0; ++i) model[ConstraintSystem::InputLoc(i)] = i + 1;
    int next_slot = n0 + 1;
    size_t next_line = 0;
    auto locate = [&](int pool_index) {
      return pool_index < n0 ? pool_index + 1 : line_slot[pool_index - n0];
    };
    while (next_slot <= cs_.m) {
      bool progressed = false;
      // Park any placeable unused block first, lowest id first.
      for (size_t b = 0; b < cs_.blocks.size() && !progressed; ++b) {
        const BuildingBlock& block = cs_.blocks[b];
        if (in_program[b] || placed_block[b] ||
            !type_available[int(block.operand_type)]) {
          continue;
        }
        int64_t source = FirstOfType(block.operand_type, model);
        model[ConstraintSystem::OutputLoc(block)] = next_slot;
        for (int k = 0; k < block.arity(); ++k) {
          model[ConstraintSystem::ArgLoc(block, k)] = source;
        }
        placed_block[b] = true;
        type_available[int(block.result_type)] = true;
        ++next_slot;
        progressed = true;
      }
      if (progressed) continue;
      if (next_line == lines.size()) break;
      if (next_line + 1 == lines.size() && next_slot != cs_.m) return false;
      const Operand& line = lines[next_line];
      const BuildingBlock& block = cs_.blocks[line.block];
      line_slot[next_line] = next_slot;
      model[ConstraintSystem::OutputLoc(block)] = next_slot;
      for (int k = 0; k < block.arity(); ++k) {
        model[ConstraintSystem::ArgLoc(block, k)] = locate(line.args[k]);
      }
      type_available[int(block.result_type)] = true;
      ++next_line;
      ++next_slot;
    }
    if (next_line != lines.size()) return false;
    model[ConstraintSystem::kRootLoc] = cs_.m;
    if (!cs_.IsWellFormed(model)) {
      throw std::logic_error("solver produced a malformed location model");
    }
    result.model = std::move(model);
    result.status = SolveStatus::kSat;
    return true;
  }

  int64_t FirstOfType(Type type, const LocationModel& model) const {
    for (int i = 0; i < cs_.n0; ++i) {
      if (cs_.inputs[i].type == type) return i + 1;
    }
    int64_t best = 0;
    for (const auto& b : cs_.blocks) {
      auto it = model.find(ConstraintSystem::OutputLoc(b));
      if (b.result_type == type && it != model.end() &&
          (best == 0 || it->second < best)) {
        best = it->second;
      }
    }
    return best;
  }

  const ConstraintSystem& cs_;
  const SolverOptions& options_;
  size_t rows_;
  std::vector<Operand> pool_;
  std::vector<bool> used_;
  std::vector<size_t> class_key_;
  int64_t nodes_ = 0;
};

}  // namespace

SolveResult Solve(const ConstraintSystem& system,
                  const SolverOptions& options) {
  return Search(system, options).Run();
}

}  // namespace minipol
