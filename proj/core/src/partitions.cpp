#include "hmi/partitions.hpp"

#include <algorithm>

namespace hmi {
namespace {

void check_order(const MultiIndex& k) {
  if (k.size() == 0) throw Error("multi-index has no entries");
  if (k.is_zero()) throw Error("empty multiset");
  if (k.manhattan_norm() > kMaxPartitionOrder)
    throw Error("partition order " + std::to_string(k.manhattan_norm()) +
                " exceeds the supported maximum " + std::to_string(kMaxPartitionOrder));
}

// Calls `emit` with every nonzero b <= remaining (componentwise) that is
// lexicographically <= bound, in descending lexicographic order.
class BlockGenerator {
 public:
  BlockGenerator(const std::vector<int>& remaining, const std::vector<int>& bound)
      : remaining_(remaining), bound_(bound), current_(remaining.size(), 0) {}

  template <typename Emit>
  void run(Emit&& emit) { descend(0, true, emit); }

 private:
  template <typename Emit>
  void descend(std::size_t i, bool tight, Emit& emit) {
    if (i == current_.size()) {
      if (std::any_of(current_.begin(), current_.end(), [](int v) { return v != 0; }))
        emit(current_);
      return;
    }
    int hi = tight ? std::min(remaining_[i], bound_[i]) : remaining_[i];
    for (int v = hi; v >= 0; --v) {
      current_[i] = v;
      descend(i + 1, tight && v == bound_[i], emit);
    }
    current_[i] = 0;
  }

  const std::vector<int>& remaining_;
  const std::vector<int>& bound_;
  std::vector<int> current_;
};

void enumerate(const std::vector<int>& remaining, std::vector<int> bound,
               std::vector<std::vector<int>>& stack,
               const std::function<void(const Partition&)>& visit) {
  if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) {
    Partition partition;
    partition.blocks.reserve(stack.size());
    for (const auto& block : stack) partition.blocks.emplace_back(block);
    visit(partition);
    return;
  }
  BlockGenerator(remaining, bound).run([&](const std::vector<int>& block) {
    std::vector<int> next_remaining = remaining;
    for (std::size_t i = 0; i < block.size(); ++i) next_remaining[i] -= block[i];
    stack.push_back(block);
    enumerate(next_remaining, block, stack, visit);
    stack.pop_back();
  });
}

BigInt multi_factorial(const MultiIndex& k) {
  BigInt value = 1;
  for (int v : k.entries()) value *= factorial(static_cast<unsigned>(v));
  return value;
}

std::string block_string(const MultiIndex& block) {
  bool small = block.size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (int r = 0; r < block[i]; ++r) {
      if (!small && !out.empty()) out += '.';
      out += std::to_string(i + 1);
    }
  }
  return out;
}

}  // namespace

MultiIndex Partition::total() const {
  if (blocks.empty()) return {};
  MultiIndex sum(blocks.front().size());
  for (const auto& b : blocks) sum += b;
  return sum;
}

std::vector<std::pair<MultiIndex, int>> Partition::block_multiplicities() const {
  std::vector<std::pair<MultiIndex, int>> out;
  for (const auto& b : blocks) {
    if (!out.empty() && out.back().first == b) {
      ++out.back().second;
    } else {
      out.emplace_back(b, 1);
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out = "{";
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j) out += '|';
    out += block_string(blocks[j]);
  }
  return out + "}";
}

void for_each_partition(const MultiIndex& k,
                        const std::function<void(const Partition&)>& visit) {
  check_order(k);
  std::vector<int> remaining(k.entries().begin(), k.entries().end());
  std::vector<std::vector<int>> stack;
  enumerate(remaining, remaining, stack, visit);
}

std::vector<Partition> enumerate_partitions(const MultiIndex& k) {
  std::vector<Partition> out;
  for_each_partition(k, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Rational collapse_number(const Partition& partition) {
  if (partition.blocks.empty()) throw Error("partition has no blocks");
  BigInt denominator = 1;
  for (const auto& b : partition.blocks) {
    if (b.is_zero()) throw Error("partition contains an empty block");
    denominator *= multi_factorial(b);
  }
  for (const auto& [block, count] : partition.block_multiplicities())
    denominator *= factorial(static_cast<unsigned>(count));
  return Rational(multi_factorial(partition.total()), denominator);
}

std::string ChainRuleTerm::to_string() const {
  std::string out;
  if (coefficient != 1) out += hmi::to_string(coefficient) + " ";
  out += outer_order == 1 ? "Dg" : "D^" + std::to_string(outer_order) + "g";
  for (std::size_t j = 0; j < inner.size();) {
    std::size_t run = j;
    while (run < inner.size() && inner[run] == inner[j]) ++run;
    out += " D^{" + inner[j].compact() + "}h";
    if (run - j > 1) out += "^" + std::to_string(run - j);
    j = run;
  }
  return out;
}

std::vector<ChainRuleTerm> chain_rule_terms(const MultiIndex& k) {
  std::vector<ChainRuleTerm> terms;
  for_each_partition(k, [&](const Partition& p) {
    terms.push_back({collapse_number(p), static_cast<int>(p.size()), p.blocks});
  });
  return terms;
}

std::vector<CumulantTerm> cumulant_expansion(const MultiIndex& k) {
  std::vector<CumulantTerm> terms;
  for_each_partition(k, [&](const Partition& p) {
    Rational c = collapse_number(p);
    const auto blocks = static_cast<unsigned>(p.size());
    Rational weight = c * Rational(factorial(blocks - 1));
    if (blocks % 2 == 0) weight = -weight;
    terms.push_back({p, c, weight});
  });
  return terms;
}

}  // namespace hmi
