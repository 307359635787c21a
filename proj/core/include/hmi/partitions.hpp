#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hmi/error.hpp"
#include "hmi/multi_index.hpp"
#include "hmi/rational.hpp"

namespace hmi {

// Multiset partitions are enumerated exhaustively; Bell(12) is already
// about four million, so larger orders are refused.
inline constexpr int kMaxPartitionOrder = 12;

// A partition of the multiset whose multiplicity vector is `total()`.
// Blocks are kept in descending lexicographic order, so repeated blocks are
// adjacent and two partitions are equal iff their block lists are equal.
struct Partition {
  std::vector<MultiIndex> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  MultiIndex total() const;
  // Distinct blocks with their repeat counts (nu_pi).
  std::vector<std::pair<MultiIndex, int>> block_multiplicities() const;
  // {13|3} style: each block written as its multiset of variable indices.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.blocks <=> b.blocks;
  }
};

// Every partition of the multiset with multiplicity k, each exactly once,
// ordered descending lexicographically by block list ({133} before {13|3}).
std::vector<Partition> enumerate_partitions(const MultiIndex& k);

// Streaming form of enumerate_partitions; same order, no materialisation.
void for_each_partition(const MultiIndex& k,
                        const std::function<void(const Partition&)>& visit);

// c(pi) = nu_M! / (prod_j nu_{M_j}! * nu_pi!), factorials taken componentwise.
Rational collapse_number(const Partition& partition);

// One term of the multivariate chain rule
//   D^k g(h) = sum_pi c(pi) g^{(|pi|)}(h) prod_j D^{nu_{M_j}} h.
struct ChainRuleTerm {
  Rational coefficient;
  int outer_order = 0;
  std::vector<MultiIndex> inner;

  // "2 D^2g D^{101}h D^{001}h"
  std::string to_string() const;
};

std::vector<ChainRuleTerm> chain_rule_terms(const MultiIndex& k);

// A partition together with its weight c(pi) (-1)^{|pi|-1} (|pi|-1)! in the
// cumulant-from-moment expansion.
struct CumulantTerm {
  Partition partition;
  Rational collapse;
  Rational weight;
};

std::vector<CumulantTerm> cumulant_expansion(const MultiIndex& k);

// Moments m_k indexed by multi-index. The zero index, when stored, must hold 1.
template <typename Value>
class MomentTable {
 public:
  explicit MomentTable(std::size_t p) : p_(p) {}

  std::size_t dimension() const noexcept { return p_; }
  std::size_t size() const noexcept { return values_.size(); }

  void set(const MultiIndex& k, Value value) {
    if (k.size() != p_)
      throw Error("moment index " + k.to_string() + " has dimension " +
                  std::to_string(k.size()) + ", table has " + std::to_string(p_));
    if (k.is_zero() && value != Value(1)) throw Error("moment m_0 must equal 1");
    values_.insert_or_assign(k, std::move(value));
  }

  const Value* find(const MultiIndex& k) const {
    auto it = values_.find(k);
    return it == values_.end() ? nullptr : &it->second;
  }

  const Value& at(const MultiIndex& k) const {
    if (const Value* v = find(k)) return *v;
    throw Error("missing moment m_{" + k.to_string() + "}");
  }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

 private:
  std::size_t p_;
  std::map<MultiIndex, Value> values_;
};

using ExactMomentTable = MomentTable<Rational>;
using RealMomentTable = MomentTable<double>;

// sum_pi c(pi) (-1)^{|pi|-1} (|pi|-1)! prod_j moment(nu_{M_j}).
// `moment` is any callable MultiIndex -> Value; it is queried once per block.
template <typename Value, typename MomentFn>
Value cumulant_partition_sum(const MultiIndex& k, MomentFn&& moment) {
  Value total{0};
  for (const CumulantTerm& term : cumulant_expansion(k)) {
    Value product;
    if constexpr (std::is_same_v<Value, Rational>) {
      product = term.weight;
    } else {
      product = static_cast<Value>(to_double(term.weight));
    }
    for (const MultiIndex& block : term.partition.blocks) product *= moment(block);
    total += product;
  }
  return total;
}

template <typename Value>
Value cumulant_from_moments(const MultiIndex& k, const MomentTable<Value>& moments) {
  if (k.size() != moments.dimension())
    throw Error("cumulant index " + k.to_string() + " does not match moment table dimension");
  return cumulant_partition_sum<Value>(
      k, [&](const MultiIndex& block) -> const Value& { return moments.at(block); });
}

}  // namespace hmi
