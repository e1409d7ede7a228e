#pragma once

// Finite groups by multiplication table and towers of them joined by
// surjective homomorphisms. Used by the brute-force oracles, including the
// non-abelian Heisenberg tower where left and right translations differ.

#include "odo/tower.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace odo {

using Elem = std::uint32_t;

class FiniteGroup {
 public:
  static constexpr std::size_t kTableBound = 4096;

  // Validates closure, identity, inverses, and (for order <= 128) associativity.
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<Elem> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  bool is_abelian() const noexcept { return abelian_; }
  std::vector<Elem> center() const;

 private:
  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
  bool abelian_ = true;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group_3();
// Upper unitriangular 3x3 matrices over Z/q; (a,b,c) encoded as (a*q + b)*q + c
// with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
FiniteGroup heisenberg_group(std::size_t q);

class FiniteGroupTower {
 public:
  // Level k ranges over 0..depth(); level 0 is the trivial group.
  std::size_t depth() const noexcept { return groups_.size() - 1; }
  const FiniteGroup& group(std::size_t k) const { return groups_.at(k); }
  bool is_abelian() const noexcept { return abelian_; }
  const std::string& name() const noexcept { return name_; }

  // Image of x in level `to` for x in level `from` (to <= from).
  Elem project(Elem x, std::size_t from, std::size_t to) const;
  // Elements of level N that project to the identity of level n.
  std::vector<Elem> kernel(std::size_t n, std::size_t N) const;

  // Coset labels when built from a quotient tower.
  const std::vector<Coset>& labels(std::size_t k) const { return labels_.at(k); }
  bool has_labels() const noexcept { return !labels_.empty(); }

  // Verifies every connecting map is a surjective homomorphism.
  static FiniteGroupTower make(std::string name, std::vector<FiniteGroup> groups,
                               std::vector<std::vector<Elem>> maps);
  static FiniteGroupTower from_quotient(const QuotientTower& tower, unsigned depth);
  // H3(Z/p^k) for k = 1..m joined by reduction mod p^(k-1).
  static FiniteGroupTower heisenberg(std::size_t p, std::size_t m,
                                     std::size_t bound = QuotientTower::kDefaultEnumerationBound);

 private:
  std::string name_;
  std::vector<FiniteGroup> groups_;
  std::vector<std::vector<Elem>> maps_;  // maps_[k]: level k+1 -> level k
  std::vector<std::vector<Coset>> labels_;
  bool abelian_ = true;
};

}  // namespace odo
