#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace idealgraph::oracle {

/// Largest ring the element-level oracle will materialize ideal sets for.
/// Covers Z_n up to the 10^4 arithmetic cap and F_q[X,Y]/(X,Y)^2 up to q = 31.
inline constexpr int kMaxOracleElements = 30000;

/// A small finite commutative unital ring given by total operation tables
/// over dense element indices. Index 0 is the additive identity and index 1
/// the multiplicative identity. Tables are evaluated on demand; the ring is
/// immutable and cheap to copy.
class ExplicitRing {
 public:
  int size() const { return size_; }
  int add(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const;
  int zero() const { return 0; }
  int one() const { return 1; }

  const std::string& description() const { return description_; }
  /// Short identifier usable in graph names, e.g. "z12" or "localsq_q2".
  const std::string& tag() const { return tag_; }

  bool same_ring(const ExplicitRing& other) const {
    return family_ == other.family_ && parameter_ == other.parameter_;
  }

  /// Exhaustive check of the commutative unital ring axioms over all element
  /// triples. Only available for size <= 512.
  void check_ring_axioms() const;

 private:
  friend ExplicitRing make_zmod(std::int64_t n);
  friend ExplicitRing make_local_square_zero(std::int64_t q);

  enum class Family { zmod, local_square_zero };

  Family family_ = Family::zmod;
  std::int64_t parameter_ = 0;  // modulus n, or q
  int size_ = 0;
  std::string description_;
  std::string tag_;
};

/// The ring of residues modulo n, 2 <= n <= 10^4.
ExplicitRing make_zmod(std::int64_t n);

/// F_q[X,Y]/(X,Y)^2 for a prime q <= 31: the q^3 expressions a + bx + cy
/// with xy = x^2 = y^2 = 0. Element index is a + b*q + c*q^2.
ExplicitRing make_local_square_zero(std::int64_t q);

/// An ideal of an ExplicitRing as a sorted set of element indices.
class ElementIdeal {
 public:
  ElementIdeal(ExplicitRing ring, std::vector<int> members);

  const ExplicitRing& ring() const { return ring_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int element) const;

  bool is_zero() const { return members_.size() == 1; }
  bool is_unit() const { return static_cast<int>(members_.size()) == ring_.size(); }
  bool is_trivial() const { return is_zero() || is_unit(); }

  /// Full closure check (addition, negation, ring multiples); O(|I| * |R|).
  bool verify_closed() const;

  friend bool operator==(const ElementIdeal& a, const ElementIdeal& b) {
    return a.ring_.same_ring(b.ring_) && a.members_ == b.members_;
  }

 private:
  ExplicitRing ring_;
  std::vector<int> members_;
};

/// Ra = {r*a : r in R}.
ElementIdeal principal_ideal(const ExplicitRing& ring, int a);

/// Every ideal of the ring: the principal ideals closed under pairwise sum,
/// sorted lexicographically by member list.
std::vector<ElementIdeal> all_ideals(const ExplicitRing& ring);

/// IJ: additive closure of all pairwise products.
ElementIdeal set_product(const ElementIdeal& lhs, const ElementIdeal& rhs);
/// I n J as plain set intersection.
ElementIdeal set_intersect(const ElementIdeal& lhs, const ElementIdeal& rhs);
/// I + J: additive closure of the union.
ElementIdeal set_sum(const ElementIdeal& lhs, const ElementIdeal& rhs);

/// IJ = I n J, computed entirely at the element level.
bool oracle_adjacent(const ElementIdeal& lhs, const ElementIdeal& rhs);

/// The smallest e in I with e^2 = e and Re = I, if any.
std::optional<int> idempotent_generator(const ExplicitRing& ring, const ElementIdeal& ideal);

/// "0", "R", or "<g1,g2,...>" over a greedily chosen minimal generator list.
std::string ideal_label(const ElementIdeal& ideal);

}  // namespace idealgraph::oracle
