#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace idealgraph {

/// One chain-ring factor Z_{p^gamma}.
struct PrimePower {
  std::int64_t p = 2;
  int gamma = 1;

  /// p^gamma as an integer.
  std::int64_t value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// A finite commutative ring R = Z_{p_1^{g_1}} x ... x Z_{p_k^{g_k}}.
///
/// Factors keep their given order and primes may repeat. When the ring was
/// obtained by factoring an integer n (see factor()), the CRT modulus is set,
/// primes are distinct and ascending, and ideals carry divisor labels.
/// Immutable after construction; copies share the factor list.
class ChainRingProduct {
 public:
  explicit ChainRingProduct(std::vector<PrimePower> factors);
  ChainRingProduct(std::vector<PrimePower> factors, std::int64_t crt_modulus);

  int arity() const { return static_cast<int>(factors_->size()); }
  std::span<const PrimePower> factors() const { return *factors_; }
  const PrimePower& factor(int i) const { return (*factors_)[static_cast<std::size_t>(i)]; }
  std::optional<std::int64_t> crt_modulus() const { return crt_modulus_; }

  /// Number of ideals, prod (gamma_i + 1).
  std::int64_t ideal_count() const;

  bool same_ring(const ChainRingProduct& other) const;

  /// "Z_20" for canonical rings, "Z_4 x Z_5" otherwise.
  std::string describe() const;
  /// Short identifier usable in graph names and file stems, e.g. "n20".
  std::string tag() const;

  friend bool operator==(const ChainRingProduct& a, const ChainRingProduct& b) {
    return a.same_ring(b);
  }

 private:
  std::shared_ptr<const std::vector<PrimePower>> factors_;
  std::optional<std::int64_t> crt_modulus_;
};

/// An ideal of a ChainRingProduct in exponent form: the ideal generated by
/// (p_1^{a_1}, ..., p_k^{a_k}) with 0 <= a_i <= gamma_i.
///
/// (0,...,0) is the unit ideal R, (gamma_1,...,gamma_k) is the zero ideal.
/// Values are immutable; all operations on them are pure.
class IdealExp {
 public:
  IdealExp(ChainRingProduct ring, std::vector<int> exponents);

  const ChainRingProduct& ring() const { return ring_; }
  std::span<const int> exponents() const { return alpha_; }
  int exponent(int i) const { return alpha_[static_cast<std::size_t>(i)]; }
  int arity() const { return static_cast<int>(alpha_.size()); }

  bool is_zero_ideal() const;
  bool is_unit_ideal() const;
  bool is_trivial() const { return is_zero_ideal() || is_unit_ideal(); }

  /// True iff other is contained in this ideal (coordinatewise >= on exponents).
  bool contains(const IdealExp& other) const;

  /// The divisor d = prod p_i^{a_i} of n; only for canonical rings.
  std::optional<std::int64_t> divisor() const;

  /// Divisor as text when canonical, "(a_1,...,a_k)" otherwise.
  std::string label() const;

  friend bool operator==(const IdealExp& a, const IdealExp& b);

 private:
  ChainRingProduct ring_;
  std::vector<int> alpha_;
};

/// Lexicographic order on exponent vectors; requires the same ring.
bool lex_less(const IdealExp& a, const IdealExp& b);

/// Prime factorization of n as a canonical ChainRingProduct (trial division).
ChainRingProduct factor(std::int64_t n);

/// All ideals in lexicographic exponent order; the flag drops R and 0.
std::vector<IdealExp> enumerate_ideals(const ChainRingProduct& ring, bool nontrivial_only);

IdealExp zero_ideal(const ChainRingProduct& ring);
IdealExp unit_ideal(const ChainRingProduct& ring);

/// IJ: coordinatewise min(a_i + b_i, gamma_i).
IdealExp ideal_product(const IdealExp& lhs, const IdealExp& rhs);
/// I n J: coordinatewise max(a_i, b_i).
IdealExp ideal_intersect(const IdealExp& lhs, const IdealExp& rhs);
/// I + J: coordinatewise min(a_i, b_i).
IdealExp ideal_sum(const IdealExp& lhs, const IdealExp& rhs);
/// (I : J): coordinatewise max(a_i - b_i, 0).
IdealExp ideal_colon(const IdealExp& lhs, const IdealExp& rhs);
/// ann(I) = (0 : I): coordinatewise gamma_i - a_i.
IdealExp annihilator(const IdealExp& ideal);
/// r(I): coordinatewise min(a_i, 1).
IdealExp radical(const IdealExp& ideal);

/// J(R), the intersection of the maximal ideals; equals Nil(R) here.
IdealExp jacobson_radical(const ChainRingProduct& ring);

/// The k maximal ideals (1 at one coordinate); trivial ideals excluded.
std::vector<IdealExp> maximal_ideals(const ChainRingProduct& ring);
/// The k minimal nonzero ideals (gamma_i - 1 at one coordinate, gamma elsewhere);
/// trivial ideals excluded.
std::vector<IdealExp> minimal_ideals(const ChainRingProduct& ring);

/// I^2 = I, i.e. every exponent is 0 or gamma_i.
bool is_idempotent(const IdealExp& ideal);

/// I meets every nonzero ideal nontrivially; requires I != 0.
bool is_large(const IdealExp& ideal);

/// Ass(I): the maximal ideals at coordinates where a_i >= 1. Requires I != R.
std::vector<IdealExp> associated_primes(const IdealExp& ideal);

struct RingClass {
  bool is_local = false;
  bool is_field = false;
  bool is_reduced = false;
  bool is_vnr = false;

  friend bool operator==(const RingClass&, const RingClass&) = default;
};

RingClass classify_ring(const ChainRingProduct& ring);

}  // namespace idealgraph
