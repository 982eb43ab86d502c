#include "idealgraph/ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace idealgraph {
namespace {

constexpr std::int64_t kMaxEnumeratedIdeals = 1 << 22;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  const auto wide = static_cast<__int128>(a) * b;
  if (wide > std::numeric_limits<std::int64_t>::max()) {
    throw std::range_error("integer overflow in prime power arithmetic");
  }
  return static_cast<std::int64_t>(wide);
}

std::vector<PrimePower> validated(std::vector<PrimePower> factors) {
  if (factors.empty()) {
    throw std::domain_error("ChainRingProduct requires at least one factor");
  }
  for (const auto& f : factors) {
    if (f.gamma < 1) throw std::domain_error("prime power exponent must be >= 1");
    if (f.p < 2 || !is_prime(static_cast<std::uint64_t>(f.p))) {
      throw std::domain_error("prime power base must be prime");
    }
  }
  return factors;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Witness set exact for all n < 3.3 * 10^24, in particular for 64 bits.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < gamma; ++i) v = checked_mul(v, p);
  return v;
}

ChainRingProduct::ChainRingProduct(std::vector<PrimePower> factors)
    : factors_(std::make_shared<const std::vector<PrimePower>>(validated(std::move(factors)))) {}

ChainRingProduct::ChainRingProduct(std::vector<PrimePower> factors, std::int64_t crt_modulus)
    : factors_(std::make_shared<const std::vector<PrimePower>>(validated(std::move(factors)))),
      crt_modulus_(crt_modulus) {
  std::int64_t product = 1;
  std::int64_t previous = 1;
  for (const auto& f : *factors_) {
    if (f.p <= previous) {
      throw std::domain_error("canonical ring requires distinct ascending primes");
    }
    previous = f.p;
    product = checked_mul(product, f.value());
  }
  if (product != crt_modulus) {
    throw std::domain_error("CRT modulus does not match the factor product");
  }
}

std::int64_t ChainRingProduct::ideal_count() const {
  std::int64_t count = 1;
  for (const auto& f : *factors_) count = checked_mul(count, f.gamma + 1);
  return count;
}

bool ChainRingProduct::same_ring(const ChainRingProduct& other) const {
  if (crt_modulus_ != other.crt_modulus_) return false;
  if (factors_ == other.factors_) return true;
  return *factors_ == *other.factors_;
}

std::string ChainRingProduct::describe() const {
  if (crt_modulus_) return "Z_" + std::to_string(*crt_modulus_);
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_->size(); ++i) {
    if (i > 0) out << " x ";
    out << "Z_" << (*factors_)[i].value();
  }
  return out.str();
}

std::string ChainRingProduct::tag() const {
  if (crt_modulus_) return "n" + std::to_string(*crt_modulus_);
  std::string tag = "z";
  for (std::size_t i = 0; i < factors_->size(); ++i) {
    if (i > 0) tag += "x";
    tag += std::to_string((*factors_)[i].value());
  }
  return tag;
}

IdealExp::IdealExp(ChainRingProduct ring, std::vector<int> exponents)
    : ring_(std::move(ring)), alpha_(std::move(exponents)) {
  if (static_cast<int>(alpha_.size()) != ring_.arity()) {
    throw std::domain_error("exponent vector length does not match the ring arity");
  }
  for (int i = 0; i < ring_.arity(); ++i) {
    if (alpha_[static_cast<std::size_t>(i)] < 0 ||
        alpha_[static_cast<std::size_t>(i)] > ring_.factor(i).gamma) {
      throw std::domain_error("ideal exponent out of range [0, gamma]");
    }
  }
}

bool IdealExp::is_zero_ideal() const {
  for (int i = 0; i < arity(); ++i) {
    if (alpha_[static_cast<std::size_t>(i)] != ring_.factor(i).gamma) return false;
  }
  return true;
}

bool IdealExp::is_unit_ideal() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [](int a) { return a == 0; });
}

bool IdealExp::contains(const IdealExp& other) const {
  if (!ring_.same_ring(other.ring_)) throw std::domain_error("ideal ring mismatch");
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (other.alpha_[i] < alpha_[i]) return false;
  }
  return true;
}

std::optional<std::int64_t> IdealExp::divisor() const {
  if (!ring_.crt_modulus()) return std::nullopt;
  std::int64_t d = 1;
  for (int i = 0; i < arity(); ++i) {
    for (int e = 0; e < alpha_[static_cast<std::size_t>(i)]; ++e) {
      d = checked_mul(d, ring_.factor(i).p);
    }
  }
  return d;
}

std::string IdealExp::label() const {
  if (auto d = divisor()) return std::to_string(*d);
  std::string text = "(";
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(alpha_[i]);
  }
  text += ")";
  return text;
}

bool operator==(const IdealExp& a, const IdealExp& b) {
  return a.ring_.same_ring(b.ring_) && a.alpha_ == b.alpha_;
}

bool lex_less(const IdealExp& a, const IdealExp& b) {
  if (!a.ring().same_ring(b.ring())) throw std::domain_error("ideal ring mismatch");
  return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                      b.exponents().begin(), b.exponents().end());
}

ChainRingProduct factor(std::int64_t n) {
  if (n < 2) throw std::domain_error("factor() requires n >= 2");
  std::vector<PrimePower> factors;
  std::int64_t remaining = n;
  auto strip = [&](std::int64_t p) {
    int gamma = 0;
    while (remaining % p == 0) {
      remaining /= p;
      ++gamma;
    }
    if (gamma > 0) factors.push_back({p, gamma});
  };
  strip(2);
  for (std::int64_t d = 3; d * d <= remaining; d += 2) strip(d);
  if (remaining > 1) factors.push_back({remaining, 1});
  return ChainRingProduct(std::move(factors), n);
}

std::vector<IdealExp> enumerate_ideals(const ChainRingProduct& ring, bool nontrivial_only) {
  if (ring.ideal_count() > kMaxEnumeratedIdeals) {
    throw std::range_error("ring has too many ideals to enumerate");
  }
  std::vector<IdealExp> ideals;
  ideals.reserve(static_cast<std::size_t>(ring.ideal_count()));
  const int k = ring.arity();
  std::vector<int> alpha(static_cast<std::size_t>(k), 0);
  while (true) {
    IdealExp ideal(ring, alpha);
    if (!nontrivial_only || !ideal.is_trivial()) ideals.push_back(std::move(ideal));
    int i = k - 1;
    while (i >= 0 && alpha[static_cast<std::size_t>(i)] == ring.factor(i).gamma) {
      alpha[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++alpha[static_cast<std::size_t>(i)];
  }
  return ideals;
}

IdealExp zero_ideal(const ChainRingProduct& ring) {
  std::vector<int> alpha(static_cast<std::size_t>(ring.arity()));
  for (int i = 0; i < ring.arity(); ++i) alpha[static_cast<std::size_t>(i)] = ring.factor(i).gamma;
  return IdealExp(ring, std::move(alpha));
}

IdealExp unit_ideal(const ChainRingProduct& ring) {
  return IdealExp(ring, std::vector<int>(static_cast<std::size_t>(ring.arity()), 0));
}

namespace {

template <typename Combine>
IdealExp combine(const IdealExp& lhs, const IdealExp& rhs, Combine op) {
  if (!lhs.ring().same_ring(rhs.ring())) throw std::domain_error("ideal ring mismatch");
  std::vector<int> alpha(static_cast<std::size_t>(lhs.arity()));
  for (int i = 0; i < lhs.arity(); ++i) {
    alpha[static_cast<std::size_t>(i)] = op(lhs.exponent(i), rhs.exponent(i), lhs.ring().factor(i).gamma);
  }
  return IdealExp(lhs.ring(), std::move(alpha));
}

}  // namespace

IdealExp ideal_product(const IdealExp& lhs, const IdealExp& rhs) {
  return combine(lhs, rhs, [](int a, int b, int g) { return std::min(a + b, g); });
}

IdealExp ideal_intersect(const IdealExp& lhs, const IdealExp& rhs) {
  return combine(lhs, rhs, [](int a, int b, int) { return std::max(a, b); });
}

IdealExp ideal_sum(const IdealExp& lhs, const IdealExp& rhs) {
  return combine(lhs, rhs, [](int a, int b, int) { return std::min(a, b); });
}

IdealExp ideal_colon(const IdealExp& lhs, const IdealExp& rhs) {
  return combine(lhs, rhs, [](int a, int b, int) { return std::max(a - b, 0); });
}

IdealExp annihilator(const IdealExp& ideal) {
  return ideal_colon(zero_ideal(ideal.ring()), ideal);
}

IdealExp radical(const IdealExp& ideal) {
  std::vector<int> alpha(ideal.exponents().begin(), ideal.exponents().end());
  for (int& a : alpha) a = std::min(a, 1);
  return IdealExp(ideal.ring(), std::move(alpha));
}

IdealExp jacobson_radical(const ChainRingProduct& ring) {
  return IdealExp(ring, std::vector<int>(static_cast<std::size_t>(ring.arity()), 1));
}

std::vector<IdealExp> maximal_ideals(const ChainRingProduct& ring) {
  std::vector<IdealExp> result;
  for (int i = 0; i < ring.arity(); ++i) {
    std::vector<int> alpha(static_cast<std::size_t>(ring.arity()), 0);
    alpha[static_cast<std::size_t>(i)] = 1;
    IdealExp m(ring, std::move(alpha));
    if (!m.is_trivial()) result.push_back(std::move(m));
  }
  return result;
}

std::vector<IdealExp> minimal_ideals(const ChainRingProduct& ring) {
  std::vector<IdealExp> result;
  for (int i = 0; i < ring.arity(); ++i) {
    std::vector<int> alpha(static_cast<std::size_t>(ring.arity()));
    for (int j = 0; j < ring.arity(); ++j) alpha[static_cast<std::size_t>(j)] = ring.factor(j).gamma;
    alpha[static_cast<std::size_t>(i)] -= 1;
    IdealExp m(ring, std::move(alpha));
    if (!m.is_trivial()) result.push_back(std::move(m));
  }
  return result;
}

bool is_idempotent(const IdealExp& ideal) {
  for (int i = 0; i < ideal.arity(); ++i) {
    const int a = ideal.exponent(i);
    if (a != 0 && a != ideal.ring().factor(i).gamma) return false;
  }
  return true;
}

bool is_large(const IdealExp& ideal) {
  if (ideal.is_zero_ideal()) throw std::domain_error("is_large is undefined for the zero ideal");
  for (int i = 0; i < ideal.arity(); ++i) {
    if (ideal.exponent(i) == ideal.ring().factor(i).gamma) return false;
  }
  return true;
}

std::vector<IdealExp> associated_primes(const IdealExp& ideal) {
  if (ideal.is_unit_ideal()) throw std::domain_error("associated_primes is undefined for R");
  std::vector<IdealExp> result;
  for (int i = 0; i < ideal.arity(); ++i) {
    if (ideal.exponent(i) >= 1) {
      std::vector<int> alpha(static_cast<std::size_t>(ideal.arity()), 0);
      alpha[static_cast<std::size_t>(i)] = 1;
      result.emplace_back(ideal.ring(), std::move(alpha));
    }
  }
  return result;
}

RingClass classify_ring(const ChainRingProduct& ring) {
  RingClass c;
  c.is_local = ring.arity() == 1;
  bool reduced = true;
  for (const auto& f : ring.factors()) reduced = reduced && f.gamma == 1;
  c.is_reduced = reduced;
  c.is_vnr = reduced;
  c.is_field = c.is_local && ring.factor(0).gamma == 1;
  return c;
}

}  // namespace idealgraph
