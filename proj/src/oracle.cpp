#include "idealgraph/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "idealgraph/ring.hpp"

namespace idealgraph::oracle {
namespace {

// Additive subgroup generated by `generators`, as a sorted member list.
// Each generator outside the current subgroup at least doubles it, so the
// cost is O(|generators| + |result| log |result|) ring additions.
std::vector<int> additive_closure(const ExplicitRing& ring, std::span<const int> generators) {
  std::vector<char> in_set(static_cast<std::size_t>(ring.size()), 0);
  std::vector<int> elements{0};
  in_set[0] = 1;
  std::vector<int> frontier;
  std::vector<int> next;
  for (int g : generators) {
    if (in_set[static_cast<std::size_t>(g)]) continue;
    frontier = elements;
    while (!frontier.empty()) {
      next.clear();
      for (int x : frontier) {
        const int y = ring.add(x, g);
        if (!in_set[static_cast<std::size_t>(y)]) {
          in_set[static_cast<std::size_t>(y)] = 1;
          elements.push_back(y);
          next.push_back(y);
        }
      }
      frontier.swap(next);
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

void require_same_ring(const ElementIdeal& a, const ElementIdeal& b) {
  if (!a.ring().same_ring(b.ring())) throw std::domain_error("ideal ring mismatch");
}

}  // namespace

int ExplicitRing::add(int a, int b) const {
  if (family_ == Family::zmod) {
    const std::int64_t s = static_cast<std::int64_t>(a) + b;
    return static_cast<int>(s >= parameter_ ? s - parameter_ : s);
  }
  const int q = static_cast<int>(parameter_);
  const int q2 = q * q;
  const int a0 = a % q, a1 = (a / q) % q, a2 = a / q2;
  const int b0 = b % q, b1 = (b / q) % q, b2 = b / q2;
  return (a0 + b0) % q + ((a1 + b1) % q) * q + ((a2 + b2) % q) * q2;
}

int ExplicitRing::mul(int a, int b) const {
  if (family_ == Family::zmod) {
    return static_cast<int>(static_cast<std::int64_t>(a) * b % parameter_);
  }
  // (a0 + a1 x + a2 y)(b0 + b1 x + b2 y) with x^2 = y^2 = xy = 0.
  const int q = static_cast<int>(parameter_);
  const int q2 = q * q;
  const int a0 = a % q, a1 = (a / q) % q, a2 = a / q2;
  const int b0 = b % q, b1 = (b / q) % q, b2 = b / q2;
  const int c0 = a0 * b0 % q;
  const int c1 = (a0 * b1 + a1 * b0) % q;
  const int c2 = (a0 * b2 + a2 * b0) % q;
  return c0 + c1 * q + c2 * q2;
}

int ExplicitRing::neg(int a) const {
  if (family_ == Family::zmod) return a == 0 ? 0 : static_cast<int>(parameter_) - a;
  const int q = static_cast<int>(parameter_);
  const int q2 = q * q;
  const int a0 = a % q, a1 = (a / q) % q, a2 = a / q2;
  return (q - a0) % q + ((q - a1) % q) * q + ((q - a2) % q) * q2;
}

void ExplicitRing::check_ring_axioms() const {
  if (size_ > 512) throw std::range_error("exhaustive axiom check limited to 512 elements");
  auto fail = [&](const char* what) { throw std::logic_error(std::string("ring axiom violated: ") + what); };
  for (int a = 0; a < size_; ++a) {
    if (add(a, 0) != a) fail("additive identity");
    if (mul(a, 1) != a) fail("multiplicative identity");
    if (add(a, neg(a)) != 0) fail("additive inverse");
    for (int b = 0; b < size_; ++b) {
      if (add(a, b) != add(b, a)) fail("addition commutativity");
      if (mul(a, b) != mul(b, a)) fail("multiplication commutativity");
      for (int c = 0; c < size_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("addition associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplication associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

ExplicitRing make_zmod(std::int64_t n) {
  if (n < 2 || n > 10000) throw std::range_error("make_zmod supports 2 <= n <= 10^4");
  ExplicitRing ring;
  ring.family_ = ExplicitRing::Family::zmod;
  ring.parameter_ = n;
  ring.size_ = static_cast<int>(n);
  ring.description_ = "Z_" + std::to_string(n);
  ring.tag_ = "z" + std::to_string(n);
  return ring;
}

ExplicitRing make_local_square_zero(std::int64_t q) {
  if (q < 2 || q > 31 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw std::domain_error("make_local_square_zero requires a prime q <= 31");
  }
  ExplicitRing ring;
  ring.family_ = ExplicitRing::Family::local_square_zero;
  ring.parameter_ = q;
  ring.size_ = static_cast<int>(q * q * q);
  ring.description_ = "F_" + std::to_string(q) + "[X,Y]/(X,Y)^2";
  ring.tag_ = "localsq_q" + std::to_string(q);
  return ring;
}

ElementIdeal::ElementIdeal(ExplicitRing ring, std::vector<int> members)
    : ring_(std::move(ring)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) {
    throw std::domain_error("an ideal must contain the additive identity");
  }
  if (members_.back() >= ring_.size() || members_.front() < 0) {
    throw std::domain_error("ideal member out of range");
  }
}

bool ElementIdeal::contains(int element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

bool ElementIdeal::verify_closed() const {
  for (int a : members_) {
    if (!contains(ring_.neg(a))) return false;
    for (int b : members_) {
      if (!contains(ring_.add(a, b))) return false;
    }
    for (int r = 0; r < ring_.size(); ++r) {
      if (!contains(ring_.mul(r, a))) return false;
    }
  }
  return true;
}

ElementIdeal principal_ideal(const ExplicitRing& ring, int a) {
  std::vector<char> seen(static_cast<std::size_t>(ring.size()), 0);
  std::vector<int> members;
  for (int r = 0; r < ring.size(); ++r) {
    const int x = ring.mul(r, a);
    if (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      members.push_back(x);
    }
  }
  return ElementIdeal(ring, std::move(members));
}

std::vector<ElementIdeal> all_ideals(const ExplicitRing& ring) {
  if (ring.size() > kMaxOracleElements) {
    throw std::range_error("ring too large for exhaustive ideal enumeration");
  }
  std::map<std::vector<int>, bool> known;  // member list -> processed
  for (int a = 0; a < ring.size(); ++a) {
    known.emplace(principal_ideal(ring, a).members(), false);
  }
  // Close under pairwise ideal sum. For Z_n this adds nothing; for rings with
  // non-principal ideals (e.g. the local square-zero family) it finds them.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot;
    snapshot.reserve(known.size());
    for (const auto& [members, _] : known) snapshot.push_back(members);
    for (auto& [members, processed] : known) {
      if (processed) continue;
      processed = true;
      for (const auto& other : snapshot) {
        std::vector<int> generators = members;
        generators.insert(generators.end(), other.begin(), other.end());
        auto sum = additive_closure(ring, generators);
        if (known.emplace(std::move(sum), false).second) grew = true;
      }
    }
  }
  std::vector<ElementIdeal> ideals;
  ideals.reserve(known.size());
  for (const auto& [members, _] : known) ideals.emplace_back(ring, members);
  return ideals;
}

ElementIdeal set_product(const ElementIdeal& lhs, const ElementIdeal& rhs) {
  require_same_ring(lhs, rhs);
  const ExplicitRing& ring = lhs.ring();
  std::vector<char> seen(static_cast<std::size_t>(ring.size()), 0);
  std::vector<int> products;
  for (int a : lhs.members()) {
    for (int b : rhs.members()) {
      const int x = ring.mul(a, b);
      if (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        products.push_back(x);
      }
    }
  }
  return ElementIdeal(ring, additive_closure(ring, products));
}

ElementIdeal set_intersect(const ElementIdeal& lhs, const ElementIdeal& rhs) {
  require_same_ring(lhs, rhs);
  std::vector<int> members;
  std::set_intersection(lhs.members().begin(), lhs.members().end(), rhs.members().begin(),
                        rhs.members().end(), std::back_inserter(members));
  return ElementIdeal(lhs.ring(), std::move(members));
}

ElementIdeal set_sum(const ElementIdeal& lhs, const ElementIdeal& rhs) {
  require_same_ring(lhs, rhs);
  std::vector<int> generators = lhs.members();
  generators.insert(generators.end(), rhs.members().begin(), rhs.members().end());
  return ElementIdeal(lhs.ring(), additive_closure(lhs.ring(), generators));
}

bool oracle_adjacent(const ElementIdeal& lhs, const ElementIdeal& rhs) {
  return set_product(lhs, rhs) == set_intersect(lhs, rhs);
}

std::optional<int> idempotent_generator(const ExplicitRing& ring, const ElementIdeal& ideal) {
  if (!ring.same_ring(ideal.ring())) throw std::domain_error("ideal ring mismatch");
  for (int e : ideal.members()) {
    if (ring.mul(e, e) == e && principal_ideal(ring, e) == ideal) return e;
  }
  return std::nullopt;
}

std::string ideal_label(const ElementIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  if (ideal.is_unit()) return "R";
  std::string label = "<";
  ElementIdeal span(ideal.ring(), {0});
  bool first = true;
  for (int e : ideal.members()) {
    if (span == ideal) break;
    if (span.contains(e)) continue;
    if (!first) label += ",";
    first = false;
    label += std::to_string(e);
    span = set_sum(span, principal_ideal(ideal.ring(), e));
  }
  return label + ">";
}

}  // namespace idealgraph::oracle
