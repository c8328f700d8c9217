#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwk/error.hpp"

namespace mwk {

// Descriptor of a small finite commutative ring. Polynomials are stored low
// degree first and are monic; an empty `poly` asks for the canonical choice.
struct RingSpec {
  enum class Kind { ZMod, GaloisField, GaloisRing, Product };

  Kind kind = Kind::ZMod;
  std::int64_t m = 0;  // ZMod
  std::int64_t p = 0;
  std::int64_t e = 1;
  std::int64_t k = 1;
  std::vector<std::int64_t> poly;
  std::vector<RingSpec> factors;  // Product

  static RingSpec zmod(std::int64_t m);
  static RingSpec galois_field(std::int64_t p, std::int64_t k, std::vector<std::int64_t> poly = {});
  static RingSpec galois_ring(std::int64_t p, std::int64_t e, std::int64_t k,
                              std::vector<std::int64_t> poly = {});
  static RingSpec product(std::vector<RingSpec> factors);
};

// Accepts `Z/<m>`, `GF(<p>^<k>)`, `GF(<q>)`, `GF(<p>^<k>;<poly>)`, `F<q>`,
// `GR(<p>^<e>,<k>)`, `GR(<q>,<k>)` (optionally `;<poly>`) and
// `prod(<spec>,<spec>,...)`. Throws ParseError naming the offending token.
RingSpec parse_ring_spec(std::string_view text);

// Elements are identified with their index in the canonical enumeration.
using Elem = std::uint32_t;

struct Mat2 {
  std::array<Elem, 4> a{};  // row major

  Elem operator()(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// One factor of the word exhibiting diag(a, a^-1) as a product of (conjugated)
// elementary matrices.
struct MatrixFactor {
  std::string label;             // e.g. "e12(1)" or "diag(a,1)*e21(-1)*diag(a,1)^-1"
  Mat2 elementary;               // the elementary matrix
  std::optional<Mat2> conjugator;
  Mat2 value;                    // conjugator * elementary * conjugator^-1
};

struct ElementaryFactorization {
  Elem unit = 0;
  std::vector<MatrixFactor> factors;
  Mat2 product;
  Mat2 expected;  // diag(a, a^-1)
  bool verified = false;
};

// Immutable finite ring handle. Copies share the underlying tables.
class Ring {
 public:
  static constexpr std::size_t kDefaultBound = std::size_t{1} << 16;

  explicit Ring(const RingSpec& spec, std::size_t bound = kDefaultBound);

  const RingSpec& spec() const;
  // Canonical spelling in the ring-spec language, with the modulus made explicit.
  const std::string& name() const;
  std::size_t size() const;
  std::int64_t characteristic() const;
  // True for GF(p^k); Frobenius is then x -> x^p.
  bool is_field() const;

  Elem zero() const { return 0; }
  Elem one() const;
  Elem from_int(std::int64_t v) const;
  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t n) const;
  bool is_unit(Elem x) const;
  std::optional<Elem> inverse(Elem x) const;
  Elem inv(Elem x) const;  // throws Error for non-units

  // Canonical residue vector: [r] for Z/m, polynomial coefficients (low
  // first) for GF/GR, concatenation for products.
  std::vector<std::int64_t> coords(Elem x) const;
  Elem from_coords(std::span<const std::int64_t> coords) const;
  std::string format(Elem x) const;

  // Invertible elements in enumeration order.
  const std::vector<Elem>& units() const;
  // Position of x in units(), or -1.
  int unit_index(Elem x) const;
  // {u^2 : u a unit}, sorted.
  std::vector<Elem> unit_squares() const;

  Mat2 mat_mul(const Mat2& x, const Mat2& y) const;
  std::optional<Mat2> mat_inverse(const Mat2& x) const;
  ElementaryFactorization elementary_factorization(Elem a) const;

  friend bool operator==(const Ring& x, const Ring& y) { return x.name() == y.name(); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Ring make_ring(const RingSpec& spec, std::size_t bound = Ring::kDefaultBound);
inline Ring make_ring(std::string_view text) { return make_ring(parse_ring_spec(text)); }

// Number-theory helpers shared by the modules.
bool is_prime(std::int64_t n);
// (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t q);
// Monic f (low first) over Z/p is irreducible; exhaustive divisor search.
bool is_irreducible_mod_p(std::span<const std::int64_t> f, std::int64_t p);
// Smallest monic irreducible of degree k over Z/p, ordering coefficient
// vectors with the highest non-leading degree most significant.
std::vector<std::int64_t> canonical_irreducible(std::int64_t p, std::int64_t k);
std::string format_poly(std::span<const std::int64_t> f, char var = 'x');

}  // namespace mwk
