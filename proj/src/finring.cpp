#include "mwk/finring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <tuple>
#include <numeric>
#include <set>
#include <sstream>

namespace mwk {

// ---------------------------------------------------------------------------
// number theory helpers

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  std::int64_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, e};
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// Remainder of f modulo monic g over Z/p. Both low first.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> f, std::span<const std::int64_t> g,
                                   std::int64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    const std::int64_t c = mod(f[i], p);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] = mod(f[i - dg + j] - c * g[j], p);
  }
  f.resize(std::min(f.size(), dg));
  return f;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::int64_t> f, std::int64_t p) {
  const auto k = static_cast<std::int64_t>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  std::vector<std::int64_t> fv(f.begin(), f.end());
  for (auto& c : fv) c = mod(c, p);
  for (std::int64_t d = 1; 2 * d <= k; ++d) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) count *= p;
    std::vector<std::int64_t> g(static_cast<std::size_t>(d + 1), 0);
    g[static_cast<std::size_t>(d)] = 1;
    for (std::int64_t v = 0; v < count; ++v) {
      std::int64_t t = v;
      for (std::int64_t i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      const auto r = poly_rem(fv, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> canonical_irreducible(std::int64_t p, std::int64_t k) {
  std::int64_t count = 1;
  for (std::int64_t i = 0; i < k; ++i) count *= p;
  std::vector<std::int64_t> f(static_cast<std::size_t>(k + 1), 0);
  f[static_cast<std::size_t>(k)] = 1;
  for (std::int64_t v = 0; v < count; ++v) {
    std::int64_t t = v;
    for (std::int64_t i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

std::string format_poly(std::span<const std::int64_t> f, char var) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const std::int64_t c = f[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::zmod(std::int64_t m) {
  RingSpec s;
  s.kind = Kind::ZMod;
  s.m = m;
  return s;
}

RingSpec RingSpec::galois_field(std::int64_t p, std::int64_t k, std::vector<std::int64_t> poly) {
  RingSpec s;
  s.kind = Kind::GaloisField;
  s.p = p;
  s.k = k;
  s.poly = std::move(poly);
  return s;
}

RingSpec RingSpec::galois_ring(std::int64_t p, std::int64_t e, std::int64_t k, std::vector<std::int64_t> poly) {
  RingSpec s;
  s.kind = Kind::GaloisRing;
  s.p = p;
  s.e = e;
  s.k = k;
  s.poly = std::move(poly);
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    RingSpec s = spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::strchr(",;()", text_[end]) && !std::isspace(static_cast<unsigned char>(text_[end])))
      ++end;
    std::string token(text_.substr(pos_, std::max<std::size_t>(end - pos_, pos_ < text_.size() ? 1 : 0)));
    throw ParseError("ring spec: " + what, 1, pos_ + 1, token.empty() ? "<end>" : token);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view lit) {
    skip_ws();
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::int64_t{1} << 40)) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  std::pair<std::int64_t, std::int64_t> prime_and_exponent() {
    const std::size_t start = pos_;
    const std::int64_t a = integer();
    if (accept("^")) {
      const std::int64_t b = integer();
      if (!is_prime(a)) {
        pos_ = start;
        fail("base is not prime");
      }
      return {a, b};
    }
    auto pe = prime_power(a);
    if (!pe) {
      pos_ = start;
      fail("not a prime power");
    }
    return *pe;
  }

  // term := [coef] ['*'] ['x' ['^' int]]
  std::vector<std::int64_t> polynomial() {
    skip_ws();
    std::vector<std::int64_t> f;
    bool first = true;
    while (true) {
      skip_ws();
      std::int64_t sign = 1;
      if (accept("+")) {
      } else if (accept("-")) {
        sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      skip_ws();
      std::int64_t coef = 1;
      bool have_coef = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coef = integer();
        have_coef = true;
        accept("*");
      }
      std::size_t deg = 0;
      if (accept("x")) {
        deg = 1;
        if (accept("^")) deg = static_cast<std::size_t>(integer());
      } else if (!have_coef) {
        fail("expected polynomial term");
      }
      if (deg > 64) fail("polynomial degree too large");
      if (f.size() <= deg) f.resize(deg + 1, 0);
      f[deg] += sign * coef;
    }
    if (f.empty()) fail("empty polynomial");
    return f;
  }

  RingSpec spec() {
    skip_ws();
    if (accept("prod(")) {
      std::vector<RingSpec> factors;
      factors.push_back(spec());
      while (accept(",")) factors.push_back(spec());
      expect(")");
      return RingSpec::product(std::move(factors));
    }
    if (accept("Z/")) return RingSpec::zmod(integer());
    if (accept("GF(")) {
      auto [p, k] = prime_and_exponent();
      std::vector<std::int64_t> poly;
      if (accept(";")) poly = polynomial();
      expect(")");
      return RingSpec::galois_field(p, k, std::move(poly));
    }
    if (accept("GR(")) {
      auto [p, e] = prime_and_exponent();
      expect(",");
      const std::int64_t k = integer();
      std::vector<std::int64_t> poly;
      if (accept(";")) poly = polynomial();
      expect(")");
      return RingSpec::galois_ring(p, e, k, std::move(poly));
    }
    if (accept("F_") || accept("F")) {
      auto [p, k] = prime_and_exponent();
      return RingSpec::galois_field(p, k);
    }
    fail("unknown ring spec");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) { return SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// Ring implementation

namespace {

struct Node {
  enum class Kind { Cyclic, Poly, Prod };
  Kind kind = Kind::Cyclic;
  std::int64_t m = 0;  // cyclic modulus, or q = p^e for Poly
  std::int64_t p = 0, e = 1, k = 1;
  std::vector<std::int64_t> f;  // monic modulus over Z/q, size k+1
  std::int64_t unit_order = 0;  // Poly only
  bool field = false;
  std::vector<Node> children;
  std::vector<std::uint64_t> strides;
  std::uint64_t size = 0;
  std::string name;

  std::vector<std::int64_t> digits(std::uint64_t x) const {
    std::vector<std::int64_t> d(static_cast<std::size_t>(k));
    for (auto& c : d) {
      c = static_cast<std::int64_t>(x % static_cast<std::uint64_t>(m));
      x /= static_cast<std::uint64_t>(m);
    }
    return d;
  }

  std::uint64_t undigits(const std::vector<std::int64_t>& d) const {
    std::uint64_t x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(d[i]);
    return x;
  }

  std::uint64_t child(std::uint64_t x, std::size_t i) const { return (x / strides[i]) % children[i].size; }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    switch (kind) {
      case Kind::Cyclic:
        return (x + y) % static_cast<std::uint64_t>(m);
      case Kind::Poly: {
        auto a = digits(x), b = digits(y);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % m;
        return undigits(a);
      }
      case Kind::Prod: {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < children.size(); ++i) r += children[i].add(child(x, i), child(y, i)) * strides[i];
        return r;
      }
    }
    return 0;
  }

  std::uint64_t neg(std::uint64_t x) const {
    switch (kind) {
      case Kind::Cyclic:
        return (static_cast<std::uint64_t>(m) - x) % static_cast<std::uint64_t>(m);
      case Kind::Poly: {
        auto a = digits(x);
        for (auto& c : a) c = (m - c) % m;
        return undigits(a);
      }
      case Kind::Prod: {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < children.size(); ++i) r += children[i].neg(child(x, i)) * strides[i];
        return r;
      }
    }
    return 0;
  }

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    switch (kind) {
      case Kind::Cyclic:
        return (x * y) % static_cast<std::uint64_t>(m);
      case Kind::Poly: {
        const auto a = digits(x), b = digits(y);
        const auto kk = static_cast<std::size_t>(k);
        std::vector<std::int64_t> r(2 * kk - 1, 0);
        for (std::size_t i = 0; i < kk; ++i) {
          if (a[i] == 0) continue;
          for (std::size_t j = 0; j < kk; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
        }
        for (std::size_t i = r.size(); i-- > kk;) {
          const std::int64_t c = r[i];
          if (c == 0) continue;
          for (std::size_t j = 0; j <= kk; ++j) r[i - kk + j] = mod(r[i - kk + j] - c * f[j], m);
        }
        r.resize(kk);
        return undigits(r);
      }
      case Kind::Prod: {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < children.size(); ++i) r += children[i].mul(child(x, i), child(y, i)) * strides[i];
        return r;
      }
    }
    return 0;
  }

  std::uint64_t pow(std::uint64_t x, std::uint64_t n) const {
    std::uint64_t r = one();
    while (n) {
      if (n & 1) r = mul(r, x);
      x = mul(x, x);
      n >>= 1;
    }
    return r;
  }

  std::uint64_t one() const {
    switch (kind) {
      case Kind::Cyclic:
        return 1 % static_cast<std::uint64_t>(m);
      case Kind::Poly:
        return 1;
      case Kind::Prod: {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < children.size(); ++i) r += children[i].one() * strides[i];
        return r;
      }
    }
    return 0;
  }

  std::uint64_t from_int(std::int64_t v) const {
    switch (kind) {
      case Kind::Cyclic:
      case Kind::Poly:
        return static_cast<std::uint64_t>(mod(v, m));
      case Kind::Prod: {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < children.size(); ++i) r += children[i].from_int(v) * strides[i];
        return r;
      }
    }
    return 0;
  }

  bool is_unit(std::uint64_t x) const {
    switch (kind) {
      case Kind::Cyclic:
        return std::gcd(static_cast<std::int64_t>(x), m) == 1;
      case Kind::Poly: {
        // the residue ring modulo p is a field
        const auto d = digits(x);
        return std::any_of(d.begin(), d.end(), [&](std::int64_t c) { return c % p != 0; });
      }
      case Kind::Prod:
        for (std::size_t i = 0; i < children.size(); ++i)
          if (!children[i].is_unit(child(x, i))) return false;
        return true;
    }
    return false;
  }

  std::uint64_t inverse(std::uint64_t x) const {
    switch (kind) {
      case Kind::Cyclic: {
        std::int64_t r0 = m, r1 = static_cast<std::int64_t>(x), s0 = 0, s1 = 1;
        while (r1 != 0) {
          const std::int64_t qt = r0 / r1;
          std::tie(r0, r1) = std::pair{r1, r0 - qt * r1};
          std::tie(s0, s1) = std::pair{s1, s0 - qt * s1};
        }
        return static_cast<std::uint64_t>(mod(s0, m));
      }
      case Kind::Poly:
        return pow(x, static_cast<std::uint64_t>(unit_order - 1));
      case Kind::Prod: {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < children.size(); ++i) r += children[i].inverse(child(x, i)) * strides[i];
        return r;
      }
    }
    return 0;
  }

  void coords(std::uint64_t x, std::vector<std::int64_t>& out) const {
    switch (kind) {
      case Kind::Cyclic:
        out.push_back(static_cast<std::int64_t>(x));
        return;
      case Kind::Poly: {
        const auto d = digits(x);
        out.insert(out.end(), d.begin(), d.end());
        return;
      }
      case Kind::Prod:
        for (std::size_t i = 0; i < children.size(); ++i) children[i].coords(child(x, i), out);
        return;
    }
  }

  std::uint64_t from_coords(std::span<const std::int64_t> c, std::size_t& pos) const {
    switch (kind) {
      case Kind::Cyclic:
        if (pos >= c.size()) throw Error("coordinate vector too short");
        return static_cast<std::uint64_t>(mod(c[pos++], m));
      case Kind::Poly: {
        if (pos + static_cast<std::size_t>(k) > c.size()) throw Error("coordinate vector too short");
        std::vector<std::int64_t> d(static_cast<std::size_t>(k));
        for (auto& v : d) v = mod(c[pos++], m);
        return undigits(d);
      }
      case Kind::Prod: {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < children.size(); ++i) r += children[i].from_coords(c, pos) * strides[i];
        return r;
      }
    }
    return 0;
  }

  std::string format(std::uint64_t x) const {
    switch (kind) {
      case Kind::Cyclic:
        return std::to_string(x);
      case Kind::Poly:
        return format_poly(digits(x));
      case Kind::Prod: {
        std::string s = "(";
        for (std::size_t i = 0; i < children.size(); ++i) {
          if (i) s += ',';
          s += children[i].format(child(x, i));
        }
        return s + ")";
      }
    }
    return {};
  }

  std::int64_t characteristic() const {
    if (kind != Kind::Prod) return m;
    std::int64_t c = 1;
    for (const auto& ch : children) c = std::lcm(c, ch.characteristic());
    return c;
  }
};

Node build_node(RingSpec& spec, std::size_t bound) {
  Node n;
  switch (spec.kind) {
    case RingSpec::Kind::ZMod:
      if (spec.m < 2) throw Error("Z/m requires m >= 2, got " + std::to_string(spec.m));
      if (static_cast<std::uint64_t>(spec.m) > bound)
        throw Error("ring Z/" + std::to_string(spec.m) + " exceeds the element bound " + std::to_string(bound));
      n.kind = Node::Kind::Cyclic;
      n.m = spec.m;
      n.size = static_cast<std::uint64_t>(spec.m);
      n.field = is_prime(spec.m);
      n.name = "Z/" + std::to_string(spec.m);
      return n;
    case RingSpec::Kind::GaloisField:
    case RingSpec::Kind::GaloisRing: {
      const bool gf = spec.kind == RingSpec::Kind::GaloisField;
      if (gf) spec.e = 1;
      if (!is_prime(spec.p)) throw Error(std::to_string(spec.p) + " is not prime");
      if (spec.k < 1 || spec.e < 1) throw Error("degree and exponent must be positive");
      std::int64_t q = 1;
      for (std::int64_t i = 0; i < spec.e; ++i) {
        q *= spec.p;
        if (static_cast<std::uint64_t>(q) > bound) throw Error("ring exceeds the element bound " + std::to_string(bound));
      }
      std::uint64_t size = 1;
      for (std::int64_t i = 0; i < spec.k; ++i) {
        size *= static_cast<std::uint64_t>(q);
        if (size > bound) throw Error("ring exceeds the element bound " + std::to_string(bound));
      }
      if (spec.poly.empty()) {
        spec.poly = canonical_irreducible(spec.p, spec.k);
      } else {
        while (spec.poly.size() > 1 && mod(spec.poly.back(), q) == 0) spec.poly.pop_back();
        if (static_cast<std::int64_t>(spec.poly.size()) != spec.k + 1)
          throw Error("modulus " + format_poly(spec.poly) + " does not have degree " + std::to_string(spec.k));
        for (auto& c : spec.poly) c = mod(c, q);
        if (spec.poly.back() != 1) throw Error("modulus " + format_poly(spec.poly) + " is not monic");
        if (!is_irreducible_mod_p(spec.poly, spec.p))
          throw Error("modulus " + format_poly(spec.poly) + " is reducible mod " + std::to_string(spec.p));
      }
      n.kind = Node::Kind::Poly;
      n.m = q;
      n.p = spec.p;
      n.e = spec.e;
      n.k = spec.k;
      n.f = spec.poly;
      n.size = size;
      n.field = gf;
      std::int64_t pk = 1;
      for (std::int64_t i = 0; i < spec.k; ++i) pk *= spec.p;
      n.unit_order = static_cast<std::int64_t>(size / static_cast<std::uint64_t>(pk)) * (pk - 1);
      const bool default_mod = spec.k == 1 && spec.poly[0] == 0;
      if (gf) {
        n.name = "GF(" + std::to_string(spec.p) + (spec.k > 1 ? "^" + std::to_string(spec.k) : "");
      } else {
        n.name = "GR(" + std::to_string(spec.p) + "^" + std::to_string(spec.e) + "," + std::to_string(spec.k);
      }
      if (!default_mod) n.name += ";" + format_poly(spec.poly);
      n.name += ")";
      return n;
    }
    case RingSpec::Kind::Product: {
      if (spec.factors.empty()) throw Error("empty product ring");
      n.kind = Node::Kind::Prod;
      std::uint64_t stride = 1;
      n.name = "prod(";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        n.children.push_back(build_node(spec.factors[i], bound));
        n.strides.push_back(stride);
        stride *= n.children.back().size;
        if (stride > bound) throw Error("ring exceeds the element bound " + std::to_string(bound));
        if (i) n.name += ",";
        n.name += n.children.back().name;
      }
      n.name += ")";
      n.size = stride;
      return n;
    }
  }
  throw Error("invalid ring spec");
}

}  // namespace

struct Ring::Impl {
  RingSpec spec;
  Node root;
  std::vector<Elem> units;
  std::vector<int> unit_index;
};

Ring::Ring(const RingSpec& spec, std::size_t bound) {
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  impl->root = build_node(impl->spec, bound);
  impl->unit_index.assign(static_cast<std::size_t>(impl->root.size), -1);
  for (std::uint64_t x = 0; x < impl->root.size; ++x) {
    if (impl->root.is_unit(x)) {
      impl->unit_index[x] = static_cast<int>(impl->units.size());
      impl->units.push_back(static_cast<Elem>(x));
    }
  }
  impl_ = std::move(impl);
}

Ring make_ring(const RingSpec& spec, std::size_t bound) { return Ring(spec, bound); }

const RingSpec& Ring::spec() const { return impl_->spec; }
const std::string& Ring::name() const { return impl_->root.name; }
std::size_t Ring::size() const { return static_cast<std::size_t>(impl_->root.size); }
std::int64_t Ring::characteristic() const { return impl_->root.characteristic(); }
bool Ring::is_field() const { return impl_->root.kind != Node::Kind::Prod && impl_->root.field; }
Elem Ring::one() const { return static_cast<Elem>(impl_->root.one()); }
Elem Ring::from_int(std::int64_t v) const { return static_cast<Elem>(impl_->root.from_int(v)); }
Elem Ring::add(Elem x, Elem y) const { return static_cast<Elem>(impl_->root.add(x, y)); }
Elem Ring::sub(Elem x, Elem y) const { return add(x, neg(y)); }
Elem Ring::neg(Elem x) const { return static_cast<Elem>(impl_->root.neg(x)); }
Elem Ring::mul(Elem x, Elem y) const { return static_cast<Elem>(impl_->root.mul(x, y)); }
Elem Ring::pow(Elem x, std::uint64_t n) const { return static_cast<Elem>(impl_->root.pow(x, n)); }
bool Ring::is_unit(Elem x) const { return impl_->unit_index.at(x) >= 0; }

std::optional<Elem> Ring::inverse(Elem x) const {
  if (!is_unit(x)) return std::nullopt;
  return static_cast<Elem>(impl_->root.inverse(x));
}

Elem Ring::inv(Elem x) const {
  auto r = inverse(x);
  if (!r) throw Error(format(x) + " is not a unit in " + name());
  return *r;
}

std::vector<std::int64_t> Ring::coords(Elem x) const {
  std::vector<std::int64_t> out;
  impl_->root.coords(x, out);
  return out;
}

Elem Ring::from_coords(std::span<const std::int64_t> coords) const {
  std::size_t pos = 0;
  const auto x = impl_->root.from_coords(coords, pos);
  if (pos != coords.size()) throw Error("coordinate vector too long");
  return static_cast<Elem>(x);
}

std::string Ring::format(Elem x) const { return impl_->root.format(x); }
const std::vector<Elem>& Ring::units() const { return impl_->units; }
int Ring::unit_index(Elem x) const { return x < impl_->unit_index.size() ? impl_->unit_index[x] : -1; }

std::vector<Elem> Ring::unit_squares() const {
  std::set<Elem> sq;
  for (Elem u : units()) sq.insert(mul(u, u));
  return {sq.begin(), sq.end()};
}

Mat2 Ring::mat_mul(const Mat2& x, const Mat2& y) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.a[static_cast<std::size_t>(2 * i + j)] = add(mul(x(i, 0), y(0, j)), mul(x(i, 1), y(1, j)));
  return r;
}

std::optional<Mat2> Ring::mat_inverse(const Mat2& x) const {
  const Elem det = sub(mul(x(0, 0), x(1, 1)), mul(x(0, 1), x(1, 0)));
  const auto di = inverse(det);
  if (!di) return std::nullopt;
  return Mat2{{mul(*di, x(1, 1)), mul(*di, neg(x(0, 1))), mul(*di, neg(x(1, 0))), mul(*di, x(0, 0))}};
}

ElementaryFactorization Ring::elementary_factorization(Elem a) const {
  if (!is_unit(a)) throw Error(format(a) + " is not a unit in " + name());
  const Elem o = one(), z = zero(), m1 = neg(o);
  const auto e12 = [&](Elem t) { return Mat2{{o, t, z, o}}; };
  const auto e21 = [&](Elem t) { return Mat2{{o, z, t, o}}; };
  const Mat2 d{{a, z, z, o}};
  const Mat2 d_inv{{inv(a), z, z, o}};

  ElementaryFactorization out;
  out.unit = a;
  // [diag(a,1), w] = diag(a,1) w diag(a,1)^-1 w^-1 with w = e12(1) e21(-1) e12(1);
  // the first half is written as three conjugated elementary factors.
  const std::array<std::pair<std::string, Mat2>, 3> w{{{"e12(1)", e12(o)}, {"e21(-1)", e21(m1)}, {"e12(1)", e12(o)}}};
  for (const auto& [label, m] : w) {
    out.factors.push_back({"diag(a,1)*" + label + "*diag(a,1)^-1", m, d, mat_mul(mat_mul(d, m), d_inv)});
  }
  const std::array<std::pair<std::string, Mat2>, 3> w_inv{{{"e12(-1)", e12(m1)}, {"e21(1)", e21(o)}, {"e12(-1)", e12(m1)}}};
  for (const auto& [label, m] : w_inv) out.factors.push_back({label, m, std::nullopt, m});

  Mat2 prod{{o, z, z, o}};
  for (const auto& f : out.factors) prod = mat_mul(prod, f.value);
  out.product = prod;
  out.expected = Mat2{{a, z, z, inv(a)}};
  out.verified = prod == out.expected;
  return out;
}

}  // namespace mwk
