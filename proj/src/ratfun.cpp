#include "matwb/ratfun.hpp"

#include <cctype>
#include <sstream>

namespace matwb {

Poly Poly::operator-() const {
  std::vector<Int> r(c_);
  for (auto& v : r) v = -v;
  return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (isZero() || o.isZero()) return Poly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

std::optional<Poly> Poly::divExact(const Poly& d) const {
  if (d.isZero()) inputError("division by zero polynomial");
  if (isZero()) return Poly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<Int> rem(c_);
  std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1, Int(0));
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Int& lead = rem[static_cast<size_t>(k + d.degree())];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), d.leading().get_mpz_t())) return std::nullopt;
    Int q = lead / d.leading();
    quot[static_cast<size_t>(k)] = q;
    for (int i = 0; i <= d.degree(); ++i) rem[static_cast<size_t>(k + i)] -= q * d.coeff(i);
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return Poly(std::move(quot));
}

Int Poly::content() const {
  Int g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitivePart() const {
  if (isZero()) return Poly();
  Int g = content();
  std::vector<Int> r(c_);
  for (auto& v : r) v /= g;
  return Poly(std::move(r));
}

namespace {

// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a reduced mod b.
Poly pseudoRem(Poly a, const Poly& b) {
  while (!a.isZero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    std::vector<Int> scaled;
    scaled.reserve(static_cast<size_t>(a.degree()) + 1);
    for (int i = 0; i <= a.degree(); ++i) scaled.push_back(a.coeff(i) * b.leading());
    Poly as{std::move(scaled)};
    std::vector<Int> sub(static_cast<size_t>(shift + b.degree()) + 1, Int(0));
    for (int i = 0; i <= b.degree(); ++i) sub[static_cast<size_t>(shift + i)] = b.coeff(i) * a.leading();
    a = as - Poly(std::move(sub));
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.isZero() && b.isZero()) return Poly();
  Poly r0 = a.primitivePart(), r1 = b.primitivePart();
  if (r0.isZero()) std::swap(r0, r1);
  while (!r1.isZero()) {
    Poly r2 = pseudoRem(r0, r1).primitivePart();
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  if (r0.leading() < 0) r0 = -r0;
  return r0;
}

unsigned long Poly::evalMod(unsigned long p, unsigned long c) const {
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * static_cast<long>(c) + *it;
  Int m = acc % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  return m.get_ui();
}

mpq_class Poly::evalRat(const mpq_class& x) const {
  mpq_class acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

std::string Poly::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& v = coeff(i);
    if (v == 0) continue;
    Int mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "a";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

PartialField PartialField::finiteField(unsigned long p) {
  if (p < 2) inputError("finite field characteristic must be a prime");
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) inputError("finite field characteristic must be a prime");
  return {FieldKind::FiniteField, p};
}

std::string PartialField::name() const {
  switch (kind) {
    case FieldKind::NearRegular: return "near-regular";
    case FieldKind::Regular: return "regular";
    case FieldKind::FiniteField: return "gf(" + std::to_string(p) + ")";
  }
  return "?";
}

void RatFun::normalize(Poly num, Poly den) {
  if (den.isZero()) inputError("division by zero polynomial");
  if (num.isZero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0 || g.leading() != 1) {
    num = *num.divExact(g);
    den = *den.divExact(g);
  }
  Int k;
  mpz_gcd(k.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  if (k != 1) {
    num = *num.divExact(Poly(k));
    den = *den.divExact(Poly(k));
  }
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFun RatFun::operator+(const RatFun& o) const { return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFun RatFun::operator-(const RatFun& o) const { return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.isZero()) inputError("division by zero");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun RatFun::inverse() const {
  if (isZero()) inputError("division by zero");
  return RatFun(den_, num_);
}

unsigned long modInverse(unsigned long v, unsigned long p) {
  // Fermat; p prime, v nonzero mod p.
  unsigned long r = 1, base = v % p, e = p - 2;
  while (e) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r;
}

unsigned long RatFun::evalMod(unsigned long p, unsigned long c) const {
  unsigned long cm = c % p;
  if (cm == 0 || cm == 1) inputError("image not a near-regular homomorphism");
  unsigned long dn = den_.evalMod(p, cm);
  if (dn == 0) inputError("homomorphism undefined at this point");
  return (num_.evalMod(p, cm) * modInverse(dn, p)) % p;
}

unsigned long evalHom(const RatFun& x, const PartialField& pf, unsigned long c) {
  if (pf.kind != FieldKind::FiniteField) inputError("evaluation target must be a finite field");
  return x.evalMod(pf.p, c);
}

std::string RatFun::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skipWs() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skipWs();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skipWs();
    return i < s.size() ? s[i] : '\0';
  }

  RatFun expr() {
    RatFun v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  RatFun term() {
    RatFun v = factor();
    for (;;) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  RatFun factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    RatFun base = primary();
    if (eat('^')) {
      long e = integer();
      RatFun r(1);
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  long integer() {
    skipWs();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) inputError("expected integer exponent at position " + std::to_string(start));
    return std::stol(s.substr(start, i - start));
  }

  RatFun primary() {
    skipWs();
    if (i >= s.size()) inputError("unexpected end of expression");
    char c = s[i];
    if (c == '(') {
      ++i;
      RatFun v = expr();
      if (!eat(')')) inputError("missing closing parenthesis");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return RatFun(Int(s.substr(start, i - start)));
    }
    if (c == 'a') {
      ++i;
      return RatFun::variable();
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      inputError(std::string("unknown variable letter '") + c + "' (only `a` is allowed)");
    inputError(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RatFun RatFun::parse(const std::string& text) {
  Parser p(text);
  RatFun v = p.expr();
  p.skipWs();
  if (p.i != text.size()) inputError("trailing input in expression: '" + text.substr(p.i) + "'");
  return v;
}

namespace {

// Removes all factors f from p; returns the multiplicity.
long stripFactor(Poly& p, const Poly& f) {
  long count = 0;
  for (;;) {
    auto q = p.divExact(f);
    if (!q) return count;
    p = std::move(*q);
    ++count;
  }
}

}  // namespace

std::optional<GroupFactorization> inGroup(const PartialField& pf, const RatFun& x) {
  if (x.isZero()) return std::nullopt;
  switch (pf.kind) {
    case FieldKind::FiniteField: {
      if (!x.isConstant()) return std::nullopt;
      if (x.den().coeff(0) % static_cast<long>(pf.p) == 0) return std::nullopt;
      Int n = x.num().coeff(0) % static_cast<long>(pf.p);
      if (n == 0) return std::nullopt;
      return GroupFactorization{};
    }
    case FieldKind::Regular: {
      if (x.den() != Poly(1)) return std::nullopt;
      if (x.num() == Poly(1)) return GroupFactorization{0, 0, 0};
      if (x.num() == Poly(-1)) return GroupFactorization{1, 0, 0};
      return std::nullopt;
    }
    case FieldKind::NearRegular: {
      Poly n = x.num(), d = x.den();
      const Poly alpha = Poly::variable();
      const Poly oneMinusAlpha = Poly(1) - alpha;
      long i = stripFactor(n, alpha) - stripFactor(d, alpha);
      long j = stripFactor(n, oneMinusAlpha) - stripFactor(d, oneMinusAlpha);
      // Membership iff the residue after stripping is +-1.
      if (n == d) return GroupFactorization{0, i, j};
      if (n == -d) return GroupFactorization{1, i, j};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

RatFun reconstruct(const GroupFactorization& f) {
  RatFun r(f.sign % 2 ? -1 : 1);
  const RatFun alpha = RatFun::variable();
  const RatFun oneMinusAlpha = RatFun(1) - alpha;
  for (long k = 0; k < std::abs(f.expAlpha); ++k) r = f.expAlpha > 0 ? r * alpha : r / alpha;
  for (long k = 0; k < std::abs(f.expOneMinusAlpha); ++k)
    r = f.expOneMinusAlpha > 0 ? r * oneMinusAlpha : r / oneMinusAlpha;
  return r;
}

}  // namespace matwb
