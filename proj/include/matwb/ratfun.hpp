#ifndef MATWB_RATFUN_HPP
#define MATWB_RATFUN_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matwb {

using Int = mpz_class;

enum class ErrorKind { Input, Bound, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void inputError(const std::string& what) { throw Error(ErrorKind::Input, what); }
[[noreturn]] inline void boundError(const std::string& what) { throw Error(ErrorKind::Bound, what); }

// Polynomial in the single indeterminate (written `a` in text form) with
// arbitrary-precision integer coefficients. coeff(i) is the degree-i
// coefficient; the zero polynomial has an empty coefficient vector and
// degree -1.
class Poly {
public:
  Poly() = default;
  Poly(long v) : Poly(Int(v)) {}
  Poly(const Int& v) {
    if (v != 0) c_.push_back(v);
  }
  explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return Poly(std::vector<Int>{0, 1}); }

  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int i) const {
    static const Int zero(0);
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : zero;
  }
  const Int& leading() const { return c_.back(); }
  bool isConstant() const { return c_.size() <= 1; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  // Exact division over the integers. Returns nullopt when `d` does not
  // divide `*this` with an integer-coefficient quotient.
  std::optional<Poly> divExact(const Poly& d) const;

  // gcd of coefficient absolute values (0 for the zero polynomial).
  Int content() const;
  Poly primitivePart() const;

  // Primitive gcd with positive leading coefficient (primitive PRS).
  static Poly gcd(const Poly& a, const Poly& b);

  // Evaluation at `c` modulo the prime `p`.
  unsigned long evalMod(unsigned long p, unsigned long c) const;

  mpq_class evalRat(const mpq_class& x) const;

  std::string str() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

enum class FieldKind { NearRegular, Regular, FiniteField };

struct PartialField {
  FieldKind kind = FieldKind::NearRegular;
  unsigned long p = 0;  // characteristic, FiniteField only

  static PartialField nearRegular() { return {FieldKind::NearRegular, 0}; }
  static PartialField regular() { return {FieldKind::Regular, 0}; }
  static PartialField finiteField(unsigned long p);

  bool operator==(const PartialField& o) const { return kind == o.kind && p == o.p; }
  std::string name() const;
};

// Exponents of the group element (-1)^s * a^i * (1-a)^j.
struct GroupFactorization {
  int sign = 0;  // s, reduced mod 2
  long expAlpha = 0;
  long expOneMinusAlpha = 0;

  bool operator==(const GroupFactorization& o) const {
    return sign == o.sign && expAlpha == o.expAlpha && expOneMinusAlpha == o.expOneMinusAlpha;
  }
};

// Rational function num/den in canonical form: den != 0, no common
// polynomial factor over Q, contents coprime, positive leading coefficient
// on the denominator. Equality is structural.
class RatFun {
public:
  RatFun() : num_(), den_(1) {}
  RatFun(long v) : num_(v), den_(1) {}
  RatFun(const Int& v) : num_(v), den_(1) {}
  RatFun(const Poly& num) : num_(num), den_(1) {}
  RatFun(const Poly& num, const Poly& den) { normalize(num, den); }

  static RatFun variable() { return RatFun(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_ == Poly(1) && den_ == Poly(1); }
  bool isConstant() const { return num_.isConstant() && den_.isConstant(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator-() const;
  RatFun inverse() const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // Evaluation at a = c over GF(p); requires c not in {0,1} mod p and the
  // denominator nonvanishing at c.
  unsigned long evalMod(unsigned long p, unsigned long c) const;

  std::string str() const;

  // Text grammar: integer literals, the variable letter `a`, operators
  // + - * / ^ and parentheses. Any other variable letter is rejected.
  static RatFun parse(const std::string& text);

private:
  void normalize(Poly num, Poly den);
  Poly num_, den_;
};

// Membership in the group of `pf`, with the factorization when the group is
// generated by -1, a, 1-a. Zero is never in the group. For finite fields
// every nonzero residue is a member and the trivial factorization is
// returned.
std::optional<GroupFactorization> inGroup(const PartialField& pf, const RatFun& x);

RatFun reconstruct(const GroupFactorization& f);

// a = c over GF(p), defined when c maps a and 1-a to units.
unsigned long evalHom(const RatFun& x, const PartialField& pf, unsigned long c);

unsigned long modInverse(unsigned long v, unsigned long p);

}  // namespace matwb

#endif
