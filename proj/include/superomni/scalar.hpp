#ifndef SUPEROMNI_SCALAR_HPP
#define SUPEROMNI_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

namespace superomni {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class Scalar;

/// Coefficient field: the rationals, or F_p for an odd prime p.
/// The factor 1/2 used by the skew bracket and the pairing exists in every
/// admitted field; operations that also need 1/3 reject p = 3 themselves.
class Field {
public:
  Field() = default;  // rationals
  static Field rationals() { return Field(); }
  static Field primeField(long p);

  bool isRational() const { return m_p == 0; }
  long prime() const { return m_p; }  // 0 for the rationals

  Scalar zero() const;
  Scalar one() const;
  Scalar fromLong(long n) const;
  Scalar parse(const std::string& text) const;  // "n" or "n/d"

  bool operator==(const Field& other) const { return m_p == other.m_p; }
  bool operator!=(const Field& other) const { return m_p != other.m_p; }
  std::string str() const;

private:
  explicit Field(long p) : m_p(p) {}
  long m_p = 0;
};

/// Exact field element. Rationals are kept reduced with positive denominator
/// (mpq canonical form); prime-field elements are residues in [0, p).
class Scalar {
public:
  Scalar() : m_rep(mpq_class(0)) {}

  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(long value, long p);

  bool isRational() const { return std::holds_alternative<mpq_class>(m_rep); }
  long prime() const;  // 0 for rationals
  Field field() const;

  bool isZero() const;
  bool isOne() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  int compare(const Scalar& o) const;  // total order within one field

  const mpq_class& rationalValue() const;
  long residueValue() const;

  std::string str() const;

private:
  struct ModP {
    long r;
    long p;
  };
  explicit Scalar(ModP m) : m_rep(m) {}
  explicit Scalar(mpq_class q) : m_rep(std::move(q)) {}
  void requireSameField(const Scalar& o) const;

  std::variant<mpq_class, ModP> m_rep;
};

}  // namespace superomni

#endif
