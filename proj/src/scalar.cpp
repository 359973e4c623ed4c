#include "superomni/scalar.hpp"

namespace superomni {

namespace {

bool isPrime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long normalizeResidue(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long mulMod(long a, long b, long p) {
  return static_cast<long>(static_cast<unsigned __int128>(a) * b % p);
}

// inverse of a mod p, a != 0 mod p
long invMod(long a, long p) {
  long t = 0, newT = 1, r = p, newR = a;
  while (newR != 0) {
    long q = r / newR;
    long tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  return normalizeResidue(t, p);
}

}  // namespace

Field Field::primeField(long p) {
  if (p < 3 || p % 2 == 0 || !isPrime(p))
    throw Error("prime field modulus must be an odd prime, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return fromLong(0); }
Scalar Field::one() const { return fromLong(1); }

Scalar Field::fromLong(long n) const {
  return m_p == 0 ? Scalar::rational(n) : Scalar::residue(n, m_p);
}

Scalar Field::parse(const std::string& text) const {
  std::string s = text;
  s.erase(remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw Error("empty scalar literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw Error("bad scalar literal '" + text + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  q.canonicalize();
  if (m_p == 0) return Scalar::rational(q);
  mpz_class num = q.get_num() % m_p;
  mpz_class den = q.get_den() % m_p;
  long n = normalizeResidue(num.get_si(), m_p);
  long d = normalizeResidue(den.get_si(), m_p);
  if (d == 0) throw Error("denominator of '" + text + "' vanishes mod " + std::to_string(m_p));
  return Scalar::residue(mulMod(n, invMod(d, m_p), m_p), m_p);
}

std::string Field::str() const {
  return m_p == 0 ? std::string("Q") : "F" + std::to_string(m_p);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::residue(long value, long p) {
  return Scalar(ModP{normalizeResidue(value, p), p});
}

long Scalar::prime() const {
  return isRational() ? 0 : std::get<ModP>(m_rep).p;
}

Field Scalar::field() const {
  return isRational() ? Field::rationals() : Field::primeField(prime());
}

bool Scalar::isZero() const {
  return isRational() ? std::get<mpq_class>(m_rep) == 0 : std::get<ModP>(m_rep).r == 0;
}

bool Scalar::isOne() const {
  return isRational() ? std::get<mpq_class>(m_rep) == 1 : std::get<ModP>(m_rep).r == 1;
}

void Scalar::requireSameField(const Scalar& o) const {
  if (prime() != o.prime())
    throw Error("scalar field mismatch: " + field().str() + " vs " + o.field().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  requireSameField(o);
  if (isRational())
    return Scalar(mpq_class(std::get<mpq_class>(m_rep) + std::get<mpq_class>(o.m_rep)));
  const ModP& a = std::get<ModP>(m_rep);
  const ModP& b = std::get<ModP>(o.m_rep);
  return Scalar(ModP{normalizeResidue(a.r + b.r, a.p), a.p});
}

Scalar Scalar::operator-(const Scalar& o) const {
  requireSameField(o);
  if (isRational())
    return Scalar(mpq_class(std::get<mpq_class>(m_rep) - std::get<mpq_class>(o.m_rep)));
  const ModP& a = std::get<ModP>(m_rep);
  const ModP& b = std::get<ModP>(o.m_rep);
  return Scalar(ModP{normalizeResidue(a.r - b.r, a.p), a.p});
}

Scalar Scalar::operator*(const Scalar& o) const {
  requireSameField(o);
  if (isRational())
    return Scalar(mpq_class(std::get<mpq_class>(m_rep) * std::get<mpq_class>(o.m_rep)));
  const ModP& a = std::get<ModP>(m_rep);
  const ModP& b = std::get<ModP>(o.m_rep);
  return Scalar(ModP{mulMod(a.r, b.r, a.p), a.p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (isRational()) return Scalar(mpq_class(-std::get<mpq_class>(m_rep)));
  const ModP& a = std::get<ModP>(m_rep);
  return Scalar(ModP{normalizeResidue(-a.r, a.p), a.p});
}

Scalar Scalar::inverse() const {
  if (isZero()) throw Error("division by zero in " + field().str());
  if (isRational()) return Scalar(mpq_class(1 / std::get<mpq_class>(m_rep)));
  const ModP& a = std::get<ModP>(m_rep);
  return Scalar(ModP{invMod(a.r, a.p), a.p});
}

bool Scalar::operator==(const Scalar& o) const {
  requireSameField(o);
  if (isRational()) return std::get<mpq_class>(m_rep) == std::get<mpq_class>(o.m_rep);
  return std::get<ModP>(m_rep).r == std::get<ModP>(o.m_rep).r;
}

int Scalar::compare(const Scalar& o) const {
  requireSameField(o);
  if (isRational()) {
    int c = cmp(std::get<mpq_class>(m_rep), std::get<mpq_class>(o.m_rep));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  long a = std::get<ModP>(m_rep).r, b = std::get<ModP>(o.m_rep).r;
  return a < b ? -1 : (a > b ? 1 : 0);
}

const mpq_class& Scalar::rationalValue() const {
  if (!isRational()) throw Error("not a rational scalar");
  return std::get<mpq_class>(m_rep);
}

long Scalar::residueValue() const {
  if (isRational()) throw Error("not a prime-field scalar");
  return std::get<ModP>(m_rep).r;
}

std::string Scalar::str() const {
  if (isRational()) return std::get<mpq_class>(m_rep).get_str();
  return std::to_string(std::get<ModP>(m_rep).r);
}

}  // namespace superomni
