#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

// Teach Eigen about GMP's exact scalar types. All linear algebra in this
// library runs over these; there is no floating point in any decision path.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace deligne {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

inline Int vec_gcd(const IVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  return g;
}

// v / gcd(v); the zero vector is returned unchanged.
inline IVec primitive(IVec v) {
  Int g = vec_gcd(v);
  if (g == 0) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
  return v;
}

// Clear denominators, then reduce to a primitive integer vector.
inline IVec primitive(const QVec& v) {
  Int den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, v[i].get_den());
  IVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Int(v[i] * den);
  return primitive(std::move(out));
}

inline QVec to_rational(const IVec& v) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline bool vec_eq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

struct IVecLess {
  bool operator()(const IVec& a, const IVec& b) const { return lex_less(a, b); }
};

}  // namespace deligne
