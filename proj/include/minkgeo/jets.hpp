#pragma once

// Forward-mode truncated Taylor scalars ("jets").
//
//  * Jet<T>  — one variable, derivatives up to order 3 (curve apparatus).
//  * Jet2<T> — two variables, mixed derivatives up to order 2 (surfaces and
//              split-complex / complex function fields).
//
// Both are plain value types with expression-friendly free operators, so any
// closed-form expression written against them propagates exact derivatives.

#include <cmath>

namespace mink {

// ---------------------------------------------------------------------------
// One-variable jet of order 3
// ---------------------------------------------------------------------------

template <class T = double>
struct Jet {
  T f{}, d1{}, d2{}, d3{};

  static constexpr Jet variable(T t) { return {t, T(1), T(0), T(0)}; }
  static constexpr Jet constant(T c) { return {c, T(0), T(0), T(0)}; }

  Jet& operator+=(const Jet& o) {
    f += o.f; d1 += o.d1; d2 += o.d2; d3 += o.d3;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    f -= o.f; d1 -= o.d1; d2 -= o.d2; d3 -= o.d3;
    return *this;
  }
};

template <class T>
constexpr Jet<T> operator+(Jet<T> a, const Jet<T>& b) { return a += b; }
template <class T>
constexpr Jet<T> operator-(Jet<T> a, const Jet<T>& b) { return a -= b; }
template <class T>
constexpr Jet<T> operator-(const Jet<T>& a) { return {-a.f, -a.d1, -a.d2, -a.d3}; }
template <class T>
constexpr Jet<T> operator+(const Jet<T>& a, T c) { return {a.f + c, a.d1, a.d2, a.d3}; }
template <class T>
constexpr Jet<T> operator+(T c, const Jet<T>& a) { return a + c; }
template <class T>
constexpr Jet<T> operator-(const Jet<T>& a, T c) { return {a.f - c, a.d1, a.d2, a.d3}; }
template <class T>
constexpr Jet<T> operator-(T c, const Jet<T>& a) { return {c - a.f, -a.d1, -a.d2, -a.d3}; }

template <class T>
constexpr Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  return {a.f * b.f,
          a.d1 * b.f + a.f * b.d1,
          a.d2 * b.f + T(2) * a.d1 * b.d1 + a.f * b.d2,
          a.d3 * b.f + T(3) * a.d2 * b.d1 + T(3) * a.d1 * b.d2 + a.f * b.d3};
}
template <class T>
constexpr Jet<T> operator*(const Jet<T>& a, T c) { return {a.f * c, a.d1 * c, a.d2 * c, a.d3 * c}; }
template <class T>
constexpr Jet<T> operator*(T c, const Jet<T>& a) { return a * c; }

// Composition with a scalar function given its derivatives at a.f
// (Faa di Bruno up to order 3).
template <class T>
constexpr Jet<T> compose(const Jet<T>& u, T f0, T f1, T f2, T f3) {
  return {f0,
          f1 * u.d1,
          f2 * u.d1 * u.d1 + f1 * u.d2,
          f3 * u.d1 * u.d1 * u.d1 + T(3) * f2 * u.d1 * u.d2 + f1 * u.d3};
}

template <class T>
constexpr Jet<T> reciprocal(const Jet<T>& a) {
  const T v = a.f, v2 = v * v;
  return compose(a, T(1) / v, T(-1) / v2, T(2) / (v2 * v), T(-6) / (v2 * v2));
}
template <class T>
constexpr Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) { return a * reciprocal(b); }
template <class T>
constexpr Jet<T> operator/(const Jet<T>& a, T c) { return a * (T(1) / c); }
template <class T>
constexpr Jet<T> operator/(T c, const Jet<T>& a) { return reciprocal(a) * c; }

template <class T>
Jet<T> sin(const Jet<T>& u) {
  using std::cos; using std::sin;
  const T s = sin(u.f), c = cos(u.f);
  return compose(u, s, c, -s, -c);
}
template <class T>
Jet<T> cos(const Jet<T>& u) {
  using std::cos; using std::sin;
  const T s = sin(u.f), c = cos(u.f);
  return compose(u, c, -s, -c, s);
}
template <class T>
Jet<T> sinh(const Jet<T>& u) {
  using std::cosh; using std::sinh;
  const T s = sinh(u.f), c = cosh(u.f);
  return compose(u, s, c, s, c);
}
template <class T>
Jet<T> cosh(const Jet<T>& u) {
  using std::cosh; using std::sinh;
  const T s = sinh(u.f), c = cosh(u.f);
  return compose(u, c, s, c, s);
}
template <class T>
Jet<T> exp(const Jet<T>& u) {
  using std::exp;
  const T e = exp(u.f);
  return compose(u, e, e, e, e);
}
template <class T>
Jet<T> log(const Jet<T>& u) {
  using std::log;
  const T v = u.f;
  return compose(u, log(v), T(1) / v, T(-1) / (v * v), T(2) / (v * v * v));
}
template <class T>
Jet<T> sqrt(const Jet<T>& u) {
  using std::sqrt;
  const T r = sqrt(u.f);
  return compose(u, r, T(0.5) / r, T(-0.25) / (r * u.f), T(0.375) / (r * u.f * u.f));
}
template <class T>
Jet<T> tanh(const Jet<T>& u) {
  return sinh(u) / cosh(u);
}
template <class T>
Jet<T> pow(const Jet<T>& u, T p) {
  using std::pow;
  const T v = u.f;
  return compose(u, pow(v, p), p * pow(v, p - 1), p * (p - 1) * pow(v, p - 2),
                 p * (p - 1) * (p - 2) * pow(v, p - 3));
}

// ---------------------------------------------------------------------------
// Two-variable jet of order 2
// ---------------------------------------------------------------------------

template <class T = double>
struct Jet2 {
  T f{}, du{}, dv{}, duu{}, duv{}, dvv{};

  static constexpr Jet2 var_u(T u) { return {u, T(1), T(0), T(0), T(0), T(0)}; }
  static constexpr Jet2 var_v(T v) { return {v, T(0), T(1), T(0), T(0), T(0)}; }
  static constexpr Jet2 constant(T c) { return {c, T(0), T(0), T(0), T(0), T(0)}; }

  Jet2& operator+=(const Jet2& o) {
    f += o.f; du += o.du; dv += o.dv; duu += o.duu; duv += o.duv; dvv += o.dvv;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    f -= o.f; du -= o.du; dv -= o.dv; duu -= o.duu; duv -= o.duv; dvv -= o.dvv;
    return *this;
  }
};

template <class T>
constexpr Jet2<T> operator+(Jet2<T> a, const Jet2<T>& b) { return a += b; }
template <class T>
constexpr Jet2<T> operator-(Jet2<T> a, const Jet2<T>& b) { return a -= b; }
template <class T>
constexpr Jet2<T> operator-(const Jet2<T>& a) {
  return {-a.f, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv};
}
template <class T>
constexpr Jet2<T> operator+(const Jet2<T>& a, T c) {
  return {a.f + c, a.du, a.dv, a.duu, a.duv, a.dvv};
}
template <class T>
constexpr Jet2<T> operator+(T c, const Jet2<T>& a) { return a + c; }
template <class T>
constexpr Jet2<T> operator-(const Jet2<T>& a, T c) { return a + (-c); }
template <class T>
constexpr Jet2<T> operator-(T c, const Jet2<T>& a) { return (-a) + c; }

template <class T>
constexpr Jet2<T> operator*(const Jet2<T>& a, const Jet2<T>& b) {
  return {a.f * b.f,
          a.du * b.f + a.f * b.du,
          a.dv * b.f + a.f * b.dv,
          a.duu * b.f + T(2) * a.du * b.du + a.f * b.duu,
          a.duv * b.f + a.du * b.dv + a.dv * b.du + a.f * b.duv,
          a.dvv * b.f + T(2) * a.dv * b.dv + a.f * b.dvv};
}
template <class T>
constexpr Jet2<T> operator*(const Jet2<T>& a, T c) {
  return {a.f * c, a.du * c, a.dv * c, a.duu * c, a.duv * c, a.dvv * c};
}
template <class T>
constexpr Jet2<T> operator*(T c, const Jet2<T>& a) { return a * c; }

template <class T>
constexpr Jet2<T> compose(const Jet2<T>& u, T f0, T f1, T f2) {
  return {f0,
          f1 * u.du,
          f1 * u.dv,
          f2 * u.du * u.du + f1 * u.duu,
          f2 * u.du * u.dv + f1 * u.duv,
          f2 * u.dv * u.dv + f1 * u.dvv};
}

template <class T>
constexpr Jet2<T> reciprocal(const Jet2<T>& a) {
  const T v = a.f;
  return compose(a, T(1) / v, T(-1) / (v * v), T(2) / (v * v * v));
}
template <class T>
constexpr Jet2<T> operator/(const Jet2<T>& a, const Jet2<T>& b) { return a * reciprocal(b); }
template <class T>
constexpr Jet2<T> operator/(const Jet2<T>& a, T c) { return a * (T(1) / c); }
template <class T>
constexpr Jet2<T> operator/(T c, const Jet2<T>& a) { return reciprocal(a) * c; }

template <class T>
Jet2<T> sin(const Jet2<T>& u) {
  using std::cos; using std::sin;
  return compose(u, sin(u.f), cos(u.f), -sin(u.f));
}
template <class T>
Jet2<T> cos(const Jet2<T>& u) {
  using std::cos; using std::sin;
  return compose(u, cos(u.f), -sin(u.f), -cos(u.f));
}
template <class T>
Jet2<T> sinh(const Jet2<T>& u) {
  using std::cosh; using std::sinh;
  return compose(u, sinh(u.f), cosh(u.f), sinh(u.f));
}
template <class T>
Jet2<T> cosh(const Jet2<T>& u) {
  using std::cosh; using std::sinh;
  return compose(u, cosh(u.f), sinh(u.f), cosh(u.f));
}
template <class T>
Jet2<T> exp(const Jet2<T>& u) {
  using std::exp;
  const T e = exp(u.f);
  return compose(u, e, e, e);
}
template <class T>
Jet2<T> log(const Jet2<T>& u) {
  using std::log;
  return compose(u, log(u.f), T(1) / u.f, T(-1) / (u.f * u.f));
}
template <class T>
Jet2<T> sqrt(const Jet2<T>& u) {
  using std::sqrt;
  const T r = sqrt(u.f);
  return compose(u, r, T(0.5) / r, T(-0.25) / (r * u.f));
}
template <class T>
Jet2<T> pow(const Jet2<T>& u, T p) {
  using std::pow;
  return compose(u, pow(u.f, p), p * pow(u.f, p - 1), p * (p - 1) * pow(u.f, p - 2));
}

using Jet3d = Jet<double>;
using Jet2d = Jet2<double>;

}  // namespace mink
