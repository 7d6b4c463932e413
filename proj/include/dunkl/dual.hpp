#ifndef DUNKL_DUAL_HPP
#define DUNKL_DUAL_HPP

// Forward-mode automatic differentiation. Nesting Dual<Dual<double>> gives
// second derivatives.

#include <cmath>
#include <concepts>
#include <type_traits>

namespace dunkl {

template <typename T>
struct Dual {
    T v{};
    T d{};

    constexpr Dual() = default;
    constexpr Dual(T value, T deriv) : v(value), d(deriv) {}
    template <typename S>
        requires std::is_arithmetic_v<S>
    constexpr Dual(S value) : v(static_cast<T>(value)), d(0)
    {
    }

    constexpr Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
    constexpr Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
    constexpr Dual& operator*=(const Dual& o)
    {
        d = d * o.v + v * o.d;
        v *= o.v;
        return *this;
    }
    constexpr Dual& operator/=(const Dual& o)
    {
        d = (d * o.v - v * o.d) / (o.v * o.v);
        v /= o.v;
        return *this;
    }
};

template <typename T> struct is_dual : std::false_type {};
template <typename T> struct is_dual<Dual<T>> : std::true_type {};

template <typename T> constexpr Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <typename T> constexpr Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <typename T> constexpr Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <typename T> constexpr Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <typename T> constexpr Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }

template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator+(Dual<T> a, S s) { a.v += s; return a; }
template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator+(S s, Dual<T> a) { a.v += s; return a; }
template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator-(Dual<T> a, S s) { a.v -= s; return a; }
template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator-(S s, const Dual<T>& a) { return {s - a.v, -a.d}; }
template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator*(const Dual<T>& a, S s) { return {a.v * s, a.d * s}; }
template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator*(S s, const Dual<T>& a) { return {a.v * s, a.d * s}; }
template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator/(const Dual<T>& a, S s) { return {a.v / s, a.d / s}; }
template <typename T, typename S>
    requires std::is_arithmetic_v<S>
constexpr Dual<T> operator/(S s, const Dual<T>& a) { return Dual<T>(s) / a; }

template <typename T>
Dual<T> sin(const Dual<T>& a)
{
    using std::cos;
    using std::sin;
    return {sin(a.v), a.d * cos(a.v)};
}

template <typename T>
Dual<T> cos(const Dual<T>& a)
{
    using std::cos;
    using std::sin;
    return {cos(a.v), -(a.d * sin(a.v))};
}

template <typename T>
Dual<T> exp(const Dual<T>& a)
{
    using std::exp;
    const T e = exp(a.v);
    return {e, a.d * e};
}

template <typename T>
Dual<T> sqrt(const Dual<T>& a)
{
    using std::sqrt;
    const T r = sqrt(a.v);
    return {r, a.d / (2.0 * r)};
}

/// Underlying double of a (possibly nested) dual number.
inline constexpr double primal(double x) { return x; }
template <typename T>
constexpr double primal(const Dual<T>& x) { return primal(x.v); }

/// f'(x) for a callable generic in its scalar argument.
template <typename F>
auto derivative(F&& f, double x)
{
    return f(Dual<double>(x, 1.0)).d;
}

/// f''(x) through a nested dual.
template <typename F>
auto second_derivative(F&& f, double x)
{
    using D = Dual<double>;
    return f(Dual<D>(D(x, 1.0), D(1.0, 0.0))).d.d;
}

} // namespace dunkl

#endif
