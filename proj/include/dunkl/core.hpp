#ifndef DUNKL_CORE_HPP
#define DUNKL_CORE_HPP

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dunkl {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Error kinds. Everything the library throws derives from one of these.

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegenerateFamilyError : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroFunctionError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParameterError : public DomainError {
public:
    using DomainError::DomainError;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegeneracyError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Deformation parameters of the oscillator. Both must exceed -1/2.
struct MuParams {
    double x = 0.0;
    double y = 0.0;

    MuParams() = default;
    MuParams(double mu_x, double mu_y) : x(mu_x), y(mu_y)
    {
        if (!(mu_x > -0.5) || !(mu_y > -0.5)) {
            throw DomainError("mu parameters must exceed -1/2 (got mu_x=" + std::to_string(mu_x) +
                              ", mu_y=" + std::to_string(mu_y) + ")");
        }
    }

    double sum() const { return x + y; }
};

/// Non-negative integer or half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt integer(int n) { return HalfInt(2 * n); }

    /// Parses "3", "3/2" or "1.5".
    static HalfInt parse(const std::string& text)
    {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            if (text.substr(slash + 1) != "2") {
                throw UsageError("half-integer must have denominator 2: '" + text + "'");
            }
            return HalfInt(parse_int(text.substr(0, slash)));
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            const double v = std::stod(text);
            const double twice = 2.0 * v;
            if (std::abs(twice - std::round(twice)) > 1e-12) {
                throw UsageError("not a half-integer: '" + text + "'");
            }
            return HalfInt(static_cast<int>(std::lround(twice)));
        }
        return HalfInt(2 * parse_int(text));
    }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// floor(n) for n >= 0
    constexpr int floor() const { return twice_ / 2; }

    std::string str() const
    {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}

    static int parse_int(const std::string& s)
    {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + s + "'");
        }
        if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
        return v;
    }

    int twice_ = 0;
};

namespace math {

/// log|Gamma(x)|, with the sign of Gamma(x) written to *sign when given.
inline double log_gamma(double x, int* sign = nullptr)
{
    int s = 1;
#if defined(__GLIBC__) || defined(__APPLE__)
    const double v = ::lgamma_r(x, &s);
#else
    const double v = std::lgamma(x);
    if (x < 0.0 && std::fmod(std::floor(-x), 2.0) == 0.0) s = -1;
#endif
    if (sign) *sign = s;
    return v;
}

/// Gamma(a) / Gamma(b) through log-Gamma differences.
inline double gamma_ratio(double a, double b)
{
    int sa = 1;
    int sb = 1;
    const double la = log_gamma(a, &sa);
    const double lb = log_gamma(b, &sb);
    return sa * sb * std::exp(la - lb);
}

/// Rising factorial (a)_n for integer n >= 0.
inline double pochhammer(double a, int n)
{
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
}

/// Rising factorial with a real count, (a)_s = Gamma(a+s)/Gamma(a).
inline double pochhammer_real(double a, double s)
{
    const double rs = std::round(s);
    if (std::abs(s - rs) == 0.0 && rs >= 0.0) return pochhammer(a, static_cast<int>(rs));
    return gamma_ratio(a + s, a);
}

inline double log_factorial(int n) { return log_gamma(n + 1.0); }

inline constexpr int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace math

/// Deformed integer [n]_mu = n + mu (1 - (-1)^n).
inline double mu_number(int n, double mu)
{
    return n + mu * (1 - math::parity_sign(n));
}

} // namespace dunkl

#endif
