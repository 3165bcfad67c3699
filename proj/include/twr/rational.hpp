#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace twr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational extended with a single +infinity used for "unreachable" /
// "no feasible speed". Infinity is absorbing where the result is
// unambiguous (inf + x, inf * positive, finite / inf == 0); indeterminate
// combinations (inf - inf, 0 * inf, inf / inf) throw std::domain_error, as
// does anything that would produce a negative infinity. Division by zero
// throws too.
class Rat {
public:
    Rat() : v_(0), inf_(false) {}
    Rat(long long n) : v_(n), inf_(false) {}
    Rat(long long num, long long den) : inf_(false) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        BigInt n(num), d(den);
        if (d < 0) {
            n = -n;
            d = -d;
        }
        v_ = BigRat(n, d);
    }
    explicit Rat(BigRat v) : v_(std::move(v)), inf_(false) {}

    static Rat infinity() {
        Rat r;
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }
    bool is_zero() const { return !inf_ && v_.is_zero(); }
    bool is_negative() const { return !inf_ && v_ < 0; }

    // Finite accessors; throw on infinity so callers can't silently read 0.
    const BigRat& value() const {
        require_finite("value");
        return v_;
    }
    BigInt num() const {
        require_finite("num");
        return numerator(v_);
    }
    BigInt den() const {
        require_finite("den");
        return denominator(v_);
    }

    Rat operator-() const {
        if (inf_) throw std::domain_error("Rat: negating infinity");
        return Rat(BigRat(-v_));
    }

    Rat& operator+=(const Rat& o) {
        if (inf_ || o.inf_) {
            inf_ = true;
            v_ = 0;
        } else {
            v_ += o.v_;
        }
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        if (o.inf_) throw std::domain_error("Rat: subtracting infinity");
        if (!inf_) v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        if (inf_ || o.inf_) {
            const Rat& fin = inf_ ? o : *this;
            if (fin.inf_) {
                // inf * inf is fine, stays inf
            } else if (fin.v_ <= 0) {
                throw std::domain_error("Rat: infinity times non-positive");
            }
            inf_ = true;
            v_ = 0;
        } else {
            v_ *= o.v_;
        }
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.inf_) {
            if (inf_) throw std::domain_error("Rat: infinity / infinity");
            v_ = 0;
            return *this;
        }
        if (o.v_.is_zero()) throw std::domain_error("Rat: division by zero");
        if (inf_) {
            if (o.v_ < 0) throw std::domain_error("Rat: infinity / negative");
            return *this;
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Largest integer <= *this (as an exact Rat). Throws on infinity.
    Rat floor() const;
    Rat ceil() const;
    // floor as a machine integer; throws if out of range or infinite.
    long long floor_ll() const;

    Rat abs() const {
        if (inf_) return *this;
        return v_ < 0 ? -*this : *this;
    }

    double to_double() const;

    // "p/q", integer, or decimal ("-3.25"); "inf" for infinity.
    static Rat parse(const std::string& text);
    std::string to_string() const;

private:
    void require_finite(const char* what) const {
        if (inf_) throw std::domain_error(std::string("Rat: ") + what + " of infinity");
    }

    BigRat v_;
    bool inf_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace twr
