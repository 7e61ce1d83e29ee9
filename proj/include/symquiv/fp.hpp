#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symquiv {

// Element of a prime field F_p, odd p. A modulus of 0 marks an integer
// literal (e.g. a default-constructed zero); literals adopt the modulus of
// the other operand, so generic code can write `x + 1`-style expressions.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v, long long p) : v_(v), p_(p) {
        if (p_ < 0 || p_ == 2) throw std::invalid_argument("Fp: modulus must be odd prime or 0");
        normalize();
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, p_); }

    Fp operator-() const { return Fp(-v_, p_); }
    friend Fp operator+(const Fp& a, const Fp& b) {
        long long p = joint(a, b);
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long long p = joint(a, b);
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long long p = joint(a, b);
        if (p == 0) return Fp(a.v_ * b.v_, 0);
        return Fp((a.v_ % p) * (b.v_ % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        joint(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::domain_error("Fp: inverse of integer literal");
        }
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        long long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (a != 1) throw std::domain_error("Fp: modulus not prime");
        return Fp(x0, p_);
    }

    std::string str() const { return std::to_string(v_); }

private:
    void normalize() {
        if (p_ == 0) return;
        v_ %= p_;
        if (v_ < 0) v_ += p_;
    }
    static long long joint(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::invalid_argument("Fp: mixed moduli");
        return a.p_ != 0 ? a.p_ : b.p_;
    }

    long long v_;
    long long p_;
};

inline std::string to_string(const Fp& x) { return x.str(); }

}  // namespace symquiv
