#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "supercatalan/errors.hpp"

namespace supercatalan {

using boost::multiprecision::cpp_int;

class Int;

/// Arbitrary-precision natural number (>= 0). All arithmetic is exact;
/// subtraction and division are checked so a Nat can never go negative
/// or lose a remainder silently.
class Nat {
public:
    Nat() : v_(0) {}
    Nat(unsigned long long v) : v_(v) {}
    explicit Nat(cpp_int v) : v_(std::move(v)) {
        if (v_ < 0) {
            throw domain_error("Nat: negative value " + v_.str());
        }
    }

    const cpp_int& value() const { return v_; }
    std::string str() const { return v_.str(); }
    bool is_zero() const { return v_.is_zero(); }

    /// Fits-check conversion for loop bounds and serialization.
    std::uint64_t to_uint64() const {
        if (v_ > std::numeric_limits<std::uint64_t>::max()) {
            throw domain_error("Nat: " + v_.str() + " does not fit in 64 bits");
        }
        return v_.convert_to<std::uint64_t>();
    }

    Nat& operator+=(const Nat& o) {
        v_ += o.v_;
        return *this;
    }
    Nat& operator*=(const Nat& o) {
        v_ *= o.v_;
        return *this;
    }
    friend Nat operator+(Nat a, const Nat& b) { return a += b; }
    friend Nat operator*(Nat a, const Nat& b) { return a *= b; }

    /// a - b; throws if b > a.
    Nat checked_sub(const Nat& o) const {
        if (o.v_ > v_) {
            throw domain_error("Nat: subtraction underflow " + str() + " - " + o.str());
        }
        return Nat(cpp_int(v_ - o.v_));
    }

    friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        return a.v_.compare(b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.v_; }

private:
    cpp_int v_;
};

/// Arbitrary-precision signed integer.
class Int {
public:
    Int() : v_(0) {}
    Int(long long v) : v_(v) {}
    Int(const Nat& n) : v_(n.value()) {}
    explicit Int(cpp_int v) : v_(std::move(v)) {}

    const cpp_int& value() const { return v_; }
    std::string str() const { return v_.str(); }
    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Nat abs() const { return Nat(cpp_int(boost::multiprecision::abs(v_))); }

    /// Conversion back to Nat; throws if negative.
    Nat to_nat() const {
        if (v_ < 0) {
            throw domain_error("Int: " + v_.str() + " is negative, not a Nat");
        }
        return Nat(v_);
    }

    long long to_int64() const {
        if (v_ > std::numeric_limits<long long>::max() ||
            v_ < std::numeric_limits<long long>::min()) {
            throw domain_error("Int: " + v_.str() + " does not fit in 64 bits");
        }
        return v_.convert_to<long long>();
    }

    Int operator-() const { return Int(cpp_int(-v_)); }
    Int& operator+=(const Int& o) {
        v_ += o.v_;
        return *this;
    }
    Int& operator-=(const Int& o) {
        v_ -= o.v_;
        return *this;
    }
    Int& operator*=(const Int& o) {
        v_ *= o.v_;
        return *this;
    }
    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        return a.v_.compare(b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Int& n) { return os << n.v_; }

private:
    cpp_int v_;
};

/// Quotient a/b, defined only when b divides a exactly. A remainder means
/// a computation bug upstream, reported as non_divisible_error.
inline Nat checked_div(const Nat& a, const Nat& b) {
    if (b.is_zero()) {
        throw domain_error("checked_div: division by zero");
    }
    cpp_int q, r;
    boost::multiprecision::divide_qr(a.value(), b.value(), q, r);
    if (!r.is_zero()) {
        throw non_divisible_error("checked_div: " + b.str() + " does not divide " + a.str());
    }
    return Nat(std::move(q));
}

/// Exact rational, always in lowest terms with positive denominator.
/// Zero is represented as 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(const Int& num) : num_(num), den_(1) {}
    Rat(Int num, Nat den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const Int& numerator() const { return num_; }
    const Nat& denominator() const { return den_; }
    bool is_integral() const { return den_ == Nat(1); }

    Int to_int() const {
        if (!is_integral()) {
            throw domain_error("Rat: " + str() + " is not an integer");
        }
        return num_;
    }

    Rat operator-() const { return Rat(-num_, den_, already_reduced{}); }
    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * Int(b.den_) + b.num_ * Int(a.den_), a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_.is_zero()) {
            throw domain_error("Rat: division by zero");
        }
        Int num = a.num_ * Int(b.den_);
        Int den = Int(a.den_) * b.num_;
        if (den.sign() < 0) {
            num = -num;
            den = -den;
        }
        return Rat(num, den.to_nat());
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num_ * Int(b.den_) <=> b.num_ * Int(a.den_);
    }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const {
        return is_integral() ? num_.str() : num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    struct already_reduced {};
    Rat(Int num, Nat den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.is_zero()) {
            throw domain_error("Rat: zero denominator");
        }
        if (num_.is_zero()) {
            den_ = Nat(1);
            return;
        }
        cpp_int g = boost::multiprecision::gcd(cpp_int(boost::multiprecision::abs(num_.value())),
                                               den_.value());
        num_ = Int(cpp_int(num_.value() / g));
        den_ = Nat(cpp_int(den_.value() / g));
    }

    Int num_;
    Nat den_;
};

}  // namespace supercatalan
