#pragma once

#include <string>
#include <vector>

#include "rankcrit/rat.hpp"

namespace rankcrit {

/// Dense univariate polynomial over Q. Zero is the empty coefficient list.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rat constant);
    explicit UPoly(std::vector<Rat> coeffs);  // coeffs[i] on s^i; trimmed

    static UPoly variable();  // s

    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rat& c, const UPoly& p);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Quotient and remainder; the divisor must be nonzero.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

    /// Monic gcd over Q.
    static UPoly gcd(UPoly a, UPoly b);

    UPoly monic() const;

    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Element of the fraction field Q(s), kept reduced with monic denominator.
class PolyFrac {
public:
    PolyFrac() : num_(), den_(Rat(1)) {}
    PolyFrac(UPoly num, UPoly den);
    explicit PolyFrac(UPoly num) : num_(std::move(num)), den_(Rat(1)) {}

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    PolyFrac operator-() const;
    friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b);
    friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b);
    friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b);
    friend PolyFrac operator/(const PolyFrac& a, const PolyFrac& b);
    friend bool operator==(const PolyFrac& a, const PolyFrac& b);

private:
    void reduce();
    UPoly num_, den_;
};

}  // namespace rankcrit
