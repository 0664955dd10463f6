#include "rankcrit/upoly.hpp"

#include "rankcrit/errors.hpp"

namespace rankcrit {

UPoly::UPoly(Rat constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::variable() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const Rat& c, const UPoly& p) {
    if (c.is_zero()) return UPoly();
    UPoly r = p;
    for (Rat& x : r.c_) x = c * x;
    return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw Error("UPoly: division by zero polynomial");
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo;
    int db = b.degree();
    Rat lead_inv = inverse(b.lead());
    if ((int)rem.size() - 1 >= db) quo.resize(rem.size() - db);
    for (int i = (int)rem.size() - 1; i >= db; --i) {
        if (rem[i].is_zero()) continue;
        Rat f = rem[i] * lead_inv;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return inverse(lead()) * *this;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || !c_[i].is_one()) out += c_[i].str();
        if (i > 0) {
            if (!c_[i].is_one()) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyFrac::PolyFrac(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("PolyFrac: zero denominator");
    reduce();
}

void PolyFrac::reduce() {
    if (num_.is_zero()) {
        den_ = UPoly(Rat(1));
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UPoly q, r;
        UPoly::divmod(num_, g, q, r);
        num_ = q;
        UPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rat lead_inv = inverse(den_.lead());
    num_ = lead_inv * num_;
    den_ = lead_inv * den_;
}

PolyFrac PolyFrac::operator-() const {
    PolyFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
    return PolyFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) { return a + (-b); }

PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
    return PolyFrac(a.num_ * b.num_, a.den_ * b.den_);
}

PolyFrac operator/(const PolyFrac& a, const PolyFrac& b) {
    if (b.is_zero()) throw Error("PolyFrac: division by zero");
    return PolyFrac(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const PolyFrac& a, const PolyFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace rankcrit
