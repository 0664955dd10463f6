#include "rankcrit/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "rankcrit/errors.hpp"

namespace rankcrit {

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(std::vector<int>((size_t)nvars, 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    MPoly p(nvars);
    std::vector<int> e((size_t)nvars, 0);
    e[index] = 1;
    p.add_term(e, Rat(1));
    return p;
}

MPoly MPoly::monomial(std::vector<int> exps, const Rat& c) {
    MPoly p((int)exps.size());
    p.add_term(exps, c);
    return p;
}

Rat MPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if ((int)exps.size() != nvars_) throw DimensionMismatch("MPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nvars_);
    std::vector<int> e((size_t)a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly operator*(const Rat& c, const MPoly& p) {
    MPoly r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : p.terms_) r.terms_.emplace(e, c * x);
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MPoly MPoly::pow(int k) const {
    MPoly r = constant(nvars_, Rat(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> e2 = e;
        e2[var] -= 1;
        r.add_term(e2, Rat((long long)e[var]) * c);
    }
    return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        e2[var] = 0;
        MPoly term = monomial(e2, c);
        if (e[var] > 0) term = term * value.pow(e[var]);
        r = r + term;
    }
    return r;
}

MPoly MPoly::permute_vars(const std::vector<int>& perm) const {
    MPoly r(nvars_);
    std::vector<int> e2((size_t)nvars_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e2[perm[i]] = e[i];
        r.add_term(e2, c);
    }
    return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += c.str();
        else if (c.is_one())
            out += mono;
        else
            out += c.str() + "*" + mono;
    }
    return out;
}

mpz_class falling_factorial(long long e, int p) {
    if (p < 0) throw Error("falling_factorial: negative length");
    mpz_class r = 1;
    for (int i = 0; i < p; ++i) r *= mpz_class(std::to_string(e - i));
    return r;
}

MPoly p_de(int d, int e) {
    if (d < 0 || e < 0) throw Error("p_de: negative parameters");
    MPoly p(3);
    for (int a = 0; a <= d; ++a) {
        for (int b = 0; a + b <= d; ++b) {
            int c = d - a - b;
            mpz_class coef = factorial((unsigned)d) / (factorial((unsigned)a) * factorial((unsigned)b) * factorial((unsigned)c));
            coef *= binomial(e, a) * binomial(e, b) * binomial(e, c);
            if (coef == 0) continue;
            p.add_term({a, b, c}, Rat(coef));
        }
    }
    return p;
}

bool divisible_by_sigma1(const MPoly& p) {
    if (p.nvars() != 3) throw DimensionMismatch("divisible_by_sigma1: expects 3 variables");
    MPoly minus_ab = -(MPoly::variable(3, 0) + MPoly::variable(3, 1));
    return p.substitute(2, minus_ab).is_zero();
}

Rat q_d_sum(int d, int e) {
    if (d < 1) throw Error("q_d_sum: d >= 1 required");
    Rat sum;
    for (int a = 0; a <= d; ++a) {
        mpz_class c = binomial(d, a) * binomial(e, a) * binomial(e, (long long)d - a);
        if (a % 2 == 1) c = -c;
        sum += Rat(c) * Rat((long long)a, (long long)a + 1);
    }
    return Rat((long long)(e + 1) * (d + 1)) * sum;
}

Rat q_d_closed(int d, int e) {
    if (d < 1) throw Error("q_d_closed: d >= 1 required");
    int k = (d + 1) / 2;  // d = 2k-1 or d = 2k
    mpz_class num = falling_factorial((long long)e + k, 2 * k);
    mpz_class den = mpz_class((long)k) * factorial((unsigned)(k - 1)) * factorial((unsigned)(k - 1));
    Rat q = Rat(num) / Rat(den);
    if (k % 2 == 1) q = -q;
    if (d == 2 * k) q *= Rat((long long)2 * e + 1);
    return q;
}

MPoly brute_operator_coefficient(int d, int e, int m) {
    if (m < 3) throw Error("brute_operator_coefficient: m >= 3 required");
    if (d < 0 || e < 0) throw Error("brute_operator_coefficient: negative parameters");
    // variables: alpha, beta, gamma, x_1..x_m
    const int nv = 3 + m;
    std::vector<int> start((size_t)nv, 0);
    for (int i = 0; i < m; ++i) start[3 + i] = e;
    MPoly p = MPoly::monomial(start, Rat(1));
    // apply (alpha d/dx1 + beta d/dx2 + gamma d/dx3) d times
    for (int step = 0; step < d; ++step) {
        MPoly next(nv);
        for (int v = 0; v < 3; ++v)
            next = next + MPoly::variable(nv, v) * p.derivative(3 + v);
        p = next;
    }
    // multiply by (x1+x2+x3)^d
    MPoly s(nv);
    for (int v = 0; v < 3; ++v) s = s + MPoly::variable(nv, 3 + v);
    p = p * s.pow(d);
    // coefficient of x_1^e ... x_m^e, as a polynomial in (alpha, beta, gamma)
    MPoly out(3);
    for (const auto& [exps, c] : p.terms()) {
        bool match = true;
        for (int i = 0; i < m; ++i)
            if (exps[3 + i] != e) { match = false; break; }
        if (!match) continue;
        out.add_term({exps[0], exps[1], exps[2]}, c);
    }
    return out;
}

}  // namespace rankcrit
