#pragma once

#include <map>
#include <string>
#include <vector>

#include "rankcrit/rat.hpp"

namespace rankcrit {

/// Sparse multivariate polynomial over Q: exponent vector -> nonzero
/// coefficient, terms ordered lexicographically by exponents.
class MPoly {
public:
    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int index);
    static MPoly monomial(std::vector<int> exps, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    Rat coeff(const std::vector<int>& exps) const;
    int total_degree() const;

    void add_term(const std::vector<int>& exps, const Rat& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rat& c, const MPoly& p);
    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int k) const;
    MPoly derivative(int var) const;
    /// Substitutes `value` for variable `var` (value in the same variable set).
    MPoly substitute(int var, const MPoly& value) const;
    MPoly permute_vars(const std::vector<int>& perm) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

/// (e)_p = e(e-1)...(e-p+1); (e)_0 = 1.
mpz_class falling_factorial(long long e, int p);

/// P_{d,e}(alpha,beta,gamma) = sum_{a+b+c=d} d!/(a!b!c!) C(e,a)C(e,b)C(e,c) a^a b^b c^c,
/// a polynomial in three variables (alpha, beta, gamma).
MPoly p_de(int d, int e);

/// True iff P is divisible by alpha+beta+gamma, tested by the exact
/// substitution gamma = -alpha-beta.
bool divisible_by_sigma1(const MPoly& p);

/// Q_d = (e+1)(d+1) sum_{a=0}^d C(d,a) C(e,a) C(e,d-a) (-1)^a a/(a+1), term by term.
Rat q_d_sum(int d, int e);

/// Closed form: (-1)^k (e+k)(e+k-1)...(e-k+1) / (k ((k-1)!)^2) for d = 2k-1,
/// with an extra factor (2e+1) for d = 2k.
Rat q_d_closed(int d, int e);

/// Coefficient of x_1^e ... x_m^e in
/// (x_1+x_2+x_3)^d (alpha d/dx_1 + beta d/dx_2 + gamma d/dx_3)^d x_1^e ... x_m^e,
/// computed by applying the operator literally; result in (alpha, beta, gamma).
MPoly brute_operator_coefficient(int d, int e, int m);

}  // namespace rankcrit
