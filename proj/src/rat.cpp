#include "rankcrit/rat.hpp"

#include <mutex>
#include <ostream>
#include <vector>

#include "rankcrit/errors.hpp"

namespace rankcrit {

mpz_class Rat::make_mpz(long long n) {
    // mpz_class has no long long constructor on LP64 this matters only for
    // completeness; go through the decimal string to stay portable.
    if (n >= -2147483648LL && n <= 2147483647LL) return mpz_class((long)n);
    return mpz_class(std::to_string(n));
}

Rat::Rat(long long num, long long den) {
    if (den == 0) throw Error("Rat: zero denominator");
    v_ = mpq_class(make_mpz(num), make_mpz(den));
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw ParseError("Rat: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("Rat: malformed rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(std::move(q));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

mpz_class Rat::height() const {
    mpz_class n = abs(v_.get_num());
    const mpz_class& d = v_.get_den();
    return n > d ? n : mpz_class(d);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat inverse(const Rat& r) {
    if (r.is_zero()) throw Error("Rat: inverse of zero");
    return Rat(mpq_class(1) / r.raw());
}

mpz_class factorial(unsigned n) {
    static std::vector<mpz_class> cache{mpz_class(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) cache.push_back(cache.back() * (unsigned long)cache.size());
    return cache[n];
}

mpz_class binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

}  // namespace rankcrit
