#include "cuspidal/rat.hpp"

#include <cctype>
#include <ostream>

namespace cuspidal {

namespace {

void check_denominator(const mpz_class& d) {
    if (sgn(d) == 0) throw DomainError("rational with zero denominator");
}

}  // namespace

Rat::Rat(long n, long d) : v_(n, d) {
    check_denominator(v_.get_den());
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    check_denominator(d);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(std::string_view s) {
    std::size_t pos = 0;
    auto read_integer = [&]() -> mpz_class {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits_from = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits_from) throw SyntaxError("expected integer", start);
        return mpz_class(std::string(s.substr(start, pos - start)));
    };

    mpz_class num = read_integer();
    mpz_class den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_integer();
        if (sgn(den) == 0) throw SyntaxError("zero denominator", pos);
    }
    if (pos != s.size()) throw SyntaxError("trailing characters in rational", pos);
    return Rat(num, den);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat pow(const Rat& base, unsigned exponent) {
    Rat result(1);
    Rat b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

Rat inverse(const Rat& r) {
    if (r.is_zero()) throw DomainError("inverse of zero");
    return Rat(r.den(), r.num());
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

mpz_class factorial(unsigned n) {
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

}  // namespace cuspidal
