#include "minterp/rational.hpp"

#include <cctype>
#include <ostream>

#include "minterp/errors.hpp"

namespace minterp {

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    // Shape check up front: mpq_set_str accepts some forms we don't want
    // (whitespace, hex) and does not canonicalize on its own.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t after_num = digits(i);
    if (after_num == i)
        throw ParseError(i, "expected a rational literal");
    i = after_num;
    if (i < text.size() && text[i] == '/') {
        std::size_t after_den = digits(i + 1);
        if (after_den == i + 1)
            throw ParseError(i + 1, "expected a denominator");
        i = after_den;
    }
    if (i != text.size())
        throw ParseError(i, "trailing characters in rational literal");

    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw ParseError(0, "malformed rational literal '" + text + "'");
    if (v.get_den() == 0)
        throw ParseError(0, "zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::pow(unsigned long exp) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), exp);
    return Rational(r);  // canonical since the base is canonical
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace minterp
