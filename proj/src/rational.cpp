#include "flarl/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "flarl/errors.hpp"

namespace flarl {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DivisionByZeroScalar("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw DivisionByZeroScalar("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw FormatError("empty rational literal");
    // mpq_class accepts leading whitespace and stray characters loosely via
    // mpq_set_str; validate the shape ourselves first.
    auto digits = [](const std::string& s, std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
    std::size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(text, start, text.size());
    } else {
        ok = digits(text, start, slash) && digits(text, slash + 1, text.size());
    }
    if (!ok) throw FormatError("malformed rational literal '" + text + "'");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw FormatError("malformed rational literal '" + text + "'");
    if (q.get_den() == 0) throw DivisionByZeroScalar("rational literal with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroScalar("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZeroScalar("reciprocal of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                             : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw DivisionByZeroScalar("zero raised to a negative power");
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), den().get_mpz_t(), k);
    return invert ? Rational(pd, pn) : Rational(pn, pd);
}

bool Rational::is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(den().get_mpz_t()) != 0;
}

Rational Rational::sqrt() const {
    if (!is_perfect_square())
        throw DomainError("rational is not a perfect square");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
    return Rational(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b, mpz_class(1));
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, mpz_class(1));
}

} // namespace flarl
