#include "qheun/rational.hpp"

#include "qheun/errors.hpp"

#include <cctype>
#include <ostream>

namespace qheun {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

static bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    bool neg = false;
    std::string body = s;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    Rational r;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos) {
        std::string a = body.substr(0, slash), b = body.substr(slash + 1);
        if (!all_digits(a) || !all_digits(b))
            throw InputError("malformed rational '" + text + "'");
        mpz_class den(b);
        if (den == 0)
            throw InputError("zero denominator in '" + text + "'");
        r = Rational(mpq_class(mpz_class(a), den));
    } else if (dot != std::string::npos) {
        std::string a = body.substr(0, dot), b = body.substr(dot + 1);
        if ((a.empty() && b.empty()) || (!a.empty() && !all_digits(a)) || (!b.empty() && !all_digits(b)))
            throw InputError("malformed decimal '" + text + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
        mpz_class whole = a.empty() ? mpz_class(0) : mpz_class(a);
        mpz_class frac = b.empty() ? mpz_class(0) : mpz_class(b);
        r = Rational(mpq_class(whole * scale + frac, scale));
    } else {
        if (!all_digits(body))
            throw InputError("malformed rational '" + text + "'");
        r = Rational(mpz_class(body));
    }
    return neg ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool rational_sqrt(const Rational& r, Rational& out) {
    if (r.sign() < 0)
        return false;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(mpq_class(sn, sd));
    return true;
}

static bool int_cbrt(const mpz_class& v, mpz_class& out) {
    mpz_class a = ::abs(v);
    mpz_class root;
    int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), 3);
    if (!exact)
        return false;
    out = v < 0 ? mpz_class(-root) : root;
    return true;
}

bool rational_cbrt(const Rational& r, Rational& out) {
    mpz_class n, d;
    if (!int_cbrt(r.num(), n) || !int_cbrt(r.den(), d))
        return false;
    out = Rational(mpq_class(n, d));
    return true;
}

}  // namespace qheun
