#include "hqg/rational.hpp"

#include "hqg/errors.hpp"

#include <cctype>
#include <ostream>

namespace hqg {

Rational::Rational(long n, long d) {
    if (d == 0) throw ParseError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw ParseError("zero rational has no inverse");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

namespace {

bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    if (!valid_integer(num)) throw ParseError("invalid rational literal: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1); // GMP string parsing rejects a leading '+'

    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(num));
    } else {
        const std::string den = text.substr(slash + 1);
        if (!valid_integer(den)) throw ParseError("invalid rational literal: '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
        q = mpq_class(mpz_class(num), d);
        q.canonicalize();
    }
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace hqg
