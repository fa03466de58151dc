#include "seqrecover/rational.hpp"

#include <limits>

#include "seqrecover/errors.hpp"

namespace seqrecover {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw DomainError("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator: '" + text + "'");
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw DomainError("rational " + str() + " is not an integer");
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw DomainError("integer " + str() + " out of range");
    return static_cast<std::int64_t>(n.get_si());
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace seqrecover
