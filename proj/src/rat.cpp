#include "plc/rat.hpp"

#include <ostream>

#include "plc/error.hpp"

namespace plc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::CarrierViolation: return "CarrierViolation";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotInIsotropy: return "NotInIsotropy";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotExactFactorization: return "NotExactFactorization";
    case ErrorKind::InjectionNotHom: return "InjectionNotHom";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::BadKind: return "BadKind";
    }
    return "Unknown";
}

Rat::Rat(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_text(num_text))
        throw Error(ErrorKind::ParseError, "invalid rational '" + std::string(text) + "'");
    mpz_class num = parse_integer(num_text);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_text(den_text) || den_text.front() == '-' || den_text.front() == '+')
            throw Error(ErrorKind::ParseError, "invalid rational '" + std::string(text) + "'");
        den = parse_integer(den_text);
        if (den == 0)
            throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rat(mpq_class(num, den));
}

std::string Rat::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rat(mpq_class(q));
}

Rat Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rat(mpq_class(q));
}

std::int64_t Rat::to_int64() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error(ErrorKind::OutOfRange, str() + " is not a representable integer");
    return v_.get_num().get_si();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.sign() == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat round_half_even(const Rat& r) {
    const Rat lo = r.floor();
    const Rat diff = r - lo;
    const Rat half(1, 2);
    if (diff < half) return lo;
    if (diff > half) return lo + 1;
    const bool lo_even = mpz_even_p(lo.gmp().get_num_mpz_t()) != 0;
    return lo_even ? lo : lo + 1;
}

} // namespace plc
