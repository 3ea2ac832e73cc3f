#include "morikit/rational.hpp"

#include "morikit/errors.hpp"

#include <cctype>

namespace morikit {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& a, unsigned long k) {
    if (a < Integer(static_cast<long>(k))) return 0;
    Integer result = 1;
    for (unsigned long i = 0; i < k; ++i) {
        result *= a - static_cast<long>(i);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i + 1);
    }
    return result;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> ValidationError {
        return ValidationError("malformed rational: '" + text + "'");
    };
    if (text.empty()) throw bad();
    std::size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size()) throw bad();
    std::size_t slash = std::string::npos;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/') {
            if (slash != std::string::npos || j == i || j + 1 == text.size()) throw bad();
            slash = j;
        } else if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw bad();
        }
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) throw bad();
    if (slash != std::string::npos && Integer(text.substr(slash + 1)) == 0)
        throw ValidationError("zero denominator in rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_string(const Integer& value) {
    return value.get_str();
}

} // namespace morikit
