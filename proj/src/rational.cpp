#include "mms/rational.hpp"

#include "mms/errors.hpp"

#include <cctype>

namespace mms {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ValidationError("not an exact rational: \"" + std::string(text) + "\"");
    }
    BigInt d(std::string(den), 10);
    if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
    Rational q(BigInt(std::string(num), 10), d);
    q.canonicalize();
    if (text.front() == '-') q = -q;
    return q;
}

std::string to_fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt out;
    if (k > n) return 0;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt factorial(std::uint64_t n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

std::uint64_t to_u64(const BigInt& value) {
    if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
        throw CapacityError("integer " + value.get_str() + " does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, value.get_mpz_t());
    return out;
}

} // namespace mms
