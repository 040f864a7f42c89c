#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

namespace cfock {

// expression templates off: Int behaves as a plain value type
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Laurent polynomial in one variable q with arbitrary-precision integer
// coefficients.  Invariant: no zero coefficient is ever stored, so the
// representation is canonical and operator== is structural equality.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    explicit LaurentPoly(Int constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(Int coeff, long exp);
    static LaurentPoly q_power(long exp);  // q^exp

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Int>& terms() const { return terms_; }
    Int coeff(long exp) const;
    long min_exp() const;  // lowest exponent; requires a nonzero value
    long max_exp() const;  // highest exponent; requires a nonzero value

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs *= rhs; }
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly bar() const;  // the ring involution q -> q^{-1}
    Int at_one() const;       // specialisation at q = 1
    std::string str() const;  // e.g. "q^2 + 1 + q^-2"

private:
    std::map<long, Int> terms_;  // exponent -> nonzero coefficient
};

// [m] at base q^s, i.e. (q^{sm} - q^{-sm}) / (q^s - q^{-s}): the sum of
// q^{s(m-1-2t)} over t = 0..m-1, negated for m < 0.  Requires s >= 1.
LaurentPoly quantum_integer(long m, int s);

// [m]! at base q^s.  Requires m >= 0, s >= 1.
LaurentPoly quantum_factorial(int m, int s);

// Gaussian binomial [m over r] at base q^s, computed as the exact quotient
// [m]! / ([r]! [m-r]!).  Throws std::domain_error unless 0 <= r <= m; a
// non-exact division is a bug and throws std::logic_error.
LaurentPoly quantum_binomial(int m, int r, int s);

// a / b when b divides a in the Laurent ring, std::nullopt otherwise.
// Throws std::domain_error when b is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace cfock
