#include "cfock/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cfock {

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Int coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::q_power(long exp) { return monomial(Int(1), exp); }

Int LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (this == &rhs) {  // p + p = 2p; don't walk the map being edited
        for (auto& [e, c] : terms_) c *= 2;
        return *this;
    }
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (this == &rhs) {  // p - p = 0; don't walk the map being edited
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    std::map<long, Int> prod;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) prod[e1 + e2] += c1 * c2;
    for (auto it = prod.begin(); it != prod.end();)
        it = (it->second == 0) ? prod.erase(it) : std::next(it);
    terms_ = std::move(prod);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

Int LaurentPoly::at_one() const {
    Int sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly quantum_integer(long m, int s) {
    if (s < 1) throw std::domain_error("quantum_integer: s must be positive");
    LaurentPoly out;
    const long a = m < 0 ? -m : m;
    for (long t = 0; t < a; ++t)
        out += LaurentPoly::monomial(Int(m < 0 ? -1 : 1), static_cast<long>(s) * (a - 1 - 2 * t));
    return out;
}

LaurentPoly quantum_factorial(int m, int s) {
    if (m < 0) throw std::domain_error("quantum_factorial: m must be nonnegative");
    LaurentPoly out(Int(1));
    for (int t = 2; t <= m; ++t) out *= quantum_integer(t, s);
    return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (a.is_zero()) return LaurentPoly();
    // Long division from the top.  When b | a each leading-coefficient
    // division is forced to be exact and the quotient's lowest exponent is
    // min(a) - min(b), so any failure below certifies non-divisibility.
    const long lo_shift = a.min_exp() - b.min_exp();
    const long b_top = b.max_exp();
    const Int b_lead = b.terms().rbegin()->second;
    std::map<long, Int> rem(a.terms().begin(), a.terms().end());
    LaurentPoly quot;
    while (!rem.empty()) {
        const auto top = rem.rbegin();
        const long shift = top->first - b_top;
        if (shift < lo_shift) return std::nullopt;
        if (top->second % b_lead != 0) return std::nullopt;
        const Int qc = top->second / b_lead;
        for (const auto& [e, c] : b.terms()) {
            auto [it, fresh] = rem.try_emplace(e + shift, -qc * c);
            if (!fresh) {
                it->second -= qc * c;
                if (it->second == 0) rem.erase(it);
            }
        }
        quot += LaurentPoly::monomial(qc, shift);
    }
    return quot;
}

LaurentPoly quantum_binomial(int m, int r, int s) {
    if (m < 0 || r < 0 || r > m) throw std::domain_error("quantum_binomial: need 0 <= r <= m");
    const LaurentPoly den = quantum_factorial(r, s) * quantum_factorial(m - r, s);
    auto quot = divide_exact(quantum_factorial(m, s), den);
    if (!quot) throw std::logic_error("quantum_binomial: factorial quotient is not exact");
    return *quot;
}

}  // namespace cfock
