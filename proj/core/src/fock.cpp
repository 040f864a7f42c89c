#include "cfock/fock.hpp"

#include <sstream>
#include <stdexcept>

namespace cfock {

Combination::Combination(const Diagram& y, LaurentPoly c) : n_(y.n()), charge_(y.charge()) {
    add_term(y, c);
}

LaurentPoly Combination::coeff(const Diagram& y) const {
    auto it = terms_.find(y);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void Combination::add_term(const Diagram& y, const LaurentPoly& c) {
    if (y.n() != n_ || y.charge() != charge_)
        throw std::invalid_argument("combination: mixed (n, charge)");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(y, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Combination& Combination::operator+=(const Combination& rhs) {
    if (this == &rhs) return *this *= LaurentPoly(Int(2));  // v + v = 2v
    for (const auto& [y, c] : rhs.terms_) add_term(y, c);
    return *this;
}

Combination& Combination::operator-=(const Combination& rhs) {
    if (this == &rhs) {  // v - v = 0; don't walk the map being edited
        terms_.clear();
        return *this;
    }
    for (const auto& [y, c] : rhs.terms_) add_term(y, -c);
    return *this;
}

Combination& Combination::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [y, v] : terms_) v *= c;
    return *this;
}

std::string Combination::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [y, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*[" << node_label(y) << "]";
    }
    return out.str();
}

Diagram e_site(const Diagram& y, long column, long row_y) {
    for (const Corner& c : corners(y))
        if (c.kind == CornerKind::Convex && c.column == column && c.y == row_y)
            return remove_box(y, static_cast<std::size_t>(column) - 1);
    throw std::invalid_argument("e_site: no convex corner at the given site");
}

Diagram f_site(const Diagram& y, long column, long row_y) {
    for (const Corner& c : corners(y))
        if (c.kind == CornerKind::Concave && c.column == column && c.y == row_y)
            return add_box(y, static_cast<std::size_t>(column));
    throw std::invalid_argument("f_site: no concave corner at the given site");
}

namespace {

int corner_balance(int i, long diagonal, bool above, const Diagram& y, ColourFn colour) {
    // (concave - convex) count over the i-coloured corners strictly on one
    // side of the diagonal
    int balance = 0;
    for (const Corner& c : corners(y, colour)) {
        if (c.colour != i) continue;
        if (above ? c.diagonal <= diagonal : c.diagonal >= diagonal) continue;
        balance += c.kind == CornerKind::Concave ? 1 : -1;
    }
    return balance;
}

}  // namespace

int a_exponent(int i, long column, long row_y, const Diagram& y, ColourFn colour) {
    return corner_balance(i, column + row_y, true, y, colour);
}

int b_exponent(int i, long column, long row_y, const Diagram& y, ColourFn colour) {
    return -corner_balance(i, column + row_y, false, y, colour);
}

Combination FockEngine::act_e(int i, const Combination& v) const {
    Combination out(v.n(), v.charge());
    for (const auto& [y, c] : v.terms()) {
        for (const Corner& corner : corners(y, colour)) {
            if (corner.colour != i || corner.kind != CornerKind::Convex) continue;
            const int exp = convention == Convention::Upper
                                ? a_exponent(i, corner.column, corner.y, y, colour)
                                : b_exponent(i, corner.column, corner.y, y, colour);
            out.add_term(remove_box(y, static_cast<std::size_t>(corner.column) - 1),
                         c * LaurentPoly::q_power(static_cast<long>(s_value(i, v.n())) * exp));
        }
    }
    return out;
}

Combination FockEngine::act_f(int i, const Combination& v) const {
    Combination out(v.n(), v.charge());
    for (const auto& [y, c] : v.terms()) {
        for (const Corner& corner : corners(y, colour)) {
            if (corner.colour != i || corner.kind != CornerKind::Concave) continue;
            const int exp = convention == Convention::Upper
                                ? b_exponent(i, corner.column, corner.y, y, colour)
                                : a_exponent(i, corner.column, corner.y, y, colour);
            out.add_term(add_box(y, static_cast<std::size_t>(corner.column)),
                         c * LaurentPoly::q_power(static_cast<long>(s_value(i, v.n())) * exp));
        }
    }
    return out;
}

Combination FockEngine::act_t(int i, int sign, const Combination& v) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("act_t: sign must be +1 or -1");
    Combination out(v.n(), v.charge());
    for (const auto& [y, c] : v.terms()) {
        int balance = 0;  // concave minus convex i-corners
        for (const Corner& corner : corners(y, colour))
            if (corner.colour == i) balance += corner.kind == CornerKind::Concave ? 1 : -1;
        out.add_term(y, c * LaurentPoly::q_power(
                            static_cast<long>(sign) * s_value(i, v.n()) * balance));
    }
    return out;
}

Combination FockEngine::act_td(const Combination& v) const {
    Combination out(v.n(), v.charge());
    for (const auto& [y, c] : v.terms())
        out.add_term(y, c * LaurentPoly::q_power(-colour_counts(y, colour)[0]));
    return out;
}

WeightVector FockEngine::weight(const Diagram& y) const {
    WeightVector w = fundamental_weight(y.charge(), y.n());
    const auto counts = colour_counts(y, colour);
    for (int i = 0; i <= y.n(); ++i) w -= counts[i] * simple_root(i, y.n());
    return w;
}

Combination FockEngine::act_qh(const Coweight& h, const Combination& v) const {
    Combination out(v.n(), v.charge());
    for (const auto& [y, c] : v.terms())
        out.add_term(y, c * LaurentPoly::q_power(h.pair(weight(y))));
    return out;
}

Combination FockEngine::commutator_ef(int i, int j, const Combination& v) const {
    return act_e(i, act_f(j, v)) - act_f(j, act_e(i, v));
}

Combination FockEngine::serre_sum(Gen g, int i, int j, const Combination& v) const {
    if (i == j) throw std::invalid_argument("serre_sum: requires i != j");
    const int deg = 1 - cartan_entry(i, j, v.n());
    const int s = s_value(i, v.n());
    const auto apply = [&](int col, const Combination& w) {
        return g == Gen::E ? act_e(col, w) : act_f(col, w);
    };
    Combination acc(v.n(), v.charge());
    for (int t = 0; t <= deg; ++t) {
        Combination w = v;
        for (int r = 0; r < t; ++r) w = apply(i, w);
        w = apply(j, w);
        for (int r = 0; r < deg - t; ++r) w = apply(i, w);
        LaurentPoly c = quantum_binomial(deg, t, s);
        if (t % 2 != 0) c = -c;
        acc += w * c;
    }
    return acc;
}

namespace {

struct Checker {
    const FockEngine& engine;
    const Diagram& y;
    Report& report;

    void expect(const Combination& got, const Combination& want, const std::string& relation) {
        ++report.checked;
        if (got == want) return;
        report.failures.push_back(RelationFailure{
            y, relation, "expected " + want.str() + ", got " + got.str()});
    }
};

std::string idx(const std::string& name, int i, int j = -1) {
    std::ostringstream out;
    out << name << "(i=" << i;
    if (j >= 0) out << ",j=" << j;
    out << ")";
    return out.str();
}

}  // namespace

Report verify_relations(int n, int charge, int max_boxes, Convention convention, ColourFn colour) {
    const FockEngine engine{convention, colour};
    Report report;

    // coweight basis h_0..h_n, d, with the root pairings alpha_i(h)
    std::vector<Coweight> basis;
    for (int j = 0; j <= n; ++j) basis.push_back(coweight_h(j, n));
    basis.push_back(coweight_d(n));
    const auto root_pairing = [&](int i, std::size_t b) {
        return b <= static_cast<std::size_t>(n) ? cartan_entry(static_cast<int>(b), i, n)
                                                : (i == 0 ? 1 : 0);
    };

    for (const Diagram& y : enumerate_diagrams(n, charge, max_boxes)) {
        const Combination v(y);
        const WeightVector wy = engine.weight(y);
        Checker check{engine, y, report};

        // q^h X_i q^{-h} = q^{±alpha_i(h)} X_i, evaluated on eigenvectors
        for (int i = 0; i <= n; ++i) {
            const Combination ey = engine.act_e(i, v);
            const Combination fy = engine.act_f(i, v);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const LaurentPoly qh = LaurentPoly::q_power(basis[b].pair(wy));
                check.expect(engine.act_qh(basis[b], ey),
                             ey * (qh * LaurentPoly::q_power(root_pairing(i, b))),
                             idx(b <= static_cast<std::size_t>(n) ? "conjugation_E_h" + std::to_string(b)
                                                                  : "conjugation_E_d", i));
                check.expect(engine.act_qh(basis[b], fy),
                             fy * (qh * LaurentPoly::q_power(-root_pairing(i, b))),
                             idx(b <= static_cast<std::size_t>(n) ? "conjugation_F_h" + std::to_string(b)
                                                                  : "conjugation_F_d", i));
            }
        }

        // T_i^± and T_d are the q^h specialisations h = ±s_i h_i and h = d
        for (int i = 0; i <= n; ++i) {
            Coweight scaled = coweight_h(i, n);
            scaled.h[i] = s_value(i, n);
            check.expect(engine.act_t(i, +1, v), engine.act_qh(scaled, v), idx("t_plus", i));
            scaled.h[i] = -s_value(i, n);
            check.expect(engine.act_t(i, -1, v), engine.act_qh(scaled, v), idx("t_minus", i));
        }
        check.expect(engine.act_td(v), engine.act_qh(coweight_d(n), v), "td");

        // [E_i, F_j] = delta_ij [<h_i, wt>]_{q_i}
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                Combination want(n, charge);
                if (i == j) want = v * quantum_integer(wy.h[i], s_value(i, n));
                check.expect(engine.commutator_ef(i, j, v), want, idx("commutator", i, j));
            }

        // quantum Serre sums vanish for every ordered pair
        const Combination zero(n, charge);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (i == j) continue;
                check.expect(engine.serre_sum(FockEngine::Gen::E, i, j, v), zero, idx("serre_E", i, j));
                check.expect(engine.serre_sum(FockEngine::Gen::F, i, j, v), zero, idx("serre_F", i, j));
            }
    }
    return report;
}

}  // namespace cfock
