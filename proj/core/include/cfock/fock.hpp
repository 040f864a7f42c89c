#pragma once

#include "cfock/diagram.hpp"
#include "cfock/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace cfock {

// Finite linear combination of diagrams of one (n, charge) with Laurent
// polynomial coefficients.  Invariants: no stored coefficient is zero; all
// member diagrams share (n, charge); terms iterate in canonical order.
class Combination {
public:
    Combination(int n, int charge) : n_(n), charge_(charge) {}
    explicit Combination(const Diagram& y, LaurentPoly c = LaurentPoly(1L));

    int n() const { return n_; }
    int charge() const { return charge_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Diagram, LaurentPoly, CanonicalLess>& terms() const { return terms_; }
    LaurentPoly coeff(const Diagram& y) const;

    // Accumulates c onto y's coefficient; throws on an (n, charge) mismatch.
    void add_term(const Diagram& y, const LaurentPoly& c);

    Combination& operator+=(const Combination& rhs);
    Combination& operator-=(const Combination& rhs);
    Combination& operator*=(const LaurentPoly& c);
    friend Combination operator+(Combination lhs, const Combination& rhs) { return lhs += rhs; }
    friend Combination operator-(Combination lhs, const Combination& rhs) { return lhs -= rhs; }
    friend Combination operator*(Combination lhs, const LaurentPoly& c) { return lhs *= c; }
    bool operator==(const Combination&) const = default;

    std::string str() const;  // e.g. "(q + q^-1)*[0;1]", "0"

private:
    int n_;
    int charge_;
    std::map<Diagram, LaurentPoly, CanonicalLess> terms_;
};

// Site operators.  E at a convex corner site (l, y) removes that box
// (remove_box at column l-1); F at a concave corner site (l, y) adds one
// (add_box at column l).  Throw std::invalid_argument when the diagram has
// no corner of the right kind at the site.
Diagram e_site(const Diagram& y, long column, long row_y);
Diagram f_site(const Diagram& y, long column, long row_y);

// Exponent statistics at a site, over the i-coloured corners of y:
// a counts (concave - convex) strictly above it (diagonal > column + row_y),
// b counts (convex - concave) strictly below.
int a_exponent(int i, long column, long row_y, const Diagram& y, ColourFn colour = colour_of);
int b_exponent(int i, long column, long row_y, const Diagram& y, ColourFn colour = colour_of);

// The two assembly orders of the T-factor products around a site operator.
// Upper gives E_i = sum q_i^a E_site and F_i = sum q_i^b F_site; lower swaps
// which side the products are taken on and gives q_i^b for E and q_i^a
// for F.
enum class Convention { Upper, Lower };

// The level-one Fock representation.  All operators are exact and linear;
// q_i = q^{s_i}.  The colouring is pluggable purely so that relation tests
// can run a broken colouring as a negative control.
struct FockEngine {
    Convention convention = Convention::Upper;
    ColourFn colour = colour_of;

    Combination act_e(int i, const Combination& v) const;
    Combination act_f(int i, const Combination& v) const;
    Combination act_t(int i, int sign, const Combination& v) const;  // T_i^{+1} or T_i^{-1}
    Combination act_td(const Combination& v) const;                  // q^{-(number of 0-boxes)}
    Combination act_qh(const Coweight& h, const Combination& v) const;

    // act_e(i, act_f(j, v)) - act_f(j, act_e(i, v)); equals zero for i != j
    // and quantum_integer(<h_i, wt>, s_i) times each diagram for i = j.
    Combination commutator_ef(int i, int j, const Combination& v) const;

    // The degree-(1 - a_ij) alternating sum
    //   sum_t (-1)^t [1-a_ij over t]_{q_i} X_i^{1-a_ij-t} X_j X_i^t (v)
    // for X = E or F; identically zero.  Throws for i = j.
    enum class Gen { E, F };
    Combination serre_sum(Gen g, int i, int j, const Combination& v) const;

    // Weight used by act_t/act_td/act_qh: fundamental_weight(charge) shifted
    // by the engine-coloured box counts.  Equals weight_of under colour_of.
    WeightVector weight(const Diagram& y) const;
};

struct RelationFailure {
    Diagram diagram;
    std::string relation;  // e.g. "serre_E(i=0,j=1)"
    std::string detail;
};

struct Report {
    long long checked = 0;
    std::vector<RelationFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Checks, for every diagram of (n, charge) with at most max_boxes boxes, the
// weight-conjugation identities of q^h against E_i/F_i (with T_i^± and T_d
// cross-checked against q^h), every commutator [E_i, F_j], and both Serre
// sums for every pair i != j.  Failures are data, not errors; the report is
// assembled in canonical diagram order.
Report verify_relations(int n, int charge, int max_boxes, Convention convention,
                        ColourFn colour = colour_of);

}  // namespace cfock
