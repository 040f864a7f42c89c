#pragma once

#include "cfock/cartan.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cfock {

// Colour of the plane diagonal c at rank n: reduce c mod 2n into [0, 2n) and
// fold, min(r, 2n - r), giving the palindromic pattern 0 1 .. n-1 n n-1 .. 1
// repeating in both directions.
int colour_of(long c, int n);

// Pluggable colouring (diagonal, rank) -> colour.  Everything geometric is
// parametrised by it so relation tests can run a deliberately wrong colouring
// as a negative control; colour_of is the real one.
using ColourFn = int (*)(long, int);

// A charged Young diagram at rank n: a weakly increasing column boundary
// y_0 <= y_1 <= ... that stabilises at the charge k, stored as the weakly
// decreasing sequence of positive column depths d_l = k - y_l.  Column l
// occupies heights (y_l, k]; the empty diagram is the vacuum of charge k.
class Diagram {
public:
    // Validates; throws std::invalid_argument when depths is not weakly
    // decreasing and positive, or n < 2, or charge is outside 0..n.
    Diagram(int n, int charge, std::vector<int> depths = {});

    int n() const { return n_; }
    int charge() const { return charge_; }
    const std::vector<int>& depths() const { return depths_; }
    int depth(std::size_t column) const;     // 0 past the stored columns
    long boundary_y(std::size_t column) const { return charge_ - depth(column); }
    long box_count() const;

    bool operator==(const Diagram&) const = default;

private:
    int n_;
    int charge_;
    std::vector<int> depths_;
};

// Canonical total order: (n, charge), then box count, then lexicographically
// decreasing depths, so [2,1] precedes [1,1,1].
bool canonical_less(const Diagram& a, const Diagram& b);

struct CanonicalLess {
    bool operator()(const Diagram& a, const Diagram& b) const { return canonical_less(a, b); }
};

// "k;d1,d2,..." — the node label used by graph exports.
std::string node_label(const Diagram& y);

enum class CornerKind { Concave, Convex };

// Boundary corner at site (column, y).  Convex corners sit at the bottom
// right of a removable box, concave corners at the top edge of an addable
// box position; either way the corner colour is the colour of that box.
struct Corner {
    long column;
    long y;
    CornerKind kind;
    int colour;
    long diagonal;  // column + y

    bool operator==(const Corner&) const = default;
};

// All corners of y, sorted by strictly decreasing diagonal: one concave
// corner at (0, y_0), and per boundary step y_l < y_{l+1} one convex corner
// at (l+1, y_l) and one concave corner at (l+1, y_{l+1}).
std::vector<Corner> corners(const Diagram& y, ColourFn colour = colour_of);

// Column mutation primitives; throw std::invalid_argument when the result
// would not be a valid diagram (monotonicity violation or empty column).
Diagram add_box(const Diagram& y, std::size_t column);
Diagram remove_box(const Diagram& y, std::size_t column);

// The i-signature: the word over {'0','1'} read off the i-coloured corners
// in decreasing diagonal order, '0' for concave and '1' for convex, together
// with those corners.
struct Signature {
    std::string word;
    std::vector<Corner> sites;
};

Signature i_signature(const Diagram& y, int i);

// Bracket reduction: with '0' opening and '1' closing, repeatedly cancel
// pairs r < s carrying ('0','1') with no survivor strictly between, and
// return the surviving 1-based indices in increasing order.  The survivors
// always read 1^a 0^b.
std::vector<int> reduce_signature(std::string_view word);

// Number of i-coloured boxes for each i in 0..n.  The box in column l whose
// upper edge sits at height y has colour colour(l + y).
std::vector<long> colour_counts(const Diagram& y, ColourFn colour = colour_of);

// fundamental_weight(charge) minus colour_counts[i] * simple_root(i) summed
// over i.
WeightVector weight_of(const Diagram& y);

// Rows of colour digits, top row first, one line per row of boxes.
std::string render_text(const Diagram& y);

// Every diagram of (n, charge) with at most max_boxes boxes, in canonical
// order.
std::vector<Diagram> enumerate_diagrams(int n, int charge, int max_boxes);

}  // namespace cfock
