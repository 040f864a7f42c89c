#include "cfock/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cfock {

int colour_of(long c, int n) {
    const long period = 2L * n;
    long r = c % period;
    if (r < 0) r += period;
    return static_cast<int>(std::min(r, period - r));
}

Diagram::Diagram(int n, int charge, std::vector<int> depths)
    : n_(n), charge_(charge), depths_(std::move(depths)) {
    if (n_ < 2) throw std::invalid_argument("diagram: rank n must be at least 2");
    if (charge_ < 0 || charge_ > n_) throw std::invalid_argument("diagram: charge must lie in 0..n");
    for (std::size_t l = 0; l < depths_.size(); ++l) {
        if (depths_[l] < 1 || (l > 0 && depths_[l] > depths_[l - 1]))
            throw std::invalid_argument("diagram: depths violate y_l <= y_{l+1}");
    }
}

int Diagram::depth(std::size_t column) const {
    return column < depths_.size() ? depths_[column] : 0;
}

long Diagram::box_count() const {
    return std::accumulate(depths_.begin(), depths_.end(), 0L);
}

bool canonical_less(const Diagram& a, const Diagram& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    if (a.charge() != b.charge()) return a.charge() < b.charge();
    const long ba = a.box_count(), bb = b.box_count();
    if (ba != bb) return ba < bb;
    return b.depths() < a.depths();
}

std::string node_label(const Diagram& y) {
    std::ostringstream out;
    out << y.charge() << ";";
    for (std::size_t l = 0; l < y.depths().size(); ++l) {
        if (l > 0) out << ",";
        out << y.depths()[l];
    }
    return out.str();
}

std::vector<Corner> corners(const Diagram& y, ColourFn colour) {
    std::vector<Corner> out;
    const auto push = [&](long column, long yy, CornerKind kind) {
        const long diag = column + yy;
        out.push_back(Corner{column, yy, kind, colour(diag, y.n()), diag});
    };
    // walked left to right the boundary visits strictly increasing diagonals
    push(0, y.boundary_y(0), CornerKind::Concave);
    const auto& d = y.depths();
    for (std::size_t l = 0; l < d.size(); ++l) {
        const int next = l + 1 < d.size() ? d[l + 1] : 0;
        if (d[l] > next) {
            push(static_cast<long>(l) + 1, y.charge() - d[l], CornerKind::Convex);
            push(static_cast<long>(l) + 1, y.charge() - next, CornerKind::Concave);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Diagram add_box(const Diagram& y, std::size_t column) {
    auto depths = y.depths();
    if (column > depths.size())
        throw std::invalid_argument("add_box: column would skip an empty column");
    if (column == depths.size()) {
        depths.push_back(1);
    } else {
        if (column > 0 && depths[column] + 1 > depths[column - 1])
            throw std::invalid_argument("add_box: column is not addable");
        ++depths[column];
    }
    return Diagram(y.n(), y.charge(), std::move(depths));
}

Diagram remove_box(const Diagram& y, std::size_t column) {
    auto depths = y.depths();
    if (column >= depths.size()) throw std::invalid_argument("remove_box: empty column");
    if (column + 1 < depths.size() && depths[column] - 1 < depths[column + 1])
        throw std::invalid_argument("remove_box: column is not removable");
    if (--depths[column] == 0) depths.pop_back();
    return Diagram(y.n(), y.charge(), std::move(depths));
}

Signature i_signature(const Diagram& y, int i) {
    Signature sig;
    for (const Corner& c : corners(y)) {
        if (c.colour != i) continue;
        sig.word.push_back(c.kind == CornerKind::Concave ? '0' : '1');
        sig.sites.push_back(c);
    }
    return sig;
}

std::vector<int> reduce_signature(std::string_view word) {
    std::vector<int> open;  // unmatched '0' positions (1-based)
    std::vector<int> survivors;
    for (std::size_t p = 0; p < word.size(); ++p) {
        switch (word[p]) {
            case '0':
                open.push_back(static_cast<int>(p) + 1);
                break;
            case '1':
                if (!open.empty())
                    open.pop_back();  // cancels against the nearest live '0'
                else
                    survivors.push_back(static_cast<int>(p) + 1);
                break;
            default:
                throw std::invalid_argument("reduce_signature: word must be over {0,1}");
        }
    }
    survivors.insert(survivors.end(), open.begin(), open.end());
    return survivors;
}

std::vector<long> colour_counts(const Diagram& y, ColourFn colour) {
    std::vector<long> counts(y.n() + 1, 0);
    for (std::size_t l = 0; l < y.depths().size(); ++l)
        for (int r = 0; r < y.depths()[l]; ++r)
            ++counts[colour(static_cast<long>(l) + y.charge() - r, y.n())];
    return counts;
}

WeightVector weight_of(const Diagram& y) {
    WeightVector w = fundamental_weight(y.charge(), y.n());
    const auto counts = colour_counts(y);
    for (int i = 0; i <= y.n(); ++i) w -= counts[i] * simple_root(i, y.n());
    return w;
}

std::string render_text(const Diagram& y) {
    std::ostringstream out;
    const int rows = y.depths().empty() ? 0 : y.depths().front();
    for (int r = 0; r < rows; ++r) {
        for (std::size_t l = 0; l < y.depths().size() && y.depths()[l] > r; ++l) {
            const int c = colour_of(static_cast<long>(l) + y.charge() - r, y.n());
            out << static_cast<char>(c < 10 ? '0' + c : 'a' + c - 10);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

void partitions_desc(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        prefix.push_back(p);
        partitions_desc(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int n, int charge, int max_boxes) {
    if (max_boxes < 0) throw std::invalid_argument("enumerate_diagrams: max_boxes must be >= 0");
    std::vector<Diagram> out;
    for (int m = 0; m <= max_boxes; ++m) {
        std::vector<std::vector<int>> parts;
        std::vector<int> prefix;
        partitions_desc(m, m == 0 ? 1 : m, prefix, parts);
        for (auto& p : parts) out.emplace_back(n, charge, std::move(p));
    }
    return out;
}

}  // namespace cfock
