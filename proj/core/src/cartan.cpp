#include "cfock/cartan.hpp"

#include <stdexcept>

namespace cfock {

namespace {

void check_rank(int n) {
    if (n < 2) throw std::out_of_range("rank n must be at least 2");
}

void check_index(int i, int n) {
    if (i < 0 || i > n) throw std::out_of_range("node index out of range 0..n");
}

}  // namespace

int cartan_entry(int i, int j, int n) {
    check_rank(n);
    check_index(i, n);
    check_index(j, n);
    if (i == j) return 2;
    if (i - j != 1 && j - i != 1) return 0;
    if (i == 1 && j == 0) return -2;
    if (i == n - 1 && j == n) return -2;
    return -1;
}

int s_value(int i, int n) {
    check_rank(n);
    check_index(i, n);
    return (i == 0 || i == n) ? 2 : 1;
}

WeightVector& WeightVector::operator+=(const WeightVector& rhs) {
    if (h.size() != rhs.h.size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += rhs.h[i];
    d += rhs.d;
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& rhs) {
    if (h.size() != rhs.h.size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < h.size(); ++i) h[i] -= rhs.h[i];
    d -= rhs.d;
    return *this;
}

WeightVector& WeightVector::operator*=(long c) {
    for (auto& v : h) v *= c;
    d *= c;
    return *this;
}

WeightVector fundamental_weight(int k, int n) {
    check_rank(n);
    check_index(k, n);
    WeightVector w{std::vector<long>(n + 1, 0), 0};
    w.h[k] = 1;
    return w;
}

WeightVector simple_root(int j, int n) {
    check_rank(n);
    check_index(j, n);
    WeightVector w{std::vector<long>(n + 1, 0), j == 0 ? 1L : 0L};
    for (int i = 0; i <= n; ++i) w.h[i] = cartan_entry(i, j, n);
    return w;
}

long Coweight::pair(const WeightVector& w) const {
    if (h.size() != w.h.size()) throw std::invalid_argument("coweight rank mismatch");
    long out = d * w.d;
    for (std::size_t i = 0; i < h.size(); ++i) out += h[i] * w.h[i];
    return out;
}

Coweight coweight_h(int i, int n) {
    check_rank(n);
    check_index(i, n);
    Coweight c{std::vector<long>(n + 1, 0), 0};
    c.h[i] = 1;
    return c;
}

Coweight coweight_d(int n) {
    check_rank(n);
    return Coweight{std::vector<long>(n + 1, 0), 1};
}

}  // namespace cfock
