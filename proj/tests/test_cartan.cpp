#include "cfock/cartan.hpp"

#include <doctest.h>

#include <stdexcept>

using cfock::cartan_entry;
using cfock::Coweight;
using cfock::coweight_d;
using cfock::coweight_h;
using cfock::fundamental_weight;
using cfock::s_value;
using cfock::simple_root;
using cfock::WeightVector;

TEST_CASE("matrix entries: frozen values") {
    // the two -2 hooks sit at (1,0) and (n-1,n)
    CHECK(cartan_entry(1, 0, 4) == -2);
    CHECK(cartan_entry(3, 4, 4) == -2);
    CHECK(cartan_entry(0, 1, 4) == -1);
    CHECK(cartan_entry(4, 3, 4) == -1);
    CHECK(cartan_entry(2, 2, 4) == 2);
    CHECK(cartan_entry(0, 3, 5) == 0);
    CHECK(cartan_entry(2, 4, 5) == 0);

    // n = 2: both hooks land in the middle row, (-2, 2, -2)
    CHECK(cartan_entry(1, 0, 2) == -2);
    CHECK(cartan_entry(1, 1, 2) == 2);
    CHECK(cartan_entry(1, 2, 2) == -2);
    CHECK(cartan_entry(0, 1, 2) == -1);
    CHECK(cartan_entry(2, 1, 2) == -1);
    CHECK(cartan_entry(0, 2, 2) == 0);
}

TEST_CASE("matrix entries: bounds") {
    CHECK_THROWS_AS(cartan_entry(0, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(cartan_entry(-1, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(cartan_entry(0, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(s_value(3, 2), std::out_of_range);
}

TEST_CASE("symmetriser and null column sums") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(s_value(0, n) == 2);
        CHECK(s_value(n, n) == 2);
        for (int i = 1; i < n; ++i) CHECK(s_value(i, n) == 1);

        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                CHECK(s_value(i, n) * cartan_entry(i, j, n) ==
                      s_value(j, n) * cartan_entry(j, i, n));

        // affine degeneracy: every column sums to zero against (1,..,1)
        for (int j = 0; j <= n; ++j) {
            int sum = 0;
            for (int i = 0; i <= n; ++i) sum += cartan_entry(i, j, n);
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("fundamental weights and simple roots at n = 2") {
    const WeightVector l0 = fundamental_weight(0, 2);
    CHECK(l0.h == std::vector<long>{1, 0, 0});
    CHECK(l0.d == 0);
    CHECK(fundamental_weight(2, 2).h == std::vector<long>{0, 0, 1});

    const WeightVector a0 = simple_root(0, 2);
    CHECK(a0.h == std::vector<long>{2, -2, 0});
    CHECK(a0.d == 1);
    const WeightVector a1 = simple_root(1, 2);
    CHECK(a1.h == std::vector<long>{-1, 2, -1});
    CHECK(a1.d == 0);
    const WeightVector a2 = simple_root(2, 2);
    CHECK(a2.h == std::vector<long>{0, -2, 2});
    CHECK(a2.d == 0);
}

TEST_CASE("weight arithmetic") {
    const WeightVector w = fundamental_weight(0, 2) - simple_root(0, 2) - 2 * simple_root(1, 2);
    CHECK(w.h == std::vector<long>{1, -2, 2});
    CHECK(w.d == -1);
    CHECK(w + simple_root(0, 2) + 2 * simple_root(1, 2) == fundamental_weight(0, 2));

    WeightVector u = w;
    u *= 3;
    CHECK(u.h == std::vector<long>{3, -6, 6});
    CHECK(u.d == -3);

    // the ordering is total, usable as a map key
    CHECK(fundamental_weight(0, 2) != fundamental_weight(1, 2));
    CHECK((fundamental_weight(0, 2) < fundamental_weight(1, 2) ||
           fundamental_weight(1, 2) < fundamental_weight(0, 2)));
}

TEST_CASE("coweight pairings recover the matrix") {
    for (int n = 2; n <= 4; ++n) {
        for (int i = 0; i <= n; ++i) {
            const Coweight hi = coweight_h(i, n);
            for (int j = 0; j <= n; ++j) {
                CHECK(hi.pair(simple_root(j, n)) == cartan_entry(i, j, n));
                CHECK(hi.pair(fundamental_weight(j, n)) == (i == j ? 1 : 0));
            }
        }
        const Coweight d = coweight_d(n);
        for (int j = 0; j <= n; ++j) {
            CHECK(d.pair(simple_root(j, n)) == (j == 0 ? 1 : 0));
            CHECK(d.pair(fundamental_weight(j, n)) == 0);
        }
    }
}
