#include "doctest.h"

#include <cmath>

#include "sawlab/enumeration.hpp"
#include "sawlab/snake.hpp"
#include "sawlab/verify.hpp"

using namespace sawlab;

namespace {

Walk west_step() { return Walk({{0, 0}, {-1, 0}}); }
Walk south_step() { return Walk({{0, 0}, {0, -1}}); }

} // namespace

TEST_CASE("q at (1,3): west step closes one of three completions") {
    CHECK(conditional_closing_q(1, 3, west_step()) == Rational(1, 3));
    try {
        conditional_closing_q(1, 3, south_step());
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_extendable);
    }
}

TEST_CASE("q lies in the unit interval") {
    for (int m = 3; m <= 7; ++m) {
        for (int n = 0; n < m; ++n) {
            for (const auto& s : enumerate(ObjectClass::first_nm, n, true, {}, m).members) {
                Rational q = conditional_closing_q(n, m, Walk::parse(s));
                CHECK(q >= Rational(0));
                CHECK(q <= Rational(1));
            }
        }
    }
}

TEST_CASE("two q routes agree up to m = 9") {
    for (int m = 3; m <= 9; m += 2) {
        auto filtered = oracle::q_by_first_part(m);
        for (int n = 1; n < m; ++n) {
            for (const auto& s : enumerate(ObjectClass::first_nm, n, true, {}, m).members) {
                Walk gamma = Walk::parse(s);
                Rational qa = conditional_closing_q(n, m, gamma);
                auto it = filtered.find(s);
                REQUIRE(it != filtered.end());
                CHECK(qa == Rational((long long)it->second.closing, (long long)it->second.total));
            }
        }
    }
}

TEST_CASE("phi_hat at (1,3)") {
    auto members = phi_hat(1, 3, 2.0);
    REQUIRE(members.size() == 1);
    CHECK(members[0] == west_step()); // 1/3 > 3^-2

    // threshold at or above one empties the set since q <= 1 strictly fails
    CHECK(phi_hat(1, 3, 0.0).empty());

    // monotone in alpha
    auto small = phi_hat(2, 6, 0.4);
    auto large = phi_hat(2, 6, 1.2);
    for (const auto& g : small)
        CHECK(std::find(large.begin(), large.end(), g) != large.end());
}

TEST_CASE("charming indices of the west step") {
    SnakeParams p;
    p.n = 3;
    p.ell = 1;
    p.beta = 1.0;
    p.eta = 0.5;

    p.alpha = 2.0; // 1/3 > 3^-2
    auto idx = charming_indices(west_step(), p);
    CHECK(idx == std::vector<int>{1});

    p.alpha = 0.5; // 1/3 < 3^-(1/2)
    CHECK(charming_indices(west_step(), p).empty());
}

TEST_CASE("charming indices respect parity") {
    SnakeParams p;
    p.n = 5;
    p.ell = 2;
    p.alpha = 3.0;
    for (const auto& s : enumerate(ObjectClass::first_nm, 2, true, {}, 5).members) {
        for (int k : charming_indices(Walk::parse(s), p)) CHECK((p.ell - k) % 2 == 0);
    }
}

TEST_CASE("snake window clamps at beta = 1") {
    SnakeParams p;
    p.n = 5;
    p.ell = 3;
    p.alpha = 3.0;
    p.beta = 1.0;
    p.eta = 0.5;
    for (const auto& s : enumerate(ObjectClass::first_nm, 3, true, {}, 5).members) {
        Walk gamma = Walk::parse(s);
        auto rep = charming_snake_test(gamma, p);
        CHECK(rep.charming_in_window == (int)charming_indices(gamma, p).size());
    }
}

TEST_CASE("snake membership is monotone in alpha") {
    SnakeParams weak, strong;
    weak.n = strong.n = 7;
    weak.ell = strong.ell = 5;
    weak.beta = strong.beta = 1.0;
    weak.eta = strong.eta = 0.25;
    weak.alpha = 1.5;
    strong.alpha = 0.75;
    for (const auto& s : enumerate(ObjectClass::first_nm, 5, true, {}, 7).members) {
        Walk gamma = Walk::parse(s);
        if (charming_snake_test(gamma, strong).member)
            CHECK(charming_snake_test(gamma, weak).member);
    }
}

TEST_CASE("threshold count arithmetic at n = 9") {
    SnakeParams p;
    p.n = 9;
    p.ell = 5;
    p.alpha = 1.2;
    p.beta = 1.0;
    p.eta = 0.5;
    double required = std::pow(9.0, 0.5) / 4.0;
    for (const auto& s : enumerate(ObjectClass::first_nm, 5, true, {}, 9).members) {
        Walk gamma = Walk::parse(s);
        auto rep = charming_snake_test(gamma, p);
        CHECK(rep.required == doctest::Approx(required));
        CHECK(rep.member == ((double)rep.charming_in_window >= required));
    }
}

TEST_CASE("snake constants at d = 2") {
    auto k = snake_constants(2);
    CHECK(k.c == doctest::Approx(std::pow(2.0, 1.0 / 85.0)).epsilon(1e-15));
    CHECK(k.K == doctest::Approx(1020.0).epsilon(1e-12));
}

TEST_CASE("hypothesis report evaluates both sides") {
    SnakeParams p;
    p.n = 9;
    p.ell = 7;
    p.alpha = 0.5;
    p.beta = 1.0;
    p.eta = 0.3;
    auto rep = snake_hypothesis_eval(p);
    // two independent arithmetic paths for the right-hand side
    double delta = 1.0 - 0.3 - 0.5;
    double direct = std::pow(std::pow(2.0, 1.0 / 85.0), -std::pow(9.0, delta) / 2.0);
    double via_logs = std::exp(-std::log(2.0) / 85.0 * std::pow(9.0, delta) / 2.0);
    CHECK(rep.rhs == doctest::Approx(direct).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(via_logs).epsilon(1e-12));
    CHECK(rep.n_threshold == doctest::Approx(std::pow(1020.0, 1.0 / delta)).epsilon(1e-9));
    CHECK(!rep.n_at_threshold); // desk-scale n sits far below K^(1/delta)
    CHECK(rep.lhs >= Rational(0));
    CHECK(rep.lhs <= Rational(1));

    p.alpha = 0.8; // delta <= 0
    CHECK_THROWS_AS(snake_hypothesis_eval(p), error);
}

TEST_CASE("x statistic stays within its trivial bound and matches a direct oracle") {
    Polygon sq = Polygon::from_direction_string("WSEN");
    for (int ell = 0; ell <= 3; ++ell) {
        int x = x_statistic(sq, ell, 2, 0.9);
        CHECK(x <= ell + 1);
        // direct recomputation
        auto trav = sq.traversal();
        int direct = 0;
        for (int k = 0; k <= ell; ++k) {
            Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + k + 1));
            auto cc = count_completions(prefix, 1);
            if (cc.total == 0) continue;
            long double q = (long double)cc.closing / cc.total;
            long double thr = std::pow((long double)(2 + k - 1), (long double)-0.9);
            if (q > thr) direct++;
        }
        CHECK(x == direct);
    }
}

TEST_CASE("x statistic implication lands in the snake set") {
    for (int len = 4; len <= 10; len += 2) {
        int n = len - 1;
        for (int m_prime : {2, 4}) {
            int ell = n - m_prime + 1;
            if (ell < 0) continue;
            SnakeParams p;
            p.alpha = 0.5;
            p.beta = 1.0;
            p.eta = 0.25;
            p.n = n;
            p.ell = ell;
            double threshold = std::pow((double)n, p.beta - p.eta) / 4.0;
            for (const auto& s : enumerate(ObjectClass::polygon, len, true).members) {
                Polygon phi = Polygon::from_direction_string(s);
                int x = x_statistic(phi, ell, m_prime, p.alpha);
                if ((double)x < threshold) continue;
                auto trav = phi.traversal();
                Walk prefix(std::vector<Point>(trav.begin(), trav.begin() + ell + 1));
                CHECK(charming_snake_test(prefix, p).member);
            }
        }
    }
}

TEST_CASE("membership of E at the worked example") {
    TypicalityParams tp;
    tp.chi = 0.0;
    tp.eps1 = 0.1;
    tp.eps2 = 0.2;
    tp.a = 0.0;
    auto rep = typical_pair_checks(1, 4, tp);
    // 3 first parts of length one versus 3^0.6 * 1: the strict inequality fails
    CHECK(!rep.in_E);
}

TEST_CASE("closing-probability typicality is trivially true at threshold one") {
    TypicalityParams tp;
    tp.chi = 0.0;
    tp.eps1 = 0.2;
    tp.eps2 = 0.2; // a = 0 and equal epsilons force a right-hand side of one
    tp.a = 0.0;
    auto rep = typical_pair_checks(0, 4, tp);
    CHECK(rep.cpt_ok);
}

TEST_CASE("closecard report at n = 5") {
    auto rep = closecard_report(5, 1.0, 0.5);
    CHECK(rep.bound == doctest::Approx(2.0 * std::sqrt(5.0)));
    // closing probability at 5 is 6/71 < 1/5, so the hypothesis fails
    CHECK(!rep.hypothesis_met);

    auto rep2 = closecard_report(5, 2.0, 0.5);
    CHECK(rep2.hypothesis_met); // 6/71 >= 5^-2
    CHECK((double)rep2.bad_indices.size() <= rep2.bound + 1e-9);
}

TEST_CASE("closecard bound holds whenever the hypothesis does") {
    for (int n = 3; n <= 9; n += 2) {
        for (double ap : {1.6, 2.0}) {
            for (double dp : {0.3, 0.5, 1.0}) {
                auto rep = closecard_report(n, ap, dp);
                if (!rep.hypothesis_met) continue;
                CHECK((double)rep.bad_indices.size() <= rep.bound + 1e-9);
            }
        }
    }
    // the largest odd length, on a thinner parameter grid
    for (auto [ap, dp] : std::initializer_list<std::pair<double, double>>{{2.0, 0.5}, {1.6, 1.0}}) {
        auto rep = closecard_report(11, ap, dp);
        if (rep.hypothesis_met) CHECK((double)rep.bad_indices.size() <= rep.bound + 1e-9);
    }
}

TEST_CASE("guard band raises on knife-edge comparisons") {
    CHECK(guarded_greater(2.0L, 1.0L));
    CHECK(!guarded_greater(1.0L, 1.0L)); // exact ties decide strictly
    CHECK_THROWS_AS(guarded_greater(1.0L + 1e-14L, 1.0L), error);
}
