#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "sawlab/enumeration.hpp"
#include "sawlab/verify.hpp"

using namespace sawlab;

TEST_CASE("rooted walk counts: frozen values and oracle agreement") {
    // oracle values, frozen
    const uint64_t expected[] = {1, 4, 12, 36, 100, 284};
    for (int n = 1; n <= 5; ++n) {
        CHECK(oracle::count_walks(n) == expected[n]);
        CHECK(count_class(ObjectClass::walk_rooted, n) == expected[n]);
    }
    for (int n = 6; n <= 9; ++n)
        CHECK(count_class(ObjectClass::walk_rooted, n) == oracle::count_walks(n));
}

TEST_CASE("walk member sets match the oracle") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(enumerate(ObjectClass::walk_rooted, n, true).members == oracle::walks(n));
        CHECK(enumerate(ObjectClass::walk_ne0, n, true).members == oracle::walks_ne0(n));
        CHECK(enumerate(ObjectClass::first, n, true).members == oracle::first_parts(n));
    }
}

TEST_CASE("polygon counts against the closing-walk quotient oracle") {
    const uint64_t expected[] = {0, 0, 0, 0, 1, 0, 2, 0, 7};
    for (int n = 4; n <= 8; n += 2) {
        CHECK(count_class(ObjectClass::polygon, n) == expected[n]);
        auto mult = oracle::polygon_preimage_multiplicities(n);
        CHECK(mult.size() == expected[n]);
        for (const auto& [dirs, m] : mult) CHECK(m == 2ull * (uint64_t)n);
    }
    CHECK(count_class(ObjectClass::polygon, 10) == oracle::polygons(10).size());
}

TEST_CASE("walk classes at length one") {
    CHECK(count_class(ObjectClass::walk_rooted, 1) == 4);
    CHECK(count_class(ObjectClass::first, 1) == 2); // west and south steps only
    CHECK(count_class(ObjectClass::walk_rooted, 0) == 1);
}

TEST_CASE("first_nm at (1,3): only the west step extends") {
    auto t = enumerate(ObjectClass::first_nm, 1, true, {}, 3);
    REQUIRE(t.count == 1);
    CHECK(t.members[0] == "0,0:W");
}

TEST_CASE("closing counts and exact probabilities") {
    CHECK(closing_count(3) == 8);
    CHECK(closing_probability(3) == Rational(2, 9));
    CHECK(closing_count(5) == 24);
    CHECK(closing_probability(5) == Rational(6, 71));
    CHECK(closing_count(4) == 0);
    CHECK(closing_probability(4) == Rational(0));
}

TEST_CASE("closing identity holds exactly for odd n up to 9") {
    for (int n = 3; n <= 9; n += 2)
        CHECK(closing_count(n) == 2ull * (uint64_t)(n + 1) * count_class(ObjectClass::polygon, n + 1));
}

TEST_CASE("polygon superadditivity") {
    auto t = counts_table(16, {}, false);
    for (int m = 4; m <= 12; m += 2)
        for (int n = 4; m + n <= 16; n += 2)
            CHECK(t.p[(size_t)(m + n)] >= t.p[(size_t)m] * t.p[(size_t)n]);
}

TEST_CASE("growth-rate bracket") {
    auto t = counts_table(12, {}, false);
    auto mu = estimate_mu(t);
    CHECK(mu.lo < mu.hi);
    CHECK(mu.lo <= mu.estimate);
    CHECK(mu.estimate <= mu.hi);
    CHECK(mu.lo == doctest::Approx(std::pow(124.0, 1.0 / 12)).epsilon(1e-12));
    double hi = std::pow((double)t.c[1], 1.0);
    for (int n = 1; n <= 12; ++n)
        hi = std::min(hi, std::pow((double)t.c[(size_t)n], 1.0 / n));
    CHECK(mu.hi == doctest::Approx(hi).epsilon(1e-12));
    for (int n = 1; n <= 12; ++n)
        CHECK(std::pow((double)t.c[(size_t)n], 1.0 / n) >= mu.lo - 1e-12);
    CHECK_THROWS_AS(estimate_mu(3), error);
}

TEST_CASE("exponent reports") {
    auto t = counts_table(8);
    double mu = 2.5;
    auto r4 = exponents(4, mu, t);
    REQUIRE(r4.theta_n.has_value());
    // p_4 = 1 so theta_4 = 4 ln mu / ln 4
    CHECK(*r4.theta_n == doctest::Approx(4.0 * std::log(mu) / std::log(4.0)).epsilon(1e-14));

    auto r8 = exponents(8, mu, t);
    double reference = (8.0 * std::log(mu) - std::log(7.0)) / std::log(8.0);
    CHECK(*r8.theta_n == doctest::Approx(reference).epsilon(1e-12));

    CHECK_THROWS_AS(exponents(1, mu, t), error);
    auto r5 = exponents(5, mu, t);
    CHECK(!r5.theta_n.has_value());
    CHECK(r5.closing_prob == Rational(6, 71));
}

TEST_CASE("typicality sets") {
    auto t = counts_table(8);
    // zeta large enough that every even n qualifies
    auto big = typicality_sets(50.0, 2.64, 4, 8, t);
    CHECK(big.hpn == std::vector<int>{4, 6, 8});

    // 4 in HPN_{3/2} at mu=2.64 iff 1 >= 4^{-3/2} 2.64^4 = 6.07..., which fails
    auto mid = typicality_sets(1.5, 2.64, 4, 4, t);
    CHECK(mid.hpn.empty());

    // 4 in HCP_{1/2} iff 2/9 >= 1/2, which fails
    auto hcp = typicality_sets(0.5, 2.64, 4, 4, t);
    CHECK(hcp.hcp.empty());
    auto hcp2 = typicality_sets(2.0, 2.64, 4, 4, t);
    CHECK(hcp2.hcp == std::vector<int>{4}); // 2/9 >= 4^-2
}

TEST_CASE("ensemble persistence round trip") {
    auto t = enumerate(ObjectClass::polygon, 8, true);
    std::string path = "ens_roundtrip.tmp";
    save_ensemble(t, path);
    auto back = load_ensemble(path);
    CHECK(back.cls == ObjectClass::polygon);
    CHECK(back.n == 8);
    CHECK(back.count == t.count);
    CHECK(back.members == t.members);
    std::remove(path.c_str());
}

TEST_CASE("count-only ensembles round trip without members") {
    auto t = enumerate(ObjectClass::walk_rooted, 9, false);
    std::string path = "ens_count_only.tmp";
    save_ensemble(t, path);
    auto back = load_ensemble(path);
    CHECK(back.count == t.count);
    CHECK(!back.full);
    CHECK(back.members.empty());
    std::remove(path.c_str());
}

TEST_CASE("ensemble persistence error paths") {
    auto t = enumerate(ObjectClass::polygon, 6, true);
    std::string path = "ens_bad.tmp";
    save_ensemble(t, path);

    {
        std::ifstream in(path);
        std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::ofstream out(path);
        out << "SAWLAB 9" << all.substr(8);
    }
    try {
        load_ensemble(path);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::format_version_mismatch);
    }

    save_ensemble(t, path);
    {
        // drop one member line; the checksum catches the truncation
        std::ifstream in(path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        std::ofstream out(path);
        for (size_t i = 0; i < lines.size(); ++i)
            if (i + 2 != lines.size()) out << lines[i] << "\n";
    }
    try {
        load_ensemble(path);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::checksum_mismatch);
    }

    save_ensemble(t, path);
    {
        // drop a member and the checksum trailer: the count no longer matches
        std::ifstream in(path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        std::ofstream out(path);
        for (size_t i = 0; i + 2 < lines.size(); ++i) out << lines[i] << "\n";
    }
    try {
        load_ensemble(path);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::count_mismatch);
    }
    std::remove(path.c_str());
}

TEST_CASE("node budget surfaces as an error") {
    EnumConfig cfg;
    cfg.node_budget = 10;
    CHECK_THROWS_AS(enumerate(ObjectClass::walk_rooted, 8, false, cfg), error);
    try {
        enumerate(ObjectClass::walk_rooted, 8, false, cfg);
    } catch (const error& e) {
        CHECK(e.code() == errc::budget_exceeded);
    }
}

TEST_CASE("shard-parallel enumeration is deterministic") {
    for (int shards = 1; shards <= 8; ++shards) {
        EnumConfig cfg;
        cfg.shards = shards;
        for (int n : {5, 8, 10}) {
            CHECK(enumerate(ObjectClass::walk_rooted, n, true, cfg).members ==
                  enumerate(ObjectClass::walk_rooted, n, true).members);
            CHECK(enumerate(ObjectClass::first, n, true, cfg).members ==
                  enumerate(ObjectClass::first, n, true).members);
        }
        CHECK(enumerate(ObjectClass::polygon, 10, true, cfg).members ==
              enumerate(ObjectClass::polygon, 10, true).members);
        CHECK(enumerate(ObjectClass::walk_ne0, 7, true, cfg).members ==
              enumerate(ObjectClass::walk_ne0, 7, true).members);
        CHECK(enumerate(ObjectClass::first_nm, 3, true, cfg, 6).members ==
              enumerate(ObjectClass::first_nm, 3, true, {}, 6).members);
    }
}

TEST_CASE("counts CSV format") {
    auto t = counts_table(5);
    std::string path = "counts.tmp.csv";
    write_counts_csv(t, path);
    std::ifstream in(path);
    std::string header, row1, row3;
    std::getline(in, header);
    CHECK(header == "n,c_n,p_n,closing_count,closing_probability_num,closing_probability_den");
    std::getline(in, row1);
    CHECK(row1 == "1,4,0,0,0,1");
    std::getline(in, row3);
    std::getline(in, row3);
    CHECK(row3 == "3,36,0,8,2,9");
    std::remove(path.c_str());
}

TEST_CASE("class tokens round trip") {
    CHECK(class_token(ObjectClass::first_nm, 7) == "first_nm(7)");
    auto [cls, m] = parse_class_token("first_nm(7)");
    CHECK(cls == ObjectClass::first_nm);
    CHECK(m == 7);
    CHECK_THROWS_AS(parse_class_token("nonsense"), error);
}
