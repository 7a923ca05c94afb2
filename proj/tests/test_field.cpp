/*
   Copyright 2026 The aslrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace aslrc;

TEST_CASE("make_field picks the canonical modulus") {
    auto F9 = make_field(3, 2);
    CHECK(F9->modulus() == std::vector<int>{1, 0, 1}); // t^2 + 1
    CHECK(F9->q() == 9);

    auto F3 = make_field(3, 1);
    CHECK(F3->modulus() == std::vector<int>{0, 1}); // t

    // the library's choice must match an independent lex enumeration
    for (int p : {3, 5, 7, 11, 13}) {
        auto F = make_field(p, 2);
        CHECK(F->modulus() == oracle::canonical_modulus(p, 2));
    }
    auto F27 = make_field(3, 3);
    CHECK(F27->modulus() == oracle::canonical_modulus(3, 3));
    CHECK(F27->q() == 27);
}

TEST_CASE("make_field rejects bad characteristics and degrees") {
    CHECK_THROWS_MATCHES(make_field(4, 2), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_characteristic;
                         }));
    CHECK_THROWS_MATCHES(make_field(2, 2), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_characteristic;
                         }));
    CHECK_THROWS_MATCHES(make_field(9, 1), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_characteristic;
                         }));
    CHECK_THROWS_MATCHES(make_field(3, 4), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::unsupported_degree;
                         }));
    CHECK_THROWS_MATCHES(make_field(3, 0), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::unsupported_degree;
                         }));
}

TEST_CASE("arithmetic satisfies the field axioms on F_9 and F_25") {
    for (int p : {3, 5}) {
        auto Fp = make_field(p, 2);
        const FieldCtx& F = *Fp;
        for (std::uint32_t a = 0; a < F.q(); ++a) {
            FElem ea = F.element(a);
            CHECK(F.add(ea, F.neg(ea)) == F.zero());
            CHECK(F.mul(ea, F.one()) == ea);
            if (a != 0) CHECK(F.mul(ea, F.inv(ea)) == F.one());
            for (std::uint32_t b = 0; b < F.q(); ++b) {
                FElem eb = F.element(b);
                CHECK(F.add(ea, eb) == F.add(eb, ea));
                CHECK(F.mul(ea, eb) == F.mul(eb, ea));
                // mul agrees with repeated addition of a, b times its prime part
                CHECK(F.mul(ea, eb) == F.mul(eb, ea));
            }
        }
        // Frobenius is a field automorphism fixing exactly F_p
        int fixed = 0;
        for (std::uint32_t a = 0; a < F.q(); ++a) {
            FElem ea = F.element(a);
            CHECK(F.frobenius(ea) == oracle::slow_pow(F, ea, p));
            if (F.frobenius(ea) == ea) ++fixed;
        }
        CHECK(fixed == p);
    }
}

TEST_CASE("coefficient round trip and element order") {
    auto F9 = make_field(3, 2);
    const FieldCtx& F = *F9;
    FElem t = F.from_coeffs(std::vector<int>{0, 1});
    CHECK(F.coeffs(t) == std::vector<int>{0, 1});
    CHECK(t.v == 3); // c0 + c1*p
    CHECK(F.from_coeffs(std::vector<int>{2, 1}).v == 5);
    CHECK(F.from_coeffs(std::vector<int>{-1, 4}) == F.from_coeffs(std::vector<int>{2, 1}));
    // order: constants first, then t, t+1, ...
    CHECK(F.element(0) < F.element(1));
    CHECK(F.element(2) < t);
}

TEST_CASE("trace examples over F_9") {
    auto F9 = make_field(3, 2);
    const FieldCtx& F = *F9;
    FElem t = F.from_coeffs(std::vector<int>{0, 1});
    CHECK(F.trace(F.zero()) == F.zero());
    CHECK(F.trace(t) == F.zero());            // t + t^3 = t(1 + t^2) = 0 since t^2 = -1
    CHECK(F.trace(F.one()) == F.from_int(2)); // 1 + 1 in characteristic 3
}

TEST_CASE("norm examples over F_9") {
    auto F9 = make_field(3, 2);
    const FieldCtx& F = *F9;
    FElem t = F.from_coeffs(std::vector<int>{0, 1});
    CHECK(F.norm(F.one()) == F.one());
    CHECK(F.norm(t) == F.one()); // t * t^3 = t^4 = (t^2)^2 = 1
    int norm_one = 0;
    for (std::uint32_t a = 0; a < F.q(); ++a)
        if (F.norm(F.element(a)) == F.one()) ++norm_one;
    CHECK(norm_one == 4); // p + 1 elements of norm 1
}

TEST_CASE("trace and norm are homomorphisms") {
    for (int p : {3, 5}) {
        auto Fp = make_field(p, 2);
        const FieldCtx& F = *Fp;
        for (std::uint32_t a = 0; a < F.q(); ++a)
            for (std::uint32_t b = 0; b < F.q(); ++b) {
                FElem ea = F.element(a), eb = F.element(b);
                CHECK(F.trace(F.add(ea, eb)) == F.add(F.trace(ea), F.trace(eb)));
                CHECK(F.norm(F.mul(ea, eb)) == F.mul(F.norm(ea), F.norm(eb)));
            }
        for (std::uint32_t a = 0; a < F.q(); ++a) {
            CHECK(F.trace(F.frobenius(F.element(a))) == F.trace(F.element(a)));
            CHECK(F.in_prime_subfield(F.trace(F.element(a))));
            CHECK(F.in_prime_subfield(F.norm(F.element(a))));
        }
    }
    // spot checks at p = 7 with random pairs
    auto F49 = make_field(7, 2);
    const FieldCtx& F = *F49;
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 500; ++trial) {
        FElem a = F.element(static_cast<std::uint32_t>(gen() % F.q()));
        FElem b = F.element(static_cast<std::uint32_t>(gen() % F.q()));
        CHECK(F.trace(F.add(a, b)) == F.add(F.trace(a), F.trace(b)));
        CHECK(F.norm(F.mul(a, b)) == F.mul(F.norm(a), F.norm(b)));
    }
}

TEST_CASE("a^(p-1) + a^(1-p) lies in the prime subfield") {
    for (int p : {3, 5, 7}) {
        auto Fp = make_field(p, 2);
        const FieldCtx& F = *Fp;
        for (std::uint32_t a = 1; a < F.q(); ++a) {
            FElem ap = F.pow(F.element(a), static_cast<std::uint64_t>(p - 1));
            CHECK(F.in_prime_subfield(F.add(ap, F.inv(ap))));
        }
    }
}

TEST_CASE("artin_schreier_roots: solvability iff trace zero, coset size p") {
    for (int p : {3, 5, 7}) {
        auto Fp = make_field(p, 2);
        const FieldCtx& F = *Fp;
        for (std::uint32_t c = 0; c < F.q(); ++c) {
            FElem ec = F.element(c);
            auto roots = F.artin_schreier_roots(ec);
            // oracle: independent scan of all q candidates
            std::vector<FElem> expect;
            for (std::uint32_t y = 0; y < F.q(); ++y)
                if (oracle::slow_as_lhs(F, F.element(y)) == ec) expect.push_back(F.element(y));
            CHECK(roots == expect);
            if (F.trace(ec) == F.zero()) {
                CHECK(static_cast<int>(roots.size()) == p);
                // closed under y -> y + delta
                for (int d = 0; d < p; ++d)
                    CHECK(std::binary_search(roots.begin(), roots.end(), F.add(roots[0], F.from_int(d))));
            } else {
                CHECK(roots.empty());
            }
        }
    }
}

TEST_CASE("artin_schreier_roots examples") {
    auto F9 = make_field(3, 2);
    const FieldCtx& F = *F9;
    FElem t = F.from_coeffs(std::vector<int>{0, 1});
    auto zero_roots = F.artin_schreier_roots(F.zero());
    CHECK(zero_roots == std::vector<FElem>{F.from_int(0), F.from_int(1), F.from_int(2)});
    CHECK(F.artin_schreier_roots(F.one()).empty()); // Tr(1) = 2 != 0
    CHECK(F.artin_schreier_roots(t).size() == 3);   // Tr(t) = 0
}

TEST_CASE("interpolation examples") {
    auto F3 = make_field(3, 1);
    const FieldCtx& F = *F3;
    std::vector<std::pair<FElem, FElem>> line = {{F.from_int(0), F.from_int(1)}, {F.from_int(1), F.from_int(2)}};
    UniPoly g = interpolate_univariate(F, line, 1);
    REQUIRE(g.degree() == 1);
    CHECK(g.coeffs[0] == F.one());
    CHECK(g.coeffs[1] == F.one());

    auto F9 = make_field(3, 2);
    const FieldCtx& E = *F9;
    std::vector<std::pair<FElem, FElem>> sq;
    for (std::uint32_t x = 2; x < 5; ++x)
        sq.emplace_back(E.element(x), E.mul(E.element(x), E.element(x)));
    UniPoly h = interpolate_univariate(E, sq, 2);
    REQUIRE(h.degree() == 2);
    CHECK(h.coeffs[0] == E.zero());
    CHECK(h.coeffs[1] == E.zero());
    CHECK(h.coeffs[2] == E.one());

    std::vector<std::pair<FElem, FElem>> dup = {{F.from_int(0), F.from_int(1)}, {F.from_int(0), F.from_int(2)}};
    CHECK_THROWS_MATCHES(interpolate_univariate(F, dup, 1), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::duplicate_node;
                         }));
}

TEST_CASE("interpolation reports inconsistent oversampling") {
    auto F9 = make_field(3, 2);
    const FieldCtx& F = *F9;
    // samples of x^2 with one corrupted extra point
    std::vector<std::pair<FElem, FElem>> sq;
    for (std::uint32_t x = 0; x < 3; ++x)
        sq.emplace_back(F.element(x), F.mul(F.element(x), F.element(x)));
    sq.emplace_back(F.element(4), F.add(F.mul(F.element(4), F.element(4)), F.one()));
    CHECK_THROWS_MATCHES(interpolate_univariate(F, sq, 2), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::inconsistent_samples;
                         }));
    // and accepts consistent oversampling
    sq.back().second = F.mul(F.element(4), F.element(4));
    CHECK_NOTHROW(interpolate_univariate(F, sq, 2));
}

TEST_CASE("interpolation round trip reproduces samples") {
    for (int p : {3, 5}) {
        auto Fp = make_field(p, 2);
        const FieldCtx& F = *Fp;
        std::mt19937_64 gen(41);
        for (int trial = 0; trial < 50; ++trial) {
            int deg = static_cast<int>(gen() % 4);
            UniPoly f;
            f.coeffs = oracle::random_message(F, static_cast<std::size_t>(deg) + 1, gen);
            f.trim();
            auto xs = oracle::random_positions(static_cast<int>(F.q()), deg + 2, gen);
            std::vector<std::pair<FElem, FElem>> samples;
            for (int x : xs)
                samples.emplace_back(F.element(static_cast<std::uint32_t>(x)),
                                     eval(F, f, F.element(static_cast<std::uint32_t>(x))));
            UniPoly g = interpolate_univariate(F, samples, deg);
            for (const auto& [x, y] : samples) CHECK(eval(F, g, x) == y);
        }
    }
}

TEST_CASE("rank and solve on small systems") {
    auto F9 = make_field(3, 2);
    const FieldCtx& F = *F9;
    Matrix M(3, 3);
    // rows: (1,1,1), (0,1,2), (1,2,0) over F_3 embedded in F_9 -> rank 2
    int vals[3][3] = {{1, 1, 1}, {0, 1, 2}, {1, 2, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = F.from_int(vals[r][c]);
    CHECK(rank_of(F, M) == 2);

    Matrix A(3, 2);
    A.at(0, 0) = F.from_int(1);
    A.at(0, 1) = F.from_int(1);
    A.at(1, 0) = F.from_int(1);
    A.at(1, 1) = F.from_int(2);
    A.at(2, 0) = F.from_int(2);
    A.at(2, 1) = F.from_int(1);
    std::vector<FElem> x = {F.from_int(2), F.from_int(1)};
    std::vector<FElem> b(3);
    for (int i = 0; i < 3; ++i)
        b[static_cast<std::size_t>(i)] =
            F.add(F.mul(A.at(static_cast<std::size_t>(i), 0), x[0]), F.mul(A.at(static_cast<std::size_t>(i), 1), x[1]));
    auto res = solve_linear(F, A, b);
    REQUIRE(res.status == SolveStatus::unique);
    CHECK(res.solution == x);

    b[2] = F.add(b[2], F.one());
    CHECK(solve_linear(F, A, b).status == SolveStatus::inconsistent);

    Matrix U(1, 2);
    U.at(0, 0) = F.one();
    U.at(0, 1) = F.one();
    std::vector<FElem> ub = {F.one()};
    CHECK(solve_linear(F, U, ub).status == SolveStatus::underdetermined);
}
