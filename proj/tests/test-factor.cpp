//
// epigen - idempotent factorizations in finite transformation semigroups
// Copyright (C) 2026 The epigen authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#include <random>  // for mt19937_64

#include "catch2/catch_amalgamated.hpp"

#include "test-helpers.hpp"

namespace epigen {
  using test::P;
  using test::T;

  namespace {
    std::vector<Transformation> values(std::vector<Idempotent> const& es) {
      std::vector<Transformation> out;
      for (auto const& e : es) {
        out.push_back(e.transf());
      }
      return out;
    }

    std::vector<Transformation> values(Factorization const& f) {
      std::vector<Transformation> out;
      for (auto const& r : f.factors) {
        out.push_back(r.value);
      }
      return out;
    }

    std::vector<FactorKind> kinds(Factorization const& f) {
      std::vector<FactorKind> out;
      for (auto const& r : f.factors) {
        out.push_back(r.kind);
      }
      return out;
    }

    // a * (x y) == a * b1 * ... * bj, computed with the test oracle
    bool absorbs(Transformation const&              a,
                 Transposition                      tau,
                 std::vector<Transformation> const& bs) {
      auto const   swap = tau.as_permutation(a.degree());
      test::images lhs  = test::brute_compose(a.images(), swap.transf().images());
      std::vector<test::images> rhs{a.images()};
      for (auto const& b : bs) {
        rhs.push_back(b.images());
      }
      return lhs == test::brute_product(rhs);
    }
  }  // namespace

  TEST_CASE("eg_decompose", "[factor]") {
    {
      auto [e, g] = eg_decompose(T("2 2 3"));
      CHECK(e.transf() == T("1 1 3"));
      CHECK(g == P(3, "(1 2)"));
    }
    {
      auto [e, g] = eg_decompose(T("1 1 3"));
      CHECK(e.transf() == T("1 1 3"));
      CHECK(g.is_identity());
    }
    {
      auto [e, g] = eg_decompose(T("3 3 3"));
      CHECK(e.transf() == T("1 1 1"));
      CHECK(g.transf() == T("3 1 2"));
      CHECK(g == P(3, "(1 3 2)"));
    }
    // permutations decompose as identity * a
    auto [e, g] = eg_decompose(T("2 3 1"));
    CHECK(e.transf().is_identity());
    CHECK(g.transf() == T("2 3 1"));
  }

  TEST_CASE("transpositions", "[factor]") {
    CHECK(transpositions(Permutation::identity(3)).empty());
    CHECK(transpositions(P(3, "(1 2)")) == std::vector<Transposition>{{0, 1}});
    auto const ts = transpositions(P(3, "(1 2 3)"));
    CHECK(ts == std::vector<Transposition>{{0, 1}, {0, 2}});
    CHECK((ts[0].as_permutation(3) * ts[1].as_permutation(3)).transf()
          == T("2 3 1"));
    CHECK(transpositions(P(5, "(4 5)(1 3 2)"))
          == std::vector<Transposition>{{0, 2}, {0, 1}, {3, 4}});
  }

  TEST_CASE("lemma1_rewrite", "[factor][rewrite]") {
    CHECK(lemma1_rewrite(T("1 1 3 3"), {1, 3}).empty());

    auto const case2 = lemma1_rewrite(T("1 1 3"), {0, 1});
    CHECK(values(case2) == std::vector{T("2 2 3")});
    CHECK(T("1 1 3") * P(3, "(1 2)") == T("2 2 3"));
    CHECK(T("1 1 3") * T("2 2 3") == T("2 2 3"));

    auto const case3 = lemma1_rewrite(T("1 2 2"), {0, 1});
    CHECK(values(case3) == std::vector{T("1 3 3"), T("2 2 3"), T("1 2 1")});
    CHECK(T("1 2 2") * P(3, "(1 2)") == T("2 1 1"));
    CHECK(T("1 2 2") * T("1 3 3") * T("2 2 3") * T("1 2 1") == T("2 1 1"));

    // the image point plays a1 whichever coordinate it is in
    CHECK(values(lemma1_rewrite(T("1 1 3"), {1, 0}))
          == std::vector{T("2 2 3")});

    CHECK_THROWS_AS(lemma1_rewrite(T("2 1 3"), {0, 1}), EpigenException);
    CHECK_THROWS_AS(lemma1_rewrite(T("1 1 3"), {1, 1}), EpigenException);
    CHECK_THROWS_AS(lemma1_rewrite(T("1 1 3"), {0, 3}), EpigenException);
  }

  TEST_CASE("factor_idempotents", "[factor]") {
    auto const f1 = factor_idempotents(T("2 2 3"));
    CHECK(values(f1) == std::vector{T("1 1 3"), T("2 2 3")});
    CHECK(kinds(f1)
          == std::vector{FactorKind::seed_idempotent, FactorKind::lemma1_case2});

    CHECK(values(factor_idempotents(T("1 1 3"))) == std::vector{T("1 1 3")});

    auto const f3 = factor_idempotents(T("2 1 1"));
    CHECK(values(f3)
          == std::vector{T("1 2 2"), T("1 3 3"), T("2 2 3"), T("1 2 1")});
    CHECK(kinds(f3)
          == std::vector{FactorKind::seed_idempotent,
                         FactorKind::lemma1_case3_e2,
                         FactorKind::lemma1_case3_e3,
                         FactorKind::lemma1_case3_e4});
    CHECK(f3.rank == 2);

    CHECK_THROWS_AS(factor_idempotents(T("2 1 3")), EpigenException);
  }

  TEST_CASE("verify_factorization", "[factor]") {
    auto f = factor_idempotents(T("2 1 1"));
    CHECK(verify_factorization(f));

    CHECK(verify_factorization(
        {T("2 2 3"), {{T("2 2 3"), FactorKind::seed_idempotent}}, 2}));

    auto tampered            = f;
    tampered.factors[1].value = Transformation::identity(3);
    CHECK_FALSE(verify_factorization(tampered));

    // right product, wrong contract: 2 1 1 is not idempotent
    CHECK_FALSE(verify_factorization(
        {T("2 1 1"), {{T("2 1 1"), FactorKind::seed_idempotent}}, 2}));
    // right factors, wrong product
    auto wrong  = f;
    wrong.input = T("1 2 1");
    CHECK_FALSE(verify_factorization(wrong));
    CHECK_FALSE(verify_factorization({T("2 2 3"), {}, 2}));
    // a conjugate factor needs a base and a witness
    CHECK_FALSE(verify_factorization(
        {T("2 2 3"), {{T("2 2 3"), FactorKind::conjugate}}, 2}));
    CHECK(verify_factorization({T("2 2 3"),
                                {{T("2 2 3"), FactorKind::conjugate, P(3, "(1 2)")}},
                                2,
                                T("1 1 3")}));
  }

  TEST_CASE("kind names", "[factor]") {
    for (auto k : {FactorKind::seed_idempotent,
                   FactorKind::lemma1_case2,
                   FactorKind::lemma1_case3_e2,
                   FactorKind::lemma1_case3_e3,
                   FactorKind::lemma1_case3_e4,
                   FactorKind::conjugate}) {
      CHECK(kind_from_name(kind_name(k)) == k);
    }
    CHECK_FALSE(kind_from_name("LEMMA2"));
  }

  ////////////////////////////////////////////////////////////////////////
  // Properties
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("factor_idempotents verifies, exhaustive n <= 4",
            "[factor][property]") {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (auto const& img : test::brute_all_maps(n)) {
        Transformation const a(img);
        if (a.is_permutation()) {
          continue;
        }
        auto const f = factor_idempotents(a);
        REQUIRE(verify_factorization(f));
        // independent recomputation of the product
        REQUIRE(test::brute_product(test::as_images(values(f))) == img);
        for (auto const& v : values(f)) {
          REQUIRE(test::brute_is_idempotent(v.images()));
          REQUIRE(test::brute_rank(v.images()) == test::brute_rank(img));
        }
      }
    }
  }

  TEST_CASE("factor_idempotents verifies, random n in 5..8",
            "[factor][property]") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 5; n <= 8; ++n) {
      for (int i = 0; i < 250; ++i) {
        auto const a = test::random_singular(rng, n);
        REQUIRE(verify_factorization(factor_idempotents(a)));
      }
    }
  }

  TEST_CASE("eg_decompose round trip and prefix ranks", "[factor][property]") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 2000; ++i) {
      std::size_t n = 2 + i % 7;
      auto const  a = test::random_singular(rng, n);
      auto [e, g]   = eg_decompose(a);
      REQUIRE(e.transf() * g == a);
      REQUIRE(kernel(e) == kernel(a));
      REQUIRE(e.rank() == a.rank());

      Transformation prefix = e.transf();
      for (auto tau : transpositions(g)) {
        prefix = prefix * tau.as_permutation(n);
        REQUIRE(prefix.rank() == a.rank());
      }
      REQUIRE(prefix == a);
    }
  }

  TEST_CASE("transpositions multiply back to g", "[factor][property]") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
      std::size_t n = 1 + i % 8;
      auto const  g = test::random_permutation(rng, n);
      Permutation p = Permutation::identity(n);
      for (auto tau : transpositions(g)) {
        REQUIRE(tau.x < tau.y);
        p = p * tau.as_permutation(n);
      }
      REQUIRE(p == g);
    }
  }

  TEST_CASE("lemma1_rewrite contract, random", "[factor][rewrite][property]") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 3000; ++i) {
      std::size_t n   = 2 + i % 7;
      auto const  a   = test::random_singular(rng, n);
      auto const  tau = test::random_transposition(rng, n);
      auto const  bs  = lemma1_rewrite(a, tau);
      REQUIRE((bs.size() == 0 || bs.size() == 1 || bs.size() == 3));
      REQUIRE(absorbs(a, tau, values(bs)));
      for (auto const& b : bs) {
        REQUIRE(b.rank() == a.rank());
      }
    }
  }

  // Every member of each target pattern works, not only the canonical one.
  TEST_CASE("lemma1 pattern independence, exhaustive n <= 4",
            "[factor][rewrite][property]") {
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<Transformation> idempotents;
      for (auto const& img : test::brute_all_maps(n)) {
        if (test::brute_is_idempotent(img)) {
          idempotents.emplace_back(img);
        }
      }
      for (auto const& img : test::brute_all_maps(n)) {
        Transformation const a(img);
        if (a.is_permutation()) {
          continue;
        }
        for (point_type x = 0; x < n; ++x) {
          for (point_type y = 0; y < n; ++y) {
            if (x == y) {
              continue;
            }
            auto const patterns = rewrite_patterns(a, {x, y});
            std::vector<std::vector<Transformation>> choices;
            for (auto const& [kind, p] : patterns) {
              std::vector<Transformation> members;
              for (auto const& e : idempotents) {
                if (p.matches(e)) {
                  members.push_back(e);
                }
              }
              REQUIRE(!members.empty());
              choices.push_back(std::move(members));
            }
            // walk the cartesian product of the choices
            std::vector<std::size_t> idx(choices.size(), 0);
            while (true) {
              std::vector<Transformation> bs;
              for (std::size_t i = 0; i < choices.size(); ++i) {
                bs.push_back(choices[i][idx[i]]);
              }
              REQUIRE(absorbs(a, {x, y}, bs));
              std::size_t i = choices.size();
              while (i > 0 && idx[i - 1] + 1 == choices[i - 1].size()) {
                idx[--i] = 0;
              }
              if (i == 0) {
                break;
              }
              ++idx[i - 1];
            }
          }
        }
      }
    }
  }

}  // namespace epigen
