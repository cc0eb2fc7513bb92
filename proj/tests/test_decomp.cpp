#include <random>

#include "doctest.h"

#include "cjcalc/decomp.hpp"
#include "cjcalc/io.hpp"
#include "test_support.hpp"

using namespace cjcalc;

namespace {

DecompositionRow row1(std::initializer_list<std::pair<Int, Int>> terms) {
  DecompositionRow out;
  for (auto [w, c] : terms) out.emplace(Weight{w}, c);
  return out;
}

ProviderPtr a2_file_provider() {
  return provider_from_json(read_json_file(testing::source_path("data/a2_p2_decomp.json")), RootSystem::of_type("A2"));
}

}  // namespace

TEST_SUITE("decomp") {
  TEST_CASE("SL2 decomposition rows") {
    CHECK(sl2_decomposition_row(2, 3) == row1({{2, 1}}));
    CHECK(sl2_decomposition_row(3, 3) == row1({{3, 1}, {1, 1}}));
    CHECK(sl2_decomposition_row(4, 3) == row1({{4, 1}, {0, 1}}));
    CHECK(sl2_decomposition_row(2, 2) == row1({{2, 1}, {0, 1}}));
    CHECK(sl2_decomposition_row(3, 2) == row1({{3, 1}}));
    CHECK_THROWS_AS(sl2_decomposition_row(-1, 3), InputError);
    CHECK_THROWS_AS(sl2_decomposition_row(4, 9), InputError);
  }

  TEST_CASE("SL2 rows are 0/1 and consistent with an independent peel") {
    for (Int p : {2, 3, 5, 7}) {
      for (Int m = 0; m <= 60; ++m) {
        CAPTURE(p);
        CAPTURE(m);
        const DecompositionRow row = sl2_decomposition_row(m, p);
        std::map<oracle::I, oracle::I> expected = oracle::sl2_simple_expansion(oracle::sl2_string(m), p);
        std::map<oracle::I, oracle::I> ours;
        for (const auto& [n, c] : row) {
          CHECK((c == 0 || c == 1));
          ours[n[0]] = c;
        }
        CHECK(ours == expected);
      }
    }
  }

  TEST_CASE("simple characters") {
    auto provider = DecompositionProvider::builtin_sl2(3);
    auto a1 = [](std::initializer_list<std::pair<Int, Int>> terms) {
      Character out(1);
      for (auto [w, c] : terms) out.add_term(Weight{w}, c);
      return out;
    };
    CHECK(provider->simple_character(Weight{3}) == a1({{3, 1}, {-3, 1}}));
    CHECK(provider->simple_character(Weight{4}) == a1({{4, 1}, {2, 1}, {-2, 1}, {-4, 1}}));
    CHECK(provider->simple_character(Weight{2}) == a1({{2, 1}, {0, 1}, {-2, 1}}));
    for (Int m = 0; m <= 40; ++m)
      CHECK(testing::poly_of(provider->simple_character(Weight{m})) == oracle::sl2_simple(m, 3));
    CHECK_THROWS_AS(provider->simple_character(Weight{-1}), InputError);
  }

  TEST_CASE("simple basis expansion") {
    auto provider = DecompositionProvider::builtin_sl2(3);
    const RootSystem& rs = provider->root_system();
    CHECK(to_simple_basis(weyl_character(Weight{4}, rs), *provider).coeffs == row1({{4, 1}, {0, 1}}));
    CHECK(to_simple_basis(provider->simple_character(Weight{4}), *provider).coeffs == row1({{4, 1}}));
    CHECK(to_simple_basis(multiply(weyl_character(Weight{3}, rs), weyl_character(Weight{0}, rs)), *provider).coeffs ==
          row1({{3, 1}, {1, 1}}));
    Character broken(1);
    broken.add_term(Weight{5}, 2);
    CHECK_THROWS_AS(to_simple_basis(broken, *provider), InputError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const Character chi = testing::random_combination(rs, rng, 5, 20, true);
      CHECK(from_simple_basis(to_simple_basis(chi, *provider), *provider) == chi);
    }
  }

  TEST_CASE("basis change matrices") {
    auto provider = DecompositionProvider::builtin_sl2(3);
    std::vector<Weight> window;
    for (Int m = 0; m <= 4; ++m) window.push_back(Weight{m});
    const BasisChangeMatrices bc = basis_change_matrices(window, *provider);
    CHECK(bc.b_at(Weight{3}, Weight{3}) == 1);
    CHECK(bc.b_at(Weight{3}, Weight{1}) == 1);
    CHECK(bc.b_at(Weight{3}, Weight{2}) == 0);
    CHECK(bc.a_at(Weight{3}, Weight{3}) == 1);
    CHECK(bc.a_at(Weight{3}, Weight{1}) == -1);
    for (const Weight& w : window) {
      CHECK(bc.a_at(w, w) == 1);
      CHECK(bc.b_at(w, w) == 1);
    }
    CHECK(bc.mutually_inverse());
    const std::vector<Weight> gap{Weight{4}};
    CHECK_THROWS_AS(basis_change_matrices(gap, *provider), InputError);

    auto a2 = a2_file_provider();
    const auto window2 = dominant_box(a2->root_system(), 3);
    std::vector<Weight> closed;
    for (const Weight& w : window2)
      if (dominance_leq(w, Weight{2, 2}, a2->root_system())) closed.push_back(w);
    CHECK(basis_change_matrices(closed, *a2).mutually_inverse());
  }

  TEST_CASE("provider rows rebuild Weyl characters") {
    for (const ProviderPtr& provider : {DecompositionProvider::builtin_sl2(2), a2_file_provider()}) {
      const RootSystem& rs = provider->root_system();
      for (const Weight& lam : dominant_box(rs, rs.rank() == 1 ? 30 : 4)) {
        Character rebuilt(rs.rank());
        for (const auto& [mu, c] : provider->row(lam)) {
          CHECK(dominance_leq(mu, lam, rs));
          rebuilt += provider->simple_character(mu).scaled(c);
        }
        CHECK(provider->row(lam).at(lam) == 1);
        CHECK(rebuilt == weyl_character(lam, rs));
        const auto expansion = to_weyl_basis(provider->simple_character(lam), rs);
        CHECK(expansion.at(lam) == 1);
        for (const auto& [gamma, c] : expansion.coeffs) CHECK(dominance_leq(gamma, lam, rs));
      }
    }
  }

  TEST_CASE("file provider") {
    auto provider = a2_file_provider();
    CHECK(provider->provenance() == Provenance::File);
    CHECK(to_string(provider->provenance()) == "file");
    CHECK(to_string(DecompositionProvider::builtin_sl2(3)->provenance()) == "builtin-sl2");
    CHECK(provider->p() == 2);
    CHECK(provider->has_row(Weight{2, 2}));
    CHECK_FALSE(provider->has_row(Weight{5, 0}));
    CHECK_THROWS_AS(provider->row(Weight{5, 0}), CoverageError);
    // Simple characters of non-restricted weights only need restricted rows.
    CHECK(dimension(provider->simple_character(Weight{6, 0})) == 3 * 3);

    // A file for A1 p = 3 matches the built-in rows.
    auto a1 = provider_from_json(read_json_file(testing::source_path("data/a1_p3_decomp.json")), RootSystem::of_type("A1"));
    auto builtin = DecompositionProvider::builtin_sl2(3);
    for (Int m = 0; m <= 12; ++m) CHECK(a1->row(Weight{m}) == builtin->row(Weight{m}));
  }

  TEST_CASE("file validation rejects bad rows") {
    auto rs = RootSystem::of_type("A1");
    auto rows_with = [](DecompositionRow bad) {
      std::map<Weight, DecompositionRow> rows{{Weight{0}, row1({{0, 1}})}, {Weight{1}, row1({{1, 1}})},
                                              {Weight{2}, row1({{2, 1}})}};
      rows[Weight{3}] = std::move(bad);
      return rows;
    };
    CHECK_THROWS_WITH_AS(DecompositionProvider::from_rows(rs, 3, rows_with(row1({{3, 2}, {1, 1}}))), doctest::Contains("3"), InputError);
    CHECK_THROWS_WITH_AS(DecompositionProvider::from_rows(rs, 3, rows_with(row1({{3, 1}}))), doctest::Contains("lambda = 3"), InputError);
    CHECK_THROWS_AS(DecompositionProvider::from_rows(rs, 3, rows_with(row1({{3, 1}, {0, 1}}))), InputError);
    CHECK_THROWS_AS(DecompositionProvider::from_rows(rs, 3, rows_with(row1({{3, 1}, {1, -1}}))), InputError);
    CHECK_THROWS_AS(DecompositionProvider::from_rows(rs, 3, rows_with(row1({{3, 1}, {5, 1}}))), InputError);
    CHECK_THROWS_AS(DecompositionProvider::from_rows(rs, 4, rows_with(row1({{3, 1}, {1, 1}}))), InputError);
    CHECK_NOTHROW(DecompositionProvider::from_rows(rs, 3, rows_with(row1({{3, 1}, {1, 1}}))));
  }
}
