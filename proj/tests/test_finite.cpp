#include <random>

#include "doctest.h"

#include "cjcalc/finite.hpp"
#include "cjcalc/io.hpp"
#include "test_support.hpp"

using namespace cjcalc;

namespace {

std::map<Weight, Int> a1map(std::initializer_list<std::pair<Int, Int>> terms) {
  std::map<Weight, Int> out;
  for (auto [w, c] : terms) out.emplace(Weight{w}, c);
  return out;
}

constexpr SteinbergMethod kRoutes[] = {SteinbergMethod::Direct, SteinbergMethod::GoodFiltration, SteinbergMethod::SimpleBasis};

}  // namespace

TEST_SUITE("finite") {
  TEST_CASE("finite composition multiplicities") {
    auto provider = DecompositionProvider::builtin_sl2(3);
    const RootSystem& rs = provider->root_system();
    CHECK(finite_composition_multiplicities(weyl_character(Weight{3}, rs), 1, *provider).values == a1map({{1, 2}}));
    CHECK(finite_composition_multiplicities(weyl_character(Weight{4}, rs), 1, *provider).values == a1map({{2, 1}, {0, 2}}));
    CHECK(finite_composition_multiplicities(weyl_character(Weight{2}, rs), 1, *provider).values == a1map({{2, 1}}));
    CHECK_THROWS_AS(finite_composition_multiplicities(weyl_character(Weight{2}, rs), 0, *provider), InputError);
  }

  TEST_CASE("finite multiplicities agree with SL2(q) Brauer characters") {
    for (auto [p, r] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
      auto provider = DecompositionProvider::builtin_sl2(p);
      const RootSystem& rs = provider->root_system();
      const Int q = checked_pow(p, r);
      for (Int m = 0; m <= 3 * q; ++m) {
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(m);
        const Character& chi = weyl_character(Weight{m}, rs);
        const FiniteMultiplicities ours = finite_composition_multiplicities(chi, r, *provider);
        const auto expected = oracle::sl2_finite_multiplicities(testing::poly_of(chi), p, q);
        Int total_dim = 0;
        for (Int lam = 0; lam < q; ++lam) {
          CHECK(ours.at(Weight{lam}) == expected[static_cast<std::size_t>(lam)]);
          CHECK(ours.at(Weight{lam}) >= 0);
          total_dim += ours.at(Weight{lam}) * dimension(provider->simple_character(Weight{lam}));
        }
        CHECK(total_dim == dimension(chi));
      }
    }
  }

  TEST_CASE("untwisting depth is bounded by the digit count") {
    auto provider = DecompositionProvider::builtin_sl2(2);
    CHECK(untwisting_depth(Weight{1}, 1, *provider) == 0);
    for (Int m = 0; m <= 64; ++m) {
      Int digits = 0;
      for (Int x = m; x > 0; x /= 2) ++digits;
      CHECK(untwisting_depth(Weight{m}, 1, *provider) <= std::max<Int>(digits, 1));
    }
  }

  TEST_CASE("the three Steinberg routes") {
    auto provider = DecompositionProvider::builtin_sl2(3);
    const RootSystem& rs = provider->root_system();
    for (SteinbergMethod m : kRoutes) {
      CAPTURE(to_string(m));
      CHECK(steinberg_multiplicity(weyl_character(Weight{2}, rs), 1, *provider, m) == 1);
      CHECK(steinberg_multiplicity(weyl_character(Weight{4}, rs), 1, *provider, m) == 1);
      CHECK(steinberg_multiplicity(weyl_character(Weight{3}, rs), 1, *provider, m) == 0);
    }
    CHECK(steinberg_multiplicity_good_filtration(weyl_character(Weight{4}, rs), 3, 1, rs) == 1);
    Character broken(1);
    broken.add_term(Weight{1}, 1);
    for (SteinbergMethod m : kRoutes) CHECK_THROWS_AS(steinberg_multiplicity(broken, 1, *provider, m), InputError);
  }

  TEST_CASE("routes agree on A2 and are additive") {
    auto provider = provider_from_json(read_json_file(testing::source_path("data/a2_p2_decomp.json")), RootSystem::of_type("A2"));
    const RootSystem& rs = provider->root_system();
    for (const Weight& lam : dominant_box(rs, 4)) {
      CAPTURE(to_string(lam));
      const Character& chi = weyl_character(lam, rs);
      const Int direct = steinberg_multiplicity(chi, 1, *provider, SteinbergMethod::Direct);
      CHECK(steinberg_multiplicity(chi, 1, *provider, SteinbergMethod::GoodFiltration) == direct);
      CHECK(steinberg_multiplicity(chi, 1, *provider, SteinbergMethod::SimpleBasis) == direct);
    }
    std::mt19937_64 rng(3);
    auto a1 = DecompositionProvider::builtin_sl2(5);
    for (int trial = 0; trial < 30; ++trial) {
      const Character a = testing::random_combination(a1->root_system(), rng, 4, 30, true);
      const Character b = testing::random_combination(a1->root_system(), rng, 4, 30, true);
      for (SteinbergMethod m : kRoutes)
        CHECK(steinberg_multiplicity(a + b, 1, *a1, m) ==
              steinberg_multiplicity(a, 1, *a1, m) + steinberg_multiplicity(b, 1, *a1, m));
    }
  }

  TEST_CASE("Steinberg times twisted Weyl characters keeps dimension bookkeeping") {
    for (Int p : {2, 3}) {
      auto provider = DecompositionProvider::builtin_sl2(p);
      const RootSystem& rs = provider->root_system();
      for (Int nu = 0; nu <= 4; ++nu) {
        const Character chi = multiply(steinberg_character(rs, p, 1), frobenius_twist(weyl_character(Weight{nu}, rs), p, 1));
        Int total = 0;
        for (const auto& [lam, c] : finite_composition_multiplicities(chi, 1, *provider).values) {
          CHECK(c >= 0);
          total += c * dimension(provider->simple_character(lam));
        }
        CHECK(total == dimension(chi));
      }
    }
  }

  TEST_CASE("nu bound") {
    auto rs = RootSystem::of_type("A1");
    CHECK(nu_bound(weyl_character(Weight{4}, *rs), 3, 1, *rs) == std::vector<Weight>{Weight{0}, Weight{1}});
    CHECK(nu_bound(weyl_character(Weight{2}, *rs), 3, 1, *rs) == std::vector<Weight>{Weight{0}});
    CHECK(nu_bound(Character(1), 3, 1, *rs).empty());
    NuRangeOptions wide;
    wide.widen = 2;
    wide.exact_filter = false;
    CHECK(nu_bound(weyl_character(Weight{4}, *rs), 3, 1, *rs, wide).size() == 4);
  }

  TEST_CASE("method names") {
    for (SteinbergMethod m : kRoutes) CHECK(parse_steinberg_method(to_string(m)) == m);
    CHECK_FALSE(parse_steinberg_method("bogus").has_value());
  }
}
