#include <doctest.h>

#include <random>

#include "polydecomp/polynomial.hpp"
#include "polydecomp/series.hpp"
#include "polydecomp/text_format.hpp"
#include "test_support.hpp"

using namespace polydecomp;
using namespace polydecomp::testing;

namespace {

using QPoly = Polynomial<Rational>;

QPoly q(std::string_view text) { return parse_polynomial<Rational>(text); }
MonicOriginal<Rational> mo(std::string_view text) { return parse_monic_original<Rational>(text); }

}  // namespace

TEST_CASE("add") {
  CHECK(q("1,1,0") + q("-1,0") == q("1,0,0"));
  CHECK(q("3,0,2,0") + QPoly{} == q("3,0,2,0"));
  CHECK(q("1,0,2,0") + q("1,0,3,0") == q("2,0,5,0"));
  CHECK((q("1,2") - q("1,2")).is_zero());
  CHECK((q("1,2") - q("1,2")).degree() == -1);
}

TEST_CASE("mul") {
  CHECK(q("1,1") * q("1,-1") == q("1,0,-1"));
  CHECK(q("5,0,-1/2,7") * q("1") == q("5,0,-1/2,7"));
  CHECK(q("1,2,0") * q("1,2,0") == q("1,4,4,0,0"));
  CHECK((q("1,2") * QPoly{}).is_zero());
}

TEST_CASE("karatsuba path agrees with schoolbook") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t la = 30 + static_cast<std::size_t>(rng() % 50);
    const std::size_t lb = 30 + static_cast<std::size_t>(rng() % 50);
    auto a = random_series<Rational>(rng, la, Rational(1));
    auto b = random_series<Rational>(rng, lb, random_rational(rng));
    CHECK(multiply(a, b) == multiply_schoolbook(a, b));
  }
  // Float path stays within rounding of the schoolbook product.
  auto a = random_series<Real>(rng, 100, 1.0);
  auto b = random_series<Real>(rng, 70, 0.5);
  CHECK(approx_equal(multiply(a, b), multiply_schoolbook(a, b), 1e-12));
}

TEST_CASE("compose") {
  CHECK(compose(q("1,1,0"), q("1,2,0")) == q("1,4,5,2,0"));
  CHECK(compose(q("1,3,-2,0"), q("1,0")) == q("1,3,-2,0"));
  CHECK(compose(q("1,0"), q("1,7/3,0")) == q("1,7/3,0"));

  SUBCASE("matches interpolation oracle and degree law") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      const int dg = 1 + static_cast<int>(rng() % 4);
      const int dh = 1 + static_cast<int>(rng() % 4);
      auto g = random_series<Rational>(rng, static_cast<std::size_t>(dg) + 1, random_rational(rng));
      auto h = random_series<Rational>(rng, static_cast<std::size_t>(dh) + 1, random_rational(rng));
      if (g.degree() < 1 || h.degree() < 1) continue;
      auto f = compose(g, h);
      CHECK(f == compose_by_interpolation(g, h));
      CHECK(f.degree() == g.degree() * h.degree());
    }
  }

  SUBCASE("monic original closure") {
    std::mt19937_64 rng(12);
    auto f = compose(random_monic_original<Rational>(rng, 3), random_monic_original<Rational>(rng, 4));
    CHECK(f.degree() == 12);
    CHECK(f.coeff(12) == 1);
    CHECK(f.coeff(0) == 0);
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(mo("1,4,5,2,0")) == q("2,5,4,1"));
  CHECK(reverse(mo("1,0,0,0,0,0")) == q("1"));
  CHECK(reverse(mo("1,1,0,0,0")) == q("1,1"));
  CHECK(reverse(mo("1,0,0,1,0")) == q("1,0,0,1"));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_monic_original<Rational>(rng, 2 + static_cast<int>(rng() % 10));
    // Reversing the reverse at length n recovers f.
    CHECK(reverse(reverse(f), static_cast<std::size_t>(f.degree())) == f.poly());
  }
}

TEST_CASE("series_inverse") {
  CHECK(series_inverse(q("-1,1"), 4) == q("1,1,1,1"));
  CHECK(series_inverse(q("1"), 5) == q("1"));
  CHECK(series_inverse(q("2,1"), 3) == q("4,-2,1"));
  CHECK_THROWS_AS(series_inverse(q("1,0"), 3), DomainError);

  SUBCASE("p * inverse == 1 mod x^k") {
    std::mt19937_64 rng(5);
    for (std::size_t k = 1; k <= 64; k += (k < 16 ? 1 : 7)) {
      auto p = random_series<Rational>(rng, 1 + rng() % 20, Rational(1));
      CHECK(truncate(p * series_inverse(p, k), k) == q("1"));
    }
  }
}

TEST_CASE("series_dth_root") {
  CHECK(series_dth_root(q("2,5,4,1"), 2, 2) == q("2,1"));
  CHECK(series_dth_root(q("1"), 3, 6) == q("1"));
  CHECK_THROWS_AS(series_dth_root(q("1,2"), 2, 3), DomainError);

  SUBCASE("closed form of (1+u)^{1/5} to order 3") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
      Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
      auto root = series_dth_root(QPoly{Rational(1), a, b, c}, 5, 4);
      CHECK(root.coeff(1) == a / 5);
      CHECK(root.coeff(2) == (-2 * a * a + 5 * b) / 25);
      CHECK(root.coeff(3) == (6 * a * a * a - 20 * b * a + 25 * c) / 125);
    }
  }

  SUBCASE("q^d == p mod x^k and binomial oracle") {
    std::mt19937_64 rng(23);
    for (unsigned d : {2U, 3U, 5U}) {
      for (std::size_t k = 1; k <= 32; k += 3) {
        auto p = random_series<Rational>(rng, 1 + rng() % 12, Rational(1));
        auto root = series_dth_root(p, d, k);
        CHECK(root.degree() < static_cast<int>(k));
        CHECK(root.coeff(0) == 1);
        CHECK(truncate(power(root, d), k) == truncate(p, k));
        CHECK(root == binomial_root_oracle(p, d, k));
      }
    }
  }
}

TEST_CASE("newton schedule ends at k") {
  CHECK(newton_schedule(1) == std::vector<std::size_t>{1});
  CHECK(newton_schedule(8) == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(newton_schedule(5) == std::vector<std::size_t>{1, 2, 3, 5});
}

TEST_CASE("taylor_coefficients") {
  auto g = taylor_coefficients(q("1,4,5,2,0"), mo("1,2,0"), 2);
  REQUIRE(g.size() == 3);
  CHECK(g[0].is_zero());
  CHECK(g[1] == q("1"));
  CHECK(g[2] == q("1"));

  auto h = mo("1,3,-1,0");
  auto id = taylor_coefficients(h.poly(), h, 1);
  CHECK(id[0].is_zero());
  CHECK(id[1] == q("1"));

  auto t = taylor_coefficients(q("1,0,0,1,0"), mo("1,0,0"), 2);
  CHECK(t[0] == q("1,0"));
  CHECK(t[1].is_zero());
  CHECK(t[2] == q("1"));

  SUBCASE("reassembly and degree bound") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      const int e = 1 + static_cast<int>(rng() % 5);
      const unsigned d = 1 + static_cast<unsigned>(rng() % 5);
      auto hh = random_monic_original<Rational>(rng, e);
      auto f = random_series<Rational>(rng, static_cast<std::size_t>(e) * d + 1, random_rational(rng));
      auto parts = taylor_coefficients(f, hh, d);
      QPoly sum;
      QPoly h_pow = q("1");
      for (const auto& gi : parts) {
        CHECK(gi.degree() < e);
        sum += gi * h_pow;
        h_pow = h_pow * hh.poly();
      }
      CHECK(sum == f);
    }
  }
}

TEST_CASE("exact pipeline: compose, expand, reassemble is the identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_monic_original<Rational>(rng, 2 + static_cast<int>(rng() % 3));
    auto h = random_monic_original<Rational>(rng, 2 + static_cast<int>(rng() % 3));
    auto f = compose(g.poly(), h.poly());
    auto parts = taylor_coefficients(f, h, static_cast<unsigned>(g.degree()));
    QPoly rebuilt;
    for (std::size_t i = parts.size(); i-- > 0;) rebuilt = rebuilt * h.poly() + parts[i];
    CHECK(rebuilt == f);
    for (std::size_t i = 0; i < parts.size(); ++i) CHECK(parts[i] == QPoly::constant(g.coeff(i)));
  }
}

TEST_CASE("monic original validation") {
  CHECK_THROWS_AS(mo("2,1,0"), DomainError);
  CHECK_THROWS_AS(mo("1,1,1"), DomainError);
  CHECK_THROWS_AS(mo("5"), DomainError);
  CHECK_NOTHROW(mo("1,0"));
}

TEST_CASE("float equality uses an absolute tolerance") {
  Polynomial<Real> a{0.0, 1.0, 2.0};
  Polynomial<Real> b{1e-11, 1.0, 2.0 + 1e-11};
  CHECK(approx_equal(a, b));
  CHECK_FALSE(approx_equal(a, b, 1e-12));
  CHECK_FALSE(a == b);
  // Tiny trailing coefficients are kept structurally.
  Polynomial<Real> tiny{1.0, 1e-14};
  CHECK(tiny.degree() == 1);
}
