#include <cmath>
#include <numbers>

#include "doctest.h"
#include "logenergy/closedform.hpp"
#include "logenergy/errors.hpp"
#include "oracles.hpp"

using namespace logenergy;

namespace {

constexpr double kGamma = 0.5772156649015328606065120900824024;

double quad_lambda(const EnergyBreakdown& e) { return std::get<QuadraticPenalty>(e.penalty).lambda; }

}  // namespace

TEST_CASE("GUE closed form examples") {
  auto e1 = gue_energy(1);
  CHECK(e1.raw_energy == doctest::Approx(kGamma / 2).epsilon(1e-15));
  CHECK(e1.penalized == doctest::Approx(0.5 + kGamma / 2).epsilon(1e-15));
  CHECK(e1.moment == 1.0);
  CHECK(quad_lambda(e1) == 1.0);
  auto e2 = gue_energy(2);
  CHECK(e2.penalized == doctest::Approx(0.75 + (std::log(2.0) + kGamma - 1.25) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(gue_energy(0), DomainError);
}

TEST_CASE("breakdown invariants") {
  for (unsigned n : {1u, 2u, 3u, 7u, 50u, 1000u}) {
    auto g = gue_energy(n);
    CHECK(std::abs(g.penalized - (g.moment / (2 * quad_lambda(g)) + g.raw_energy)) < 1e-15);
    auto c = ginibre_energy(n);
    CHECK(std::abs(c.penalized - (c.moment / (2 * quad_lambda(c)) + c.raw_energy)) < 1e-15);
    CHECK(quad_lambda(c) == 0.5);
    auto l = lue_energy(n);
    CHECK(std::holds_alternative<LinearPenalty>(l.penalty));
    CHECK(l.penalized == l.moment + l.raw_energy);
    CHECK(l.raw_energy == 2 * g.raw_energy);
    CHECK(l.penalized == 2 * g.penalized);
  }
}

TEST_CASE("first difference of the GUE raw energy") {
  for (unsigned n = 1; n <= 1000; ++n) {
    double lhs = 2 * (gue_energy(n + 1).raw_energy - gue_energy(n).raw_energy);
    double rhs = std::log1p(1.0 / n) - (1.0 + 2.0 * n) / (2.0 * n * (n + 1.0));
    CHECK(std::abs(lhs - rhs) < 1e-14);
  }
}

TEST_CASE("Ginibre tail") {
  auto t1 = ginibre_tail(1, 1e-12);
  CHECK(std::abs(t1.value - (1 - std::log(2.0)) / 2) < 1e-12);
  CHECK(t1.error_bound <= 1e-12);
  CHECK(std::abs(oracle::b_partial(1, 1000000) - (1 - std::log(2.0)) / 2) < 1e-10);
  for (unsigned n : {2u, 5u, 40u}) {
    CHECK(std::abs(ginibre_tail(n).value - oracle::b_partial(n, 1000000)) < 1e-10);
  }
  CHECK_THROWS_AS(ginibre_tail(1, 0.0), DomainError);
  CHECK_THROWS_AS(ginibre_tail(1, -1.0), DomainError);
  CHECK_THROWS_AS(ginibre_tail(0), DomainError);

  auto seq = ginibre_tail_sequence(501);
  REQUIRE(seq.size() == 501);
  for (unsigned n = 1; n <= 500; ++n) {
    CHECK(seq[n - 1].value > seq[n].value);
    CHECK(seq[n].value > 0);
  }
  for (unsigned n : {1u, 17u, 100u, 333u, 501u}) {
    CHECK(std::abs(seq[n - 1].value - ginibre_tail(n).value) < 1e-13);
  }
  // convexity from the proof of the theorem
  for (unsigned n = 2; n <= 500; ++n) {
    CHECK((seq[n].value - seq[n - 1].value) - (seq[n - 1].value - seq[n - 2].value) > 0);
  }
}

TEST_CASE("Ginibre closed form") {
  auto e1 = ginibre_energy(1);
  CHECK(e1.penalized == doctest::Approx(1 + kGamma / 2 - std::log(2.0) / 2).epsilon(1e-13));
  CHECK(e1.raw_energy == doctest::Approx((kGamma - std::log(2.0)) / 2).epsilon(1e-12));
  CHECK(ginibre_energy(2).moment == 0.75);
  for (unsigned n = 1; n <= 100; ++n) {
    CHECK(std::abs(ginibre_energy(n).penalized - gue_energy(n).penalized - ginibre_tail(n).value) < 1e-15);
  }
  CHECK_THROWS_AS(ginibre_energy(0), DomainError);
  CHECK_THROWS_AS(lue_energy(0), DomainError);
}

TEST_CASE("LUE closed form") {
  CHECK(lue_energy(1).raw_energy == doctest::Approx(kGamma).epsilon(1e-15));
  CHECK(lue_energy(1).penalized == doctest::Approx(1 + kGamma).epsilon(1e-15));
  CHECK(lue_energy(9).moment == 1.0);
}

TEST_CASE("limits") {
  auto lim = limit_energies();
  CHECK(lim.semicircle == 0.75);
  CHECK(lim.circular == 0.75);
  CHECK(lim.marchenko_pastur == 1.5);
  CHECK(std::abs(gue_energy(1000000).penalized - 0.75) < 1e-6);
  CHECK(std::abs(ginibre_energy(1000000).penalized - 0.75) < 1e-6);
  CHECK(std::abs(lue_energy(1000000).penalized - 1.5) < 1e-6);
  CHECK(gue_energy(1000000).penalized > 0.75);
}

TEST_CASE("monotonicity and convexity") {
  for (auto which : {Ensemble::GUE, Ensemble::Ginibre, Ensemble::LUE}) {
    auto rep = monotonicity_report(500, which);
    CHECK(rep.rows.size() == 500);
    CHECK(rep.decrease_violations == 0);
    CHECK(rep.convexity_violations == 0);
  }
  auto g = monotonicity_report(200, Ensemble::GUE);
  auto l = monotonicity_report(200, Ensemble::LUE);
  for (std::size_t i = 0; i + 1 < g.rows.size(); ++i) {
    CHECK(l.rows[i].first_difference == doctest::Approx(2 * g.rows[i].first_difference).epsilon(1e-12));
  }
  CHECK_THROWS_AS(monotonicity_report(2, Ensemble::GUE), DomainError);
}
