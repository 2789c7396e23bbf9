#include <doctest.h>

#include "pwc/semiconj.hpp"
#include "support/oracles.hpp"

using namespace pwc;

namespace {

Scalar q(long p, long d) { return Scalar::rational(p, d); }

DeltaFamily family_a() {
  return validate_family(PiecewiseAffineMap({0, q(2, 3), 1}, q(1, 2), {q(2, 3), q(-1, 3)}), 2);
}

}  // namespace

TEST_SUITE("semiconj") {
  TEST_CASE("refuses an uncertified map") {
    const auto g = rotate_compose(family_a(), q(1, 4));
    try {
      estimate_semiconjugacy(g);
      FAIL("expected refusal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::refused_uncertified);
      CHECK(std::string(e.what()).find("gap-hits-discontinuity") != std::string::npos);
    }
  }

  TEST_CASE("rejects too few samples") {
    const auto g = rotate_compose(family_a(), testing::golden_delta_star(200));
    SemiconjugacyOptions opt;
    opt.samples = 50;
    opt.k_iter = 10;
    CHECK_THROWS_AS(estimate_semiconjugacy(g, opt), Error);
  }

  TEST_CASE("golden parameter: h is a distribution function and conjugates") {
    const auto g = rotate_compose(family_a(), testing::golden_delta_star(200));
    SemiconjugacyOptions opt;
    opt.samples = 20000;
    opt.k_iter = 40;
    opt.grid = 1024;
    const auto s = estimate_semiconjugacy(g, opt);
    CHECK(s.certificate_depth == 40);
    CHECK(s.orbit_length >= opt.samples);
    CHECK(s.orbit_length <= opt.samples * 3 / 2);
    REQUIRE(s.h_grid.size() == opt.grid + 1);
    CHECK(s.h_grid.front() == 0);
    CHECK(s.h_grid.back() == 1);
    CHECK(s.monotone);
    for (std::size_t i = 1; i < s.h_grid.size(); ++i) CHECK(s.h_grid[i - 1] <= s.h_grid[i]);
    REQUIRE(s.yhat.size() == 3);
    CHECK(s.yhat.front() == 0);
    CHECK(s.yhat.back() == 1);
    CHECK(s.residual_ok());
    CHECK(s.tiling_error <= s.tolerance);
    REQUIRE(s.iet.has_value());
    // The fitted exchange is a rotation: image order reversed.
    CHECK(s.iet->permutation() == std::vector<int>{2, 1});
    CHECK(s.transfer_ok());
    CHECK(s.ok());
    // h is flat on the gap itself.
    CHECK(s.gap_jump <= s.tolerance);
  }
}
