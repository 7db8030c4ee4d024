#include "doctest.h"
#include "fixture_check.hpp"

TEST_CASE("fixture expectations") {
  const auto fx = props::load_fixtures();
  CHECK(fx.size() >= 9);
  for (const auto& f : fx) {
    CAPTURE(f.file);
    const auto mismatches = props::check_fixture(f);
    for (const auto& m : mismatches) FAIL_CHECK(m);
    CHECK(mismatches.empty());
  }
}
