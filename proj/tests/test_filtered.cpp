#include <doctest.h>

#include "qflat/barcode.hpp"
#include "qflat/filtered_complex.hpp"
#include "qflat/spectral.hpp"

using namespace qflat;

namespace {

// Two degree-1 chords at level 0 killed jointly by a degree-0 chord at 0.7.
FilteredComplex fiber_example() {
  FilteredComplex cx;
  cx.generators = {{"x1", 0, 0.7}, {"x2", 1, 0.0}, {"x3", 1, 0.0}};
  cx.differential["x1"] = {"x2", "x3"};
  return cx;
}

}  // namespace

TEST_CASE("validate accepts the fiber example") {
  CHECK(validate(fiber_example()).ok());
}

TEST_CASE("validate flags each defect kind") {
  FilteredComplex cx = fiber_example();
  cx.generators.push_back({"x1", 0, 1.0});
  CHECK(validate(cx).defect == ComplexDefect::duplicate_id);

  cx = fiber_example();
  cx.differential["x2"] = {"nope"};
  CHECK(validate(cx).defect == ComplexDefect::dangling_id);

  cx = fiber_example();
  cx.differential["x2"] = {"x3"};  // degree 1 -> degree 1
  CHECK(validate(cx).defect == ComplexDefect::degree_mismatch);

  cx = fiber_example();
  cx.generators[0].level = -0.1;  // d now raises the level
  CHECK(validate(cx).defect == ComplexDefect::level_increase);

  FilteredComplex sq;
  sq.generators = {{"a", 0, 3.0}, {"b", 1, 2.0}, {"c", 2, 1.0}};
  sq.differential["a"] = {"b"};
  sq.differential["b"] = {"c"};
  CHECK(validate(sq).defect == ComplexDefect::d_squared_nonzero);

  CHECK_THROWS_AS(require_valid(sq), std::invalid_argument);
}

TEST_CASE("level tolerance admits 1e-12 slack only") {
  FilteredComplex cx;
  cx.generators = {{"a", 0, 1.0}, {"b", 1, 1.0 + 5e-13}};
  cx.differential["a"] = {"b"};
  CHECK(validate(cx).ok());
  cx.generators[1].level = 1.0 + 1e-10;
  CHECK(validate(cx).defect == ComplexDefect::level_increase);
}

TEST_CASE("barcode of the fiber example") {
  Barcode bc = barcode(fiber_example());
  REQUIRE(bc.bars.size() == 2);
  int finite = 0, infinite = 0;
  for (const auto& b : bc.bars) {
    CHECK(b.degree == 1);
    CHECK(b.low == 0.0);
    if (b.infinite()) ++infinite;
    else {
      ++finite;
      CHECK(b.high == doctest::Approx(0.7).epsilon(1e-12));
      CHECK(b.destroyer_id == "x1");
    }
  }
  CHECK(finite == 1);
  CHECK(infinite == 1);
  CHECK(boundary_depth(fiber_example()) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("two independent arrows give bars 4 and 1") {
  FilteredComplex cx;
  cx.generators = {{"a", 0, 5.0}, {"x", 1, 1.0}, {"b", 0, 3.0}, {"y", 1, 2.0}};
  cx.differential["a"] = {"x"};
  cx.differential["b"] = {"y"};
  Barcode bc = barcode(cx);
  std::vector<double> lengths;
  for (const auto& b : bc.bars)
    if (!b.infinite()) lengths.push_back(b.length());
  std::sort(lengths.begin(), lengths.end());
  REQUIRE(lengths.size() == 2);
  CHECK(lengths[0] == doctest::Approx(1.0));
  CHECK(lengths[1] == doctest::Approx(4.0));
  CHECK(boundary_depth(cx) == doctest::Approx(4.0));
  CHECK(boundary_depth_bruteforce(cx) == doctest::Approx(4.0));
}

TEST_CASE("boundary depth of a zero-image differential is 0") {
  FilteredComplex cx;
  cx.generators = {{"a", 0, 5.0}, {"b", 2, 1.0}};
  CHECK(boundary_depth(cx) == 0.0);
  CHECK(boundary_depth_bruteforce(cx) == 0.0);
}

TEST_CASE("bruteforce guard at 20 generators") {
  FilteredComplex cx;
  for (int i = 0; i < 21; ++i) cx.generators.push_back({"g" + std::to_string(i), 0, 0.0});
  CHECK_THROWS_AS(boundary_depth_bruteforce(cx), std::invalid_argument);
}

TEST_CASE("spectral level picks the lowest coset representative") {
  FilteredComplex cx;
  cx.generators = {{"u", 1, 3.0}, {"v", 1, 2.0}, {"w", 0, 3.0}};
  cx.differential["w"] = {"u", "v"};
  CHECK(spectral_level(cx, {{"u"}}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_level(cx, {{"v"}}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectral level error kinds") {
  FilteredComplex cx;
  cx.generators = {{"a", 0, 3.0}, {"b", 1, 2.0}, {"c", 1, 1.0}};
  cx.differential["a"] = {"b"};
  CHECK_THROWS_AS(spectral_level(cx, {{"a"}}), SpectralError);   // d(a) != 0
  CHECK_THROWS_AS(spectral_level(cx, {{"b"}}), SpectralError);   // coboundary
  CHECK_THROWS_AS(spectral_level(cx, {{"zz"}}), SpectralError);  // unknown id
  CHECK_THROWS_AS(spectral_level(cx, {{"b", "a"}}), SpectralError);  // mixed degree
  CHECK(spectral_level(cx, {{"c"}}) == doctest::Approx(1.0));
}

TEST_CASE("shift_levels and JSON round trip") {
  FilteredComplex cx = fiber_example();
  FilteredComplex sh = shift_levels(cx, 2.5);
  CHECK(sh.generators[0].level == doctest::Approx(3.2));
  CHECK(boundary_depth(sh) == doctest::Approx(0.7));

  json j = complex_to_json(cx);
  FilteredComplex back = complex_from_json(j);
  CHECK(complex_to_json(back) == j);
  CHECK(boundary_depth(back) == doctest::Approx(0.7));
}

TEST_CASE("barcode JSON round trip keeps infinite bars") {
  Barcode bc = barcode(fiber_example());
  json j = barcode_to_json(bc);
  Barcode back = barcode_from_json(j);
  CHECK(barcode_to_json(back) == j);
  REQUIRE(back.bars.size() == 2);
  CHECK((back.bars[0].infinite() || back.bars[1].infinite()));
}
