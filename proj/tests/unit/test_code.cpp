#include <doctest.h>

#include "gpcode/code.hpp"
#include "gpcode/error.hpp"

using namespace gpcode;

TEST_CASE("parameters") {
  const auto c = code_params(5, 6, 434);
  CHECK(c.n == 36);
  CHECK(c.bridge_valid);
  CHECK_FALSE(code_params(5, 2, 8).bridge_valid);  // 8 does not divide (25-1)/4
  CHECK_THROWS_AS(code_params(5, 2, 5), Error);
}

TEST_CASE("simplex code C(1, 2^3) is one-weight") {
  const Field f = Field::build(2, 3);
  const auto d = brute_weight_distribution(f, 1);
  CHECK(d.table == std::map<uint64_t, BigInt>{{0, 1}, {4, 7}});
  CHECK(d.min_distance() == 4);
  CHECK(d.length == 7);
}

TEST_CASE("codewords") {
  const Field f = Field::build(3, 2);
  const auto w = codeword(f, 2, f.one());
  CHECK(w.size() == 4);
  CHECK(codeword_weight(f, 2, f.one()) == static_cast<uint64_t>(std::count_if(w.begin(), w.end(), [](uint32_t v) { return v != 0; })));
  CHECK(codeword_weight(f, 2, f.zero()) == 0);
}

TEST_CASE("orbit mode and worker count give the same table") {
  const Field f = Field::build(3, 6);
  const auto full = brute_weight_distribution(f, 14);
  CHECK(brute_weight_distribution(f, 14, {uint64_t{1} << 31, 1, true}).same_table(full));
  CHECK(brute_weight_distribution(f, 14, {uint64_t{1} << 31, 3, false}).same_table(full));
  CHECK(full.total() == 729);
}

TEST_CASE("budget") {
  const Field f = Field::build(2, 12);
  try {
    brute_weight_distribution(f, 1, {1000, 1, false});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("weights <-> eigenvalues") {
  const Field f = Field::build(5, 2);
  const auto cp = code_params(5, 2, 2);
  const auto s = spectrum(graph_spec(5, 2, 2), f);
  const auto d = weights_from_spectrum(s, cp);
  CHECK(d.table == std::map<uint64_t, BigInt>{{0, 1}, {8, 12}, {12, 12}});
  CHECK(d.same_table(brute_weight_distribution(f, 2)));
  CHECK(eigenvalues_from_weights(d, cp) == s);
  try {
    weights_from_spectrum(s, code_params(5, 2, 8));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BridgeHypothesisFailed);
  }
}
