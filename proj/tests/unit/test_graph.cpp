#include <doctest.h>

#include "gpcode/error.hpp"
#include "gpcode/graph.hpp"

using namespace gpcode;

namespace {
Spectrum ints(std::vector<std::pair<int64_t, int64_t>> v, uint32_t p) {
  std::vector<SpectrumEntry> e;
  for (auto [x, m] : v) e.push_back({Cyclotomic::integer(p, x), m});
  return make_spectrum(e);
}
}  // namespace

TEST_CASE("graph parameters") {
  const auto g = graph_spec(5, 6, 434);
  CHECK(g.k == 434);
  CHECK(g.n == 36);
  CHECK(g.undirected);
  CHECK(g.connected);
  const auto h = graph_spec(7, 1, 2);  // (7-1)/2 odd: -1 is not a square
  CHECK_FALSE(h.undirected);
  const auto gcd = graph_spec(5, 2, 10);
  CHECK(gcd.k == 2);
  CHECK_FALSE(graph_spec(3, 4, 10).connected);  // n = 8 divides 3^2 - 1
  CHECK_FALSE(is_hamming(graph_spec(3, 4, 10)));  // although 8 = 4 * (3 - 1)
}

TEST_CASE("Paley graph P(9) and P(25)") {
  const Field f9 = Field::build(3, 2);
  CHECK(spectrum(graph_spec(3, 2, 2), f9) == ints({{4, 1}, {1, 4}, {-2, 4}}, 3));
  const Field f25 = Field::build(5, 2);
  CHECK(spectrum(graph_spec(5, 2, 2), f25) == ints({{12, 1}, {2, 12}, {-3, 12}}, 5));
  CHECK(brute_spectrum_oracle(graph_spec(5, 2, 2), f25) == spectrum(graph_spec(5, 2, 2), f25));
}

TEST_CASE("non-integral spectrum matches the oracle") {
  const Field f = Field::build(13, 1);
  const auto g = graph_spec(13, 1, 2);
  const auto s = spectrum(g, f);
  CHECK(s == brute_spectrum_oracle(g, f));
  CHECK(s.total() == 13);
  CHECK_FALSE(s.entries.back().eigenvalue.is_integer());
}

TEST_CASE("directed graphs are refused") {
  const Field f = Field::build(7, 1);
  try {
    spectrum(graph_spec(7, 1, 2), f);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DirectedGraph);
  }
}

TEST_CASE("decompositions") {
  const auto w = find_decomposition(graph_spec(5, 6, 434));
  REQUIRE(w);
  CHECK(*w == DecompositionWitness{2, 3, 12, 2});
  CHECK(find_decompositions(graph_spec(2, 6, 1), true).empty());  // 63 = 3 * 21, 21 does not divide 3
  const auto all = find_decompositions(graph_spec(2, 6, 7), true);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == DecompositionWitness{2, 3, 3, 1});
  const auto h = is_hamming(graph_spec(2, 21, 42799));
  REQUIRE(h);
  CHECK(*h == 7);
}

TEST_CASE("semiprimitive pairs") {
  const auto a = is_semiprimitive_pair(5, 6, 2);
  CHECK(a.semiprimitive);
  CHECK(a.t == 1);
  CHECK_FALSE(is_semiprimitive_pair(5, 2, 6).semiprimitive);  // k = p^{m/2} + 1 excluded
  CHECK(semiprimitive_divisibility(5, 2, 6).semiprimitive);
  CHECK_FALSE(is_semiprimitive_pair(7, 3, 3).semiprimitive);
}

TEST_CASE("complete product and composition of spectra") {
  CHECK(check_complete_product(graph_spec(3, 2, 2)));
  CHECK(complete_product_spectrum(3, 3) == ints({{4, 1}, {1, 4}, {-2, 4}}, 3));
  const Field f = Field::build(2, 2);
  const Spectrum k4 = spectrum(graph_spec(2, 2, 1), f);
  const Field f64 = Field::build(2, 6);
  CHECK(compose_spectrum(k4, 3) == spectrum(graph_spec(2, 6, 7), f64));
}
