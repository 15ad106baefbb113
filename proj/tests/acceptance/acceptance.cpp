// Acceptance criteria 1-10: one PASS/FAIL line each, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "gpcode/cli.hpp"
#include "gpcode/closed_forms.hpp"
#include "gpcode/verify.hpp"

using namespace gpcode;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::map<uint64_t, BigInt> parse_table(std::istream& in) {
  std::map<uint64_t, BigInt> t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("-+-") != std::string::npos) continue;
    const auto bar = line.find(" | ");
    if (bar == std::string::npos) break;
    std::string w = line.substr(0, bar), a = line.substr(bar + 3);
    w.erase(0, w.find_first_not_of(' '));
    a.erase(0, a.find_first_not_of(' '));
    if (w == "weight") continue;
    t[std::stoull(w)] = BigInt(a);
  }
  return t;
}

std::string describe(const std::map<uint64_t, BigInt>& t) {
  std::string s;
  for (const auto& [w, a] : t) s += (s.empty() ? "" : " ") + std::to_string(w) + ":" + a.str();
  return s;
}

Outcome from_suite(const SuiteReport& r) {
  std::string detail = r.suite + ": " + std::to_string(r.checks.size()) + " checks, " + std::to_string(r.cases) + " cases";
  for (const auto& c : r.checks)
    if (!c.passed) detail += "; FAILED " + c.name + " (" + c.detail + ")";
  return {r.passed() && !r.checks.empty(), detail};
}

Outcome criterion1() {
  std::ostringstream out, err;
  const int code = cli::run({"code", "weights", "-p", "2", "-m", "21", "-k", "42799", "--method", "both"}, out, err);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);  // "brute:"
  const auto brute = parse_table(in);
  std::getline(in, header);  // route name
  const auto composed = parse_table(in);
  const std::map<uint64_t, BigInt> expected{{0, 1},      {4, 49},      {8, 1029},    {12, 12005},
                                            {16, 84035}, {20, 352947}, {24, 823543}, {28, 823543}};
  const bool match = out.str().find("\nMATCH\n") != std::string::npos;
  return {code == 0 && match && brute == expected && composed == expected,
          "exit " + std::to_string(code) + ", brute " + describe(brute) + ", " + header + " " + describe(composed)};
}

Outcome criterion2() {
  const Field f = Field::build(5, 6);
  const auto brute = brute_weight_distribution(f, 434);
  const std::map<uint64_t, BigInt> expected{{0, 1},     {8, 36},    {12, 36},   {16, 432}, {20, 864},
                                            {24, 2160}, {28, 5184}, {32, 5184}, {36, 1728}};
  const auto tower = semiprimitive_tower(5, 2, 2, 3);
  // Dimension 6: q codewords and only gamma = 0 maps to the zero word.
  const bool params = brute.length == 36 && brute.total() == 15625 && brute.frequency(0) == 1 && brute.min_distance() == 8;
  return {params && brute.table == expected && tower.same_table(brute),
          "[" + std::to_string(brute.length) + ", 6, " + std::to_string(brute.min_distance()) + "] " + describe(brute.table)};
}

Outcome criterion3() {
  const Field f = Field::build(7, 6);
  const auto brute = brute_weight_distribution(f, 516);
  const auto tower = cubic_tower(7, 1, 2);
  std::size_t doubled = 0;
  for (const auto& t : tower.indexed) doubled += t.frequency == 2 * 114 * 114;
  return {tower.indexed.size() == 10 && doubled == 3 && tower.same_table(brute) && brute.table.size() == 10,
          std::to_string(tower.indexed.size()) + " rows, " + std::to_string(doubled) + " rows with A = 2*114^2; " +
              describe(brute.table)};
}

Outcome criterion4() {
  std::string detail;
  bool ok = true;
  for (uint32_t p : {5u, 11u}) {
    const BigInt c = BigInt(p * p - 1) / 2, pm1 = p - 1;
    const std::map<std::pair<unsigned, unsigned>, std::pair<BigInt, BigInt>> rows{
        {{0, 0}, {0, 1}},
        {{1, 0}, {pm1 * pm1 / 2, 3 * c}},
        {{2, 0}, {pm1 * pm1, 3 * c * c}},
        {{3, 0}, {3 * pm1 * pm1 / 2, c * c * c}},
        {{0, 1}, {c, 3 * c}},
        {{0, 2}, {2 * c, 3 * c * c}},
        {{0, 3}, {3 * c, c * c * c}},
        {{1, 1}, {BigInt(p) * pm1, 6 * c * c}},
        {{2, 1}, {pm1 * (3 * p - 1) / 2, 3 * c * c * c}},
        {{1, 2}, {pm1 * (3 * p + 1) / 2, 3 * c * c * c}}};
    const auto tower = semiprimitive_tower(p, 2, 2, 3);
    std::size_t matched = 0;
    for (const auto& t : tower.indexed) {
      const auto it = rows.find({t.exponents.at(0), t.exponents.at(1)});
      matched += it != rows.end() && it->second.first == t.weight && it->second.second == t.frequency;
    }
    ok = ok && p % 3 == 2 && matched == rows.size() && tower.indexed.size() == rows.size();
    detail += "p = " + std::to_string(p) + ": " + std::to_string(matched) + "/10 rows; ";
  }
  return {ok, detail};
}

Outcome criterion5() {
  const Field f = Field::build(5, 6);
  const auto s = gaussian_periods(f, 434);
  const auto rep = check_relations(s, &f);
  std::map<int64_t, BigInt> mult;
  std::size_t six_tuples = 0;
  for (const auto& c : s.classes) mult[*c.value.as_integer()] += c.cosets * 36;
  for (const auto& c : reduce_periods_semiprimitive(5, 2, 3, 2).classes)
    if (c.value.as_integer() == 6) six_tuples = c.tuples.size();
  const std::map<int64_t, BigInt> expected{{26, 36},   {21, 36},   {16, 432}, {11, 864},
                                           {6, 2160},  {1, 5184},  {-4, 5184}, {-9, 1728}};
  bool shifted = rep.shifted_sums.size() == 434 && rep.shifted_sums[0] == 15625 - 36;
  for (std::size_t j = 1; j < rep.shifted_sums.size(); ++j) shifted = shifted && rep.shifted_sums[j] == -36;
  std::string detail = "eta values with n * cosets:";
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) detail += " " + std::to_string(it->first) + ":" + it->second.str();
  return {mult == expected && six_tuples == 2 && rep.all_passed() && rep.sum == BigInt(-1) && shifted,
          detail + "; sum " + (rep.sum ? rep.sum->str() : "-") + ", 6 from " + std::to_string(six_tuples) + " tuples"};
}

}  // namespace

int main() {
  VerifyOptions o;
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0: none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "C(42799, 2^21) weights via CLI, brute = composed", 120, criterion1},
      {2, "C(434, 5^6) = [36, 6, 8], brute = semiprimitive tower", 1, criterion2},
      {3, "C(516, 7^6) cubic tower = brute, ten rows", 30, criterion3},
      {4, "semiprimitive tower rows at p = 5, 11", 0, criterion4},
      {5, "Gaussian periods (434, 5^6) and relations", 1, criterion5},
      {6, "bridge suite", 300, [&] { return from_suite(verify_bridge(o)); }},
      {7, "oracle spectrum suite", 0, [&] { return from_suite(verify_spectrum(o)); }},
      {8, "composition suite", 0, [&] { return from_suite(verify_composition(o)); }},
      {9, "curve suite", 0, [&] { return from_suite(verify_curves(o)); }},
      {10, "relation suite", 0, [&] { return from_suite(verify_relations(o)); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs <= c.limit_s;
    const bool passed = r.passed && in_time;
    all = all && passed;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs << " s";
    if (c.limit_s > 0) time << " (limit " << c.limit_s << " s)";
    std::cout << "criterion " << c.id << ": " << (passed ? "PASS" : "FAIL") << " - " << c.name << " [" << time.str()
              << "] " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
