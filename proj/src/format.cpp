#include "gpcode/format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gpcode {

using Json = nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < width.size(); ++i) {
      if (i) out << " | ";
      const std::string& cell = i < r.size() ? r[i] : std::string();
      out << std::string(width[i] - cell.size(), ' ') << cell;
    }
    out << '\n';
  };
  line(rows.front());
  for (std::size_t i = 0; i < width.size(); ++i) {
    if (i) out << "-+-";
    out << std::string(width[i], '-');
  }
  out << '\n';
  for (std::size_t i = 1; i < rows.size(); ++i) line(rows[i]);
  return out.str();
}

namespace {

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << '\n';
  }
  return out.str();
}

std::string exponents_string(const std::vector<unsigned>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

Json cyclotomic_json(const Cyclotomic& v) {
  if (auto i = v.as_integer()) return *i;
  Json terms = Json::array();
  for (auto [t, c] : v.terms()) terms.push_back({t, c});
  return Json{{"p", v.p()}, {"terms", terms}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit(const WeightDistribution& d, const CodeParams& params, Format format) {
  std::vector<std::vector<std::string>> rows{{"weight", "frequency"}};
  for (const auto& [w, a] : d.table) rows.push_back({std::to_string(w), a.str()});
  switch (format) {
    case Format::table: return render_columns(rows);
    case Format::csv: return csv(rows);
    case Format::json: {
      Json j;
      j["p"] = params.p;
      j["m"] = params.m;
      j["k"] = params.k;
      j["n"] = params.n;
      j["source"] = std::string(to_string(d.source));
      Json table = Json::array();
      for (const auto& [w, a] : d.table) table.push_back({w, a.str()});
      j["table"] = table;
      Json indexed = Json::array();
      for (const auto& t : d.indexed)
        indexed.push_back({{"exponents", t.exponents}, {"weight", t.weight.str()}, {"frequency", t.frequency.str()}});
      j["indexed"] = indexed;
      return dump(j);
    }
  }
  return "";
}

std::string spectrum_notation(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (i) out += ", ";
    out += "[" + s.entries[i].eigenvalue.to_string() + "]^" + s.entries[i].multiplicity.str();
  }
  return out + "}";
}

std::string emit(const Spectrum& s, const GraphSpec& g, Format format) {
  std::vector<std::vector<std::string>> rows{{"eigenvalue", "multiplicity"}};
  for (const auto& e : s.entries) rows.push_back({e.eigenvalue.to_string(), e.multiplicity.str()});
  switch (format) {
    case Format::table: return render_columns(rows) + "Spec = " + spectrum_notation(s) + "\n";
    case Format::csv: return csv(rows);
    case Format::json: {
      Json j;
      j["p"] = g.p;
      j["m"] = g.m;
      j["q"] = g.q;
      j["k"] = g.k;
      j["n"] = g.n;
      Json entries = Json::array();
      for (const auto& e : s.entries)
        entries.push_back({{"eigenvalue", cyclotomic_json(e.eigenvalue)}, {"multiplicity", e.multiplicity.str()}});
      j["entries"] = entries;
      j["total"] = s.total().str();
      return dump(j);
    }
  }
  return "";
}

std::string emit(const GaussPeriodSet& s, const RelationReport* report, Format format) {
  const BigInt n = s.coset_size();
  std::vector<std::vector<std::string>> rows{{"value", "cosets", "multiplicity", "members"}};
  for (const auto& cls : s.classes) {
    std::string members;
    const std::size_t shown = 8;
    if (!cls.indices.empty()) {
      for (std::size_t i = 0; i < cls.indices.size() && i < shown; ++i)
        members += (i ? " " : "") + std::to_string(cls.indices[i]);
      if (cls.indices.size() > shown) members += " ...";
    } else {
      for (std::size_t i = 0; i < cls.tuples.size(); ++i) members += (i ? " " : "") + exponents_string(cls.tuples[i]);
    }
    rows.push_back({cls.value.to_string(), cls.cosets.str(), BigInt(cls.cosets * n).str(), members});
  }
  switch (format) {
    case Format::table: {
      std::ostringstream out;
      out << "N = " << s.N << ", q = " << s.q << ", coset size n = " << n
          << (s.is_integral ? ", integral" : ", not integral") << "\n";
      out << render_columns(rows);
      if (report)
        for (const auto& c : report->checks)
          out << c.name << ": " << (!c.applicable ? "n/a" : c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
      return out.str();
    }
    case Format::csv: return csv(rows);
    case Format::json: {
      Json j;
      j["N"] = s.N.str();
      j["q"] = s.q.str();
      j["is_integral"] = s.is_integral;
      if (s.indexed()) {
        if (s.is_integral) {
          j["values"] = s.values;
        } else {
          Json raw = Json::array();
          for (const auto& c : s.raw) raw.push_back(c.nonzero);
          j["raw"] = raw;
        }
      }
      Json classes = Json::array();
      for (const auto& cls : s.classes) {
        Json c{{"value", cyclotomic_json(cls.value)}, {"cosets", cls.cosets.str()}};
        if (!cls.indices.empty()) c["indices"] = cls.indices;
        if (!cls.tuples.empty()) c["tuples"] = cls.tuples;
        classes.push_back(c);
      }
      j["multiplicities"] = classes;
      if (report) {
        Json rel;
        for (const auto& c : report->checks)
          rel[c.name] = {{"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}};
        j["relations"] = rel;
      }
      return dump(j);
    }
  }
  return "";
}

std::string emit(const GraphSpec& g, Format format) {
  std::vector<std::vector<std::string>> rows{{"field", "value"},
                                             {"p", std::to_string(g.p)},
                                             {"m", std::to_string(g.m)},
                                             {"q", std::to_string(g.q)},
                                             {"k_input", std::to_string(g.k_input)},
                                             {"k", std::to_string(g.k)},
                                             {"n", std::to_string(g.n)},
                                             {"undirected", g.undirected ? "true" : "false"},
                                             {"connected", g.connected ? "true" : "false"}};
  switch (format) {
    case Format::table: return render_columns(rows);
    case Format::csv: return csv(rows);
    case Format::json:
      return dump(Json{{"p", g.p},
                       {"m", g.m},
                       {"q", g.q},
                       {"k_input", g.k_input},
                       {"k", g.k},
                       {"n", g.n},
                       {"undirected", g.undirected},
                       {"connected", g.connected}});
  }
  return "";
}

std::string emit(const std::vector<CurveCount>& counts, const Field& f, Format format) {
  std::vector<std::vector<std::string>> rows{
      {"beta_dlog", "count_brute", "count_derived", "count_printed_62", "agree_brute", "agree_printed"}};
  for (const auto& c : counts) {
    const std::string dl = c.beta.is_zero() ? "zero" : std::to_string(f.log(c.beta));
    const std::string brute = c.count_brute ? c.count_brute->str() : "";
    const std::string alternative = c.count_alternative ? c.count_alternative->str() : "";
    const std::string agree_brute = c.count_brute ? (*c.count_brute == c.count_weight_formula ? "true" : "false") : "";
    const std::string agree_printed =
        c.count_alternative ? (*c.count_alternative == c.count_weight_formula ? "true" : "false") : "";
    rows.push_back({dl, brute, c.count_weight_formula.str(), alternative, agree_brute, agree_printed});
  }
  switch (format) {
    case Format::table: return render_columns(rows);
    case Format::csv: return csv(rows);
    case Format::json: {
      Json arr = Json::array();
      for (std::size_t i = 1; i < rows.size(); ++i) {
        Json j;
        for (std::size_t c = 0; c < rows[0].size(); ++c) j[rows[0][c]] = rows[i][c];
        arr.push_back(j);
      }
      return dump(arr);
    }
  }
  return "";
}

std::string diff_tables(const WeightDistribution& left, std::string_view left_name, const WeightDistribution& right,
                        std::string_view right_name) {
  std::vector<uint64_t> weights;
  for (const auto& [w, a] : left.table) weights.push_back(w);
  for (const auto& [w, a] : right.table) weights.push_back(w);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  std::vector<std::vector<std::string>> rows{{"", "weight", std::string(left_name), std::string(right_name)}};
  for (uint64_t w : weights) {
    const BigInt a = left.frequency(w), b = right.frequency(w);
    rows.push_back({a == b ? " " : "*", std::to_string(w), a.str(), b.str()});
  }
  return render_columns(rows);
}

}  // namespace gpcode
