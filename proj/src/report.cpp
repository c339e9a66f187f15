#include "zsalg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "zsalg/algebra.hpp"
#include "zsalg/errors.hpp"
#include "zsalg/jennings.hpp"

namespace zsalg {
namespace {

using ojson = nlohmann::ordered_json;

std::vector<ChainLevel> chain_levels(const JenningsStructure& js) {
  std::vector<ChainLevel> out;
  for (std::size_t i = 1; i <= js.t; ++i) {
    ChainLevel level{i, js.D(i).order(), js.rank(i), {}};
    for (const auto& g : js.gens)
      if (g.level == i) level.gens.push_back(js.group->label(g.element));
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace

Report build_report(const ParsedGroup& g, const ReportOptions& opt) {
  Report r;
  r.spec = g.spec;
  r.order = g.group->order();
  r.p = g.p;
  JenningsStructure js = dimension_subgroups_group_theoretic(g.group, g.p);
  r.powerful = is_powerful(*g.group, g.p);
  r.loewy_length = js.loewy_length;
  r.chain = chain_levels(js);
  if (!opt.table) return r;

  AlgebraPtr a = group_algebra(g.group, g.p);
  const std::size_t ll = js.loewy_length;
  if (opt.weights) {
    JenningsBasis basis(js, a);
    const Subspace z = class_sum_span(*a);
    r.dim_center = z.dim();
    for (std::size_t n = 0; n <= ll; ++n) {
      TableRow row{n, 0, 0, 0};
      for (const auto& m : basis.monomials()) {
        if (m.weight >= n) ++row.dim_rad;
        if (m.coweight < n) ++row.dim_soc;
      }
      row.dim_zs = subspace_intersect(z, soc_span_by_weight(basis, n)).dim();
      r.table.push_back(row);
    }
  } else {
    r.dim_center = a->center().dim();
    for (std::size_t n = 0; n <= ll; ++n)
      r.table.push_back({n, a->radical_power(n).dim(), a->socle(n).dim(), zs(*a, n).dim()});
  }
  return r;
}

std::string report_to_json(const Report& r, bool include_timing) {
  ojson j;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["p"] = r.p;
  j["powerful"] = r.powerful;
  j["loewy_length"] = r.loewy_length;
  j["chain"] = ojson::array();
  for (const auto& c : r.chain)
    j["chain"].push_back(ojson{{"i", c.i}, {"order", c.order}, {"rank", c.rank}, {"gens", c.gens}});
  if (!r.table.empty()) {
    j["table"] = ojson::array();
    for (const auto& t : r.table)
      j["table"].push_back(ojson{{"n", t.n}, {"dim_rad", t.dim_rad}, {"dim_soc", t.dim_soc},
                                 {"dim_zs", t.dim_zs}});
  }
  if (r.dim_center) j["dim_center"] = *r.dim_center;
  if (!r.checks.empty()) {
    j["checks"] = ojson::array();
    for (const auto& c : r.checks)
      j["checks"].push_back(
          ojson{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  if (include_timing && r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Report r;
    r.spec = j.at("spec").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.p = j.at("p").get<std::uint32_t>();
    r.powerful = j.at("powerful").get<bool>();
    r.loewy_length = j.at("loewy_length").get<std::size_t>();
    for (const auto& c : j.at("chain"))
      r.chain.push_back({c.at("i").get<std::size_t>(), c.at("order").get<std::size_t>(),
                         c.at("rank").get<std::size_t>(),
                         c.at("gens").get<std::vector<std::string>>()});
    if (j.contains("table"))
      for (const auto& t : j.at("table"))
        r.table.push_back({t.at("n").get<std::size_t>(), t.at("dim_rad").get<std::size_t>(),
                           t.at("dim_soc").get<std::size_t>(), t.at("dim_zs").get<std::size_t>()});
    if (j.contains("dim_center")) r.dim_center = j.at("dim_center").get<std::size_t>();
    if (j.contains("checks"))
      for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(),
                            check_status_from_string(c.at("status").get<std::string>()),
                            c.at("details").get<std::string>()});
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "n,dim_rad,dim_soc,dim_zs,dim_center\n";
  for (const auto& t : r.table)
    os << t.n << ',' << t.dim_rad << ',' << t.dim_soc << ',' << t.dim_zs << ','
       << r.dim_center.value_or(0) << '\n';
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "group:        " << r.spec << '\n'
     << "order:        " << r.order << '\n'
     << "p:            " << r.p << '\n'
     << "powerful:     " << (r.powerful ? "yes" : "no") << '\n'
     << "loewy length: " << r.loewy_length << '\n'
     << "chain:       ";
  for (std::size_t k = 0; k < r.chain.size(); ++k)
    os << (k ? " > " : " ") << r.chain[k].order;
  os << '\n';
  for (const auto& c : r.chain) {
    os << "  D_" << c.i << "  order " << c.order << "  rank " << c.rank;
    if (!c.gens.empty()) {
      os << "  gens";
      for (std::size_t k = 0; k < c.gens.size(); ++k) os << (k ? ", " : " ") << c.gens[k];
    }
    os << '\n';
  }
  if (r.dim_center) os << "dim Z:        " << *r.dim_center << '\n';
  if (!r.table.empty()) {
    os << '\n' << std::setw(4) << "n" << std::setw(10) << "dim J^n" << std::setw(10)
       << "dim Soc^n" << std::setw(10) << "dim ZS^n" << '\n';
    for (const auto& t : r.table)
      os << std::setw(4) << t.n << std::setw(10) << t.dim_rad << std::setw(10) << t.dim_soc
         << std::setw(10) << t.dim_zs << '\n';
  }
  if (!r.checks.empty()) {
    os << '\n';
    for (const auto& c : r.checks) {
      std::string tag = to_string(c.status);
      std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
      os << std::left << std::setw(8) << tag << std::setw(34) << c.name << c.details << '\n'
         << std::right;
    }
  }
  if (r.timing_ms) os << "time:         " << std::fixed << std::setprecision(1) << *r.timing_ms << " ms\n";
  return os.str();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"jennings", "rigidity", "main",     "powerful", "zs12",
                                                  "morita",   "okuyama",  "otokita", "scan"};
  return names;
}

std::vector<CheckResult> run_checks(const ParsedGroup& g, const VerifyOptions& opt) {
  std::vector<std::string> selected = opt.checks.empty() ? check_names() : opt.checks;
  for (const auto& name : selected)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw ParseError("unknown check '" + name + "'");
  auto wanted = [&](const char* name) {
    return std::find(selected.begin(), selected.end(), name) != selected.end();
  };

  AlgebraPtr a = group_algebra(g.group, g.p);
  JenningsBasis basis(dimension_subgroups_group_theoretic(g.group, g.p), a);
  std::vector<CheckResult> out;
  // A suite that throws is reported inline as a failure of that suite.
  auto run = [&](const char* name, auto&& suite) {
    if (!wanted(name)) return;
    try {
      suite();
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      out.push_back({name, CheckStatus::fail, std::string("error: ") + e.what()});
    }
  };
  auto append = [&](std::vector<CheckResult> part) {
    out.insert(out.end(), part.begin(), part.end());
  };
  run("jennings", [&] { append(verify_jennings_oracle(basis)); });
  run("rigidity", [&] { out.push_back(verify_rigidity(basis)); });
  run("main", [&] { append(verify_main_theorem_all(basis)); });
  run("powerful", [&] { append(verify_powerful_theorem(basis)); });
  run("zs12", [&] { append(verify_zs12_explicit(basis)); });
  run("morita", [&] { out.push_back(verify_morita(a, opt.morita_k)); });
  run("okuyama", [&] { out.push_back(verify_okuyama(basis)); });
  run("otokita", [&] { out.push_back(verify_otokita(*a)); });
  run("scan", [&] { out.push_back(jennings_spanning_scan(basis).result); });
  return out;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace zsalg
