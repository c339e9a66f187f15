// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "zsalg/algebra.hpp"
#include "zsalg/cli.hpp"
#include "zsalg/families.hpp"
#include "zsalg/group_spec.hpp"
#include "zsalg/jennings.hpp"
#include "zsalg/report.hpp"
#include "zsalg/verify.hpp"

using namespace zsalg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure; later ones only bump the count.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_++ == 0) first_ = what;
  }
  void expect_checks(const std::string& spec, const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
      expect(r.status == CheckStatus::pass || r.status == CheckStatus::skipped,
             spec + ": " + r.name + " " + to_string(r.status) + " (" + r.details + ")");
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s); first: " + first_};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

struct Catalog {
  std::vector<ParsedGroup> groups;
  std::vector<std::shared_ptr<const JenningsBasis>> bases;
};

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog out;
    for (const auto& spec : builtin_catalog()) {
      auto pg = parse_group_spec(spec);
      auto js = dimension_subgroups_group_theoretic(pg.group, pg.p);
      out.bases.push_back(std::make_shared<const JenningsBasis>(js, group_algebra(pg.group, pg.p)));
      out.groups.push_back(std::move(pg));
    }
    return out;
  }();
  return c;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

oracle::Vec x_minus_1(std::size_t d, std::size_t g, std::uint32_t p) {
  oracle::Vec v(d, 0);
  v[g] = 1;
  v[0] = (v[0] + p - 1) % p;
  return v;
}

bool naive_commutes(const oracle::GroupAlgebra& o, const oracle::Vec& x) {
  for (std::size_t g = 0; g < o.dim(); ++g)
    if (o.mul(x, o.basis(g)) != o.mul(o.basis(g), x)) return false;
  return true;
}

// Independent dimension of Z ∩ Soc^n for n = 1..N from the naive oracle.
std::vector<std::size_t> naive_zs_dims(const oracle::GroupAlgebra& o, std::size_t up_to) {
  const auto powers = o.radical_powers();
  const auto z = o.center();
  std::vector<std::size_t> dims;
  for (std::size_t n = 1; n <= up_to; ++n) {
    const auto& jn = n < powers.size() ? powers[n] : oracle::Mat{};
    dims.push_back(oracle::intersect(z, o.right_annihilator(jn), o.dim(), o.p).size());
  }
  return dims;
}

Outcome criterion_1() {
  Tally t;
  const std::uint32_t p = 3;
  auto pg = parse_group_spec("xs+:3");
  auto a = group_algebra(pg.group, p);
  // Closed formulas for the exponent-p extraspecial group.
  std::vector<std::size_t> formula;
  for (std::size_t n = 1; n <= 9; ++n) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) d += 2 * (p - 1) - (i + j) < n;
    for (std::size_t k = 0; k + 1 < p; ++k) d += 4 * (p - 1) - 2 * k < n;
    formula.push_back(d);
  }
  const std::vector<std::size_t> expected{1, 3, 6, 8, 9, 9, 10, 10, 11};
  t.expect(formula == expected, "formula gives " + join(formula));

  oracle::GroupAlgebra o{pg.group.get(), p};
  t.expect(naive_zs_dims(o, 9) == expected, "naive oracle gives " + join(naive_zs_dims(o, 9)));
  t.expect(o.center().size() == 11, "naive dim Z");

  std::vector<std::size_t> lib;
  for (std::size_t n = 1; n <= 9; ++n) lib.push_back(zs(*a, n).dim());
  t.expect(lib == expected, "library gives " + join(lib));
  t.expect(a->center().dim() == 11, "library dim Z = " + std::to_string(a->center().dim()));
  t.expect(loewy_length(*a) == 9, "Loewy length");
  t.expect(dimension_subgroups_group_theoretic(pg.group, p).loewy_length == 9, "Jennings LL");
  return t.done("dim Z = 11, LL = 9, dim ZS^1..9 = " + join(lib));
}

Outcome criterion_2() {
  Tally t;
  const std::uint32_t p = 3;
  auto pg = parse_group_spec("xs-:3");
  const Group& g = *pg.group;
  auto a = group_algebra(pg.group, p);
  auto js = dimension_subgroups_group_theoretic(pg.group, p);

  t.expect(is_powerful(g, p), "powerful");
  const Group::Element ea = 1, eb = p, ec = p * p;
  t.expect(g.pow(eb, p) == ec, "c = b^p");
  const auto c_sub = subgroup_generated(g, std::vector<Group::Element>{ec});
  t.expect(js.t == 4 && js.D(2) == c_sub && js.D(3) == c_sub && js.D(4).is_trivial(),
           "chain D_2 = D_3 = <c>, D_4 = 1");
  t.expect(js.loewy_length == 11 && loewy_length(*a) == 11, "LL = 11");

  std::vector<std::size_t> formula, lib;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) d += 2 * (p - 1) - (i + j) < n;
    for (std::size_t k = 0; k + 1 < p; ++k) d += (p + 2) * (p - 1) - p * k < n;
    formula.push_back(d);
    lib.push_back(zs(*a, n).dim());
  }
  const std::vector<std::size_t> expected{1, 3, 6};
  t.expect(formula == expected, "formula gives " + join(formula));
  t.expect(lib == expected, "library gives " + join(lib));
  oracle::GroupAlgebra o{&g, p};
  t.expect(naive_zs_dims(o, 3) == expected, "naive oracle gives " + join(naive_zs_dims(o, 3)));

  t.expect(a->socle(3).is_subspace_of(a->center()), "Soc^3 <= Z");
  const auto powers = o.radical_powers();
  const auto soc3 = o.right_annihilator(powers[3]);
  t.expect(oracle::intersect(soc3, o.center(), o.dim(), p).size() == soc3.size(), "naive Soc^3 <= Z");

  // x^2 y^2 z with x = a - 1, y = b - 1, z = c - 1.
  const auto x = x_minus_1(g.order(), ea, p), y = x_minus_1(g.order(), eb, p),
             z = x_minus_1(g.order(), ec, p);
  const auto w = o.mul(o.mul(o.mul(o.mul(x, x), y), y), z);
  t.expect(a->socle(4).contains(w), "witness in Soc^4");
  t.expect(!a->center().contains(w), "witness outside Z");
  t.expect(!naive_commutes(o, w), "witness not central (naive)");
  bool kills = true;
  for (const auto& v : powers[4]) kills = kills && o.mul(w, v) == oracle::Vec(g.order(), 0);
  t.expect(kills, "witness annihilates J^4 (naive)");
  return t.done("powerful, D_2 = D_3 = <c>, LL = 11, dim ZS^1..3 = " + join(lib) +
                ", Soc^3 <= Z, x^2y^2z in Soc^4 \\ Z");
}

Outcome criterion_3() {
  Tally t;
  std::size_t count = 0;
  for (std::size_t k = 0; k < catalog().groups.size(); ++k) {
    const auto& pg = catalog().groups[k];
    const std::size_t limit = pg.p == 2 ? 128 : pg.p == 3 ? 243 : 125;
    t.expect(pg.group->order() <= limit, pg.spec + " exceeds the size bound");
    t.expect_checks(pg.spec, verify_jennings_oracle(*catalog().bases[k]));
    t.expect_checks(pg.spec, {verify_rigidity(*catalog().bases[k])});
    ++count;
  }
  return t.done(std::to_string(count) + " groups: chains, weight spans, LL formula, rigidity");
}

Outcome criterion_4() {
  Tally t;
  std::size_t levels = 0;
  for (std::size_t k = 0; k < catalog().groups.size(); ++k) {
    const auto& b = *catalog().bases[k];
    levels += central_levels(b.structure()).size();
    t.expect_checks(catalog().groups[k].spec, verify_main_theorem_all(b));
  }
  return t.done(std::to_string(catalog().groups.size()) + " groups, " + std::to_string(levels) +
                " admissible levels s");
}

Outcome criterion_5() {
  Tally t;
  std::size_t count = 0;
  bool saw_xs3 = false, saw_xs5 = false, saw_cyclic = false, saw_product = false;
  for (std::size_t k = 0; k < catalog().groups.size(); ++k) {
    const auto& pg = catalog().groups[k];
    if (!is_powerful(*pg.group, pg.p)) continue;
    ++count;
    saw_xs3 |= pg.spec == "xs-:3";
    saw_xs5 |= pg.spec == "xs-:5";
    saw_cyclic |= pg.spec.rfind("cyclic:", 0) == 0;
    saw_product |= pg.spec.rfind("prod:", 0) == 0 && pg.group->is_abelian();
    for (const auto& r : verify_powerful_theorem(*catalog().bases[k])) {
      if (r.name == "powerful.negative_control") continue;
      t.expect(r.status == CheckStatus::pass, pg.spec + ": " + r.name + " (" + r.details + ")");
    }
  }
  t.expect(saw_xs3 && saw_xs5 && saw_cyclic && saw_product, "test family coverage");
  return t.done(std::to_string(count) + " powerful groups: D_2 = D_p and ZS^n equality for n <= p");
}

Outcome criterion_6() {
  Tally t;
  std::size_t largest = 0;
  for (const char* spec : {"cyclic:2", "cyclic:4", "elab:2^2", "xs+:3"}) {
    auto pg = parse_group_spec(spec);
    auto a = group_algebra(pg.group, pg.p);
    auto r = verify_morita(a, 2);
    t.expect(r.status == CheckStatus::pass, std::string(spec) + ": " + r.details);
    largest = std::max(largest, 4 * a->dim());
  }
  return t.done("C2, C4, C2xC2, xs+:3 with k = 2; largest dim " + std::to_string(largest));
}

Outcome criterion_7() {
  Tally t;
  for (std::size_t k = 0; k < catalog().groups.size(); ++k) {
    const auto& b = *catalog().bases[k];
    const auto& spec = catalog().groups[k].spec;
    t.expect_checks(spec, {verify_okuyama(b)});
    t.expect_checks(spec, verify_zs12_explicit(b));
    t.expect(zs(b.algebra(), 2).dim() == 1 + b.structure().rank(1), spec + ": dim ZS^2");
  }
  return t.done(std::to_string(catalog().groups.size()) + " groups: dim ZS^2 = 1 + r_1 and explicit basis");
}

Outcome criterion_8() {
  Tally t;
  std::string found;
  for (const char* spec : {"dihedral:16", "semidihedral:16", "quaternion:16"}) {
    auto pg = parse_group_spec(spec);
    JenningsBasis b(dimension_subgroups_group_theoretic(pg.group, 2), group_algebra(pg.group, 2));
    auto scan = jennings_spanning_scan(b);
    t.expect(!scan.failing.empty() && scan.result.status == CheckStatus::finding,
             std::string(spec) + ": scan found no failing n");
    found += std::string(found.empty() ? "" : "; ") + spec + " n=" + join(scan.failing);
  }
  return t.done(found);
}

Outcome criterion_9() {
  Tally t;
  for (std::size_t k = 0; k < catalog().groups.size(); ++k)
    t.expect_checks(catalog().groups[k].spec, {verify_otokita(catalog().bases[k]->algebra())});
  return t.done(std::to_string(catalog().groups.size()) + " group algebras");
}

Outcome criterion_10() {
  Tally t;
  // fplinalg against enumeration, ambient <= 6, p <= 3.
  std::mt19937 rng(11);
  std::size_t subspace_cases = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Modulus mod(p);
    for (std::size_t d = 1; d <= 6; ++d)
      for (int trial = 0; trial < 20; ++trial) {
        oracle::Mat a(rng() % (d + 2), oracle::Vec(d)), b(rng() % (d + 2), oracle::Vec(d));
        for (auto* m : {&a, &b})
          for (auto& row : *m)
            for (auto& x : row) x = rng() % p;
        auto sa = Subspace::span(mod, d, {a.begin(), a.end()});
        auto sb = Subspace::span(mod, d, {b.begin(), b.end()});
        auto members = [&](const Subspace& s) {
          oracle::Mat gens;
          for (std::size_t r = 0; r < s.dim(); ++r) gens.push_back(s.basis_vector(r));
          return oracle::enumerate_span(gens, d, p);
        };
        const auto ea = oracle::enumerate_span(a, d, p), eb = oracle::enumerate_span(b, d, p);
        std::set<oracle::Vec> meet;
        for (const auto& v : ea)
          if (eb.count(v)) meet.insert(v);
        oracle::Mat both = a;
        both.insert(both.end(), b.begin(), b.end());
        t.expect(members(sa) == ea, "span");
        t.expect(members(subspace_intersect(sa, sb)) == meet, "intersection");
        t.expect(members(subspace_sum(sa, sb)) == oracle::enumerate_span(both, d, p), "sum");
        ++subspace_cases;
      }
  }

  // Permutation closure is a faithful image of the generated group.
  auto perm_check = [&](std::size_t n, const std::vector<Permutation>& gens) {
    Group g = close_generators(n, gens);
    const auto closure = oracle::brute_closure(gens);
    t.expect(g.order() == closure.size(), "closure order");
    std::vector<Permutation> image(g.order());
    for (Group::Element x = 0; x < g.order(); ++x)
      image[x] = oracle::evaluate_label(g.label(x), gens, g.generator_names());
    for (Group::Element x = 0; x < g.order(); ++x)
      for (Group::Element y = 0; y < g.order(); ++y)
        if (image[g.mul(x, y)] != oracle::compose(image[x], image[y])) {
          t.expect(false, "closure product mismatch");
          return;
        }
  };
  perm_check(9, {{1, 2, 0, 3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 8, 0, 1, 2}});
  perm_check(8, {{1, 0, 2, 3, 4, 5, 6, 7}, {2, 3, 0, 1, 4, 5, 6, 7}, {4, 5, 6, 7, 0, 1, 2, 3}});

  // Class sums span Z; ZS^n is an ideal of Z.
  for (std::size_t k = 0; k < catalog().groups.size(); ++k) {
    const auto& pg = catalog().groups[k];
    const Algebra& a = catalog().bases[k]->algebra();
    t.expect(class_sum_span(a) == a.center(), pg.spec + ": class sums");
    if (pg.group->order() > 81) continue;
    const Subspace z = a.center();
    for (std::size_t n = 1; n <= a.nilpotency_index(); ++n) {
      const Subspace zsn = zs(a, n);
      for (std::size_t i = 0; i < z.dim(); ++i)
        for (std::size_t j = 0; j < zsn.dim(); ++j)
          if (!zsn.contains(a.multiply(z.basis().row(i), zsn.basis().row(j)))) {
            t.expect(false, pg.spec + ": ZS^" + std::to_string(n) + " not closed under Z");
            i = z.dim();
            break;
          }
    }
  }

  // Reports are deterministic and round-trip.
  for (const char* spec : {"xs+:3", "xs-:3", "dihedral:16"}) {
    auto pg = parse_group_spec(spec);
    const std::string j1 = report_to_json(build_report(pg, {}));
    const std::string j2 = report_to_json(build_report(pg, {}));
    t.expect(j1 == j2, std::string(spec) + ": nondeterministic report");
    t.expect(report_to_json(report_from_json(j1)) == j1, std::string(spec) + ": round trip");
    auto cli = [&] {
      std::vector<const char*> argv{"zsalg", "zs-table", spec, "--format", "json"};
      std::ostringstream out, err;
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
      return out.str();
    };
    t.expect(cli() == j1, std::string(spec) + ": CLI output differs from the report");
  }
  return t.done(std::to_string(subspace_cases) + " subspace cases, closures, class sums, ideal closure, JSON");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exponent-p extraspecial group of order 27", criterion_1},
      {"exponent-p^2 extraspecial group of order 27", criterion_2},
      {"Jennings oracle equality", criterion_3},
      {"central monomial theorem", criterion_4},
      {"powerful groups", criterion_5},
      {"Morita invariance", criterion_6},
      {"dim ZS^2 = 1 + r_1", criterion_7},
      {"order-16 maximal class scan", criterion_8},
      {"upper bound dim ZS^n <= dim A - dim J^n", criterion_9},
      {"property suites", criterion_10},
  };
  bool all_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": "
              << criteria[k].first << " -- " << o.detail << " [" << std::fixed
              << std::setprecision(2) << secs << "s]" << std::endl;
  }
  return all_ok ? 0 : 1;
}
