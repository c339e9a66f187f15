#include "zsalg/verify.hpp"

#include <sstream>
#include <string>

#include "zsalg/errors.hpp"

namespace zsalg {
namespace {

CheckResult make(std::string name, bool ok, std::string details) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)};
}

std::string level_name(const char* base, std::size_t s) {
  return std::string(base) + "[s=" + std::to_string(s) + "]";
}

bool tail_full(const JenningsStructure& js, const JenningsMonomial& m, std::size_t s) {
  for (std::size_t k = 0; k < js.gens.size(); ++k)
    if (js.gens[k].level >= s && m.exponents[k] != js.p - 1) return false;
  return true;
}

// sum over i < s of i (p - 1 - m_ij)
std::size_t head_coweight(const JenningsStructure& js, const JenningsMonomial& m, std::size_t s) {
  std::size_t w = 0;
  for (std::size_t k = 0; k < js.gens.size(); ++k)
    if (js.gens[k].level < s) w += js.gens[k].level * (js.p - 1 - m.exponents[k]);
  return w;
}

std::string subgroup_text(const SubgroupSet& h) {
  const Group& g = h.group();
  std::string out = "{";
  for (std::size_t k = 0; k < h.members().size(); ++k) {
    if (k) out += ",";
    if (k == 6) return out + "... (" + std::to_string(h.order()) + ")}";
    out += g.label(h.members()[k]);
  }
  return out + "}";
}

}  // namespace

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::finding: return "finding";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

CheckStatus check_status_from_string(const std::string& s) {
  for (auto st : {CheckStatus::pass, CheckStatus::fail, CheckStatus::finding, CheckStatus::skipped})
    if (s == to_string(st)) return st;
  throw ParseError("unknown check status '" + s + "'");
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

bool commutes_with_group(const Algebra& a, const FpVector& x) {
  const Group* g = a.group();
  if (!g) throw std::invalid_argument("commutes_with_group needs a group algebra");
  const std::size_t n = g->order();
  FpVector left(n), right(n);
  for (Group::Element s = 0; s < n; ++s) {
    std::fill(left.begin(), left.end(), 0);
    std::fill(right.begin(), right.end(), 0);
    for (Group::Element h = 0; h < n; ++h) {
      if (!x[h]) continue;
      left[g->mul(h, s)] = x[h];
      right[g->mul(s, h)] = x[h];
    }
    if (left != right) return false;
  }
  return true;
}

std::vector<CheckResult> verify_jennings_oracle(const JenningsBasis& b) {
  const auto& js = b.structure();
  const Algebra& a = b.algebra();
  std::vector<CheckResult> out;

  auto ring = dimension_subgroups_ring_theoretic(a);
  bool chain_ok = ring.size() == js.chain.size();
  std::string chain_detail;
  for (std::size_t i = 0; chain_ok && i < ring.size(); ++i) {
    if (!(ring[i] == js.chain[i])) {
      chain_ok = false;
      chain_detail = "D_" + std::to_string(i + 1) + ": recursion " + subgroup_text(js.chain[i]) +
                     " vs radical membership " + subgroup_text(ring[i]);
    }
  }
  if (chain_ok) {
    chain_detail = "orders";
    for (const auto& d : js.chain) chain_detail += " " + std::to_string(d.order());
  } else if (chain_detail.empty()) {
    chain_detail = "chain lengths " + std::to_string(js.chain.size()) + " vs " +
                   std::to_string(ring.size());
  }
  out.push_back(make("jennings.chain", chain_ok, chain_detail));

  const std::size_t ll = js.loewy_length;
  std::string rad_bad, soc_bad;
  for (std::size_t n = 0; n <= ll; ++n) {
    if (rad_bad.empty() && !(rad_span_by_weight(b, n) == a.radical_power(n)))
      rad_bad = "weight span differs from J^" + std::to_string(n);
    if (soc_bad.empty() && !(soc_span_by_weight(b, n) == a.socle(n)))
      soc_bad = "coweight span differs from Soc^" + std::to_string(n);
  }
  out.push_back(make("jennings.radical_weights", rad_bad.empty(),
                     rad_bad.empty() ? "n = 0.." + std::to_string(ll) : rad_bad));
  out.push_back(make("jennings.socle_weights", soc_bad.empty(),
                     soc_bad.empty() ? "n = 0.." + std::to_string(ll) : soc_bad));

  const std::size_t nil = a.nilpotency_index();
  std::size_t computed = 0;
  std::string ll_detail;
  try {
    computed = loewy_length(a);
  } catch (const InternalError& e) {
    ll_detail = e.what();
  }
  const bool ll_ok = ll == nil && ll == computed;
  if (ll_detail.empty())
    ll_detail = "formula " + std::to_string(ll) + ", nilpotency index " + std::to_string(nil);
  out.push_back(make("jennings.loewy_length", ll_ok, ll_detail));
  return out;
}

CheckResult verify_rigidity(const JenningsBasis& b) {
  const Algebra& a = b.algebra();
  const std::size_t ll = b.structure().loewy_length;
  for (std::size_t n = 0; n <= ll; ++n)
    if (!(a.socle(n) == a.radical_power(ll - n)))
      return make("rigidity", false,
                  "Soc^" + std::to_string(n) + " != J^" + std::to_string(ll - n));
  return make("rigidity", true, "Soc^n = J^(LL-n) for n = 0.." + std::to_string(ll));
}

std::vector<CheckResult> verify_main_theorem(const JenningsBasis& b, std::size_t s) {
  const auto& js = b.structure();
  const Algebra& a = b.algebra();
  const Group& g = *js.group;
  const SubgroupSet& ds = js.D(s);
  std::vector<CheckResult> out;

  const bool ideal_central = central_ideal_check(a, ds);
  out.push_back(make(level_name("main.subgroup_sum_central", s), ideal_central,
                     "F G * D_s^+ with |D_s| = " + std::to_string(ds.order())));

  auto predicted = predicted_central_monomials(js, s);
  std::string noncentral;
  for (const auto& m : predicted)
    if (!commutes_with_group(a, b.elements()[b.find(m.exponents)].coeffs)) {
      noncentral = monomial_label(js, m);
      break;
    }
  out.push_back(make(level_name("main.monomials_central", s), noncentral.empty(),
                     noncentral.empty()
                         ? std::to_string(predicted.size()) + " monomials commute with G"
                         : "not central: " + noncentral));

  std::vector<std::uint32_t> tail(js.gens.size(), 0);
  for (std::size_t k = 0; k < js.gens.size(); ++k)
    if (js.gens[k].level >= s) tail[k] = js.p - 1;
  const bool tail_ok = b.elements()[b.find(tail)] == group_sum(a, ds);
  out.push_back(make(level_name("main.tail_product", s), tail_ok,
                     tail_ok ? "tail product equals D_s^+" : "tail product differs from D_s^+"));

  std::vector<FpVector> ideal_rows;
  const FpVector dsum = group_sum(a, ds).coeffs;
  for (Group::Element x = 0; x < g.order(); ++x) {
    FpVector row(g.order(), 0);
    for (Group::Element h = 0; h < g.order(); ++h)
      if (dsum[h]) row[g.mul(x, h)] = dsum[h];
    ideal_rows.push_back(std::move(row));
  }
  Subspace ideal = Subspace::span(a.modulus(), a.dim(), ideal_rows);
  Subspace pred_span = b.span_where([&](const JenningsMonomial& m) { return tail_full(js, m, s); });
  const std::size_t quotient = g.order() / ds.order();
  const bool span_ok = pred_span == ideal && ideal.dim() == quotient &&
                       predicted.size() == quotient;
  out.push_back(make(level_name("main.predicted_span", s), span_ok,
                     "span dim " + std::to_string(pred_span.dim()) + ", ideal dim " +
                         std::to_string(ideal.dim()) + ", |G/D_s| = " + std::to_string(quotient)));

  // Soc^n grows with n, so each monomial is tested at its least admissible n
  // and against Z once.
  std::string miss;
  const Subspace z = a.center();
  for (const auto& m : predicted) {
    const std::size_t n = head_coweight(js, m, s) + 1;
    const FpVector& x = b.elements()[b.find(m.exponents)].coeffs;
    if (n <= js.loewy_length && !(a.socle(n).contains(x) && z.contains(x))) {
      miss = monomial_label(js, m) + " not in ZS^" + std::to_string(n);
      break;
    }
  }
  out.push_back(make(level_name("main.zs_inclusion", s), miss.empty(),
                     miss.empty() ? std::to_string(predicted.size()) + " monomials placed" : miss));

  std::size_t ns = 1;
  for (std::size_t i = 1; i < s; ++i) ns += (js.p - 1) * i * js.rank(i);
  const std::size_t zdim = zs(a, ns).dim();
  out.push_back(make(level_name("main.lower_bound", s), zdim >= quotient,
                     "dim ZS^" + std::to_string(ns) + " = " + std::to_string(zdim) +
                         " >= " + std::to_string(quotient)));
  return out;
}

std::vector<CheckResult> verify_main_theorem_all(const JenningsBasis& b) {
  std::vector<CheckResult> out;
  for (std::size_t s : central_levels(b.structure())) {
    auto part = verify_main_theorem(b, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CheckResult> verify_powerful_theorem(const JenningsBasis& b) {
  const auto& js = b.structure();
  const Algebra& a = b.algebra();
  const std::uint32_t p = js.p;
  if (!is_powerful(*js.group, p))
    return {{"powerful", CheckStatus::skipped, "group is not powerful"}};
  std::vector<CheckResult> out;

  out.push_back(make("powerful.d2_equals_dp", js.D(2) == js.D(p),
                     "|D_2| = " + std::to_string(js.D(2).order()) +
                         ", |D_p| = " + std::to_string(js.D(p).order())));

  std::string bad;
  std::string dims;
  for (std::size_t n = 1; n <= p; ++n) {
    Subspace predicted = b.span_where([&](const JenningsMonomial& m) {
      return tail_full(js, m, 2) && head_coweight(js, m, 2) < n;
    });
    Subspace actual = zs(a, n);
    dims += (n > 1 ? "," : "") + std::to_string(actual.dim());
    if (bad.empty() && !(predicted == actual))
      bad = "ZS^" + std::to_string(n) + " has dim " + std::to_string(actual.dim()) +
            ", predicted " + std::to_string(predicted.dim());
  }
  out.push_back(make("powerful.zs_equality", bad.empty(),
                     bad.empty() ? "dim ZS^n for n = 1.." + std::to_string(p) + ": " + dims : bad));

  out.push_back(make("powerful.socle_p_central", a.socle(p).is_subspace_of(a.center()),
                     "Soc^" + std::to_string(p) + " <= Z"));

  if (js.group->is_abelian()) {
    out.push_back({"powerful.negative_control", CheckStatus::skipped, "group is abelian"});
    return out;
  }
  std::string witness;
  for (std::size_t k = 0; k < b.monomials().size() && witness.empty(); ++k) {
    const auto& m = b.monomials()[k];
    if (m.coweight < p + 1 && !commutes_with_group(a, b.elements()[k].coeffs))
      witness = monomial_label(js, m);
  }
  if (witness.empty())
    out.push_back({"powerful.negative_control", CheckStatus::finding,
                   "every monomial of Soc^" + std::to_string(p + 1) + " is central"});
  else
    out.push_back({"powerful.negative_control", CheckStatus::pass,
                   witness + " in Soc^" + std::to_string(p + 1) + " but not central"});
  return out;
}

std::vector<CheckResult> verify_zs12_explicit(const JenningsBasis& b) {
  const auto& js = b.structure();
  const Algebra& a = b.algebra();
  const std::uint32_t p = js.p;
  std::vector<CheckResult> out;

  Subspace zs1 = b.span_where([](const JenningsMonomial& m) { return m.coweight == 0; });
  const Subspace actual1 = zs(a, 1);
  out.push_back(make("zs12.zs1", zs1 == actual1,
                     "dim ZS^1 = " + std::to_string(actual1.dim())));

  // m_1j = p - 1 - delta_js for a level-1 generator s, every other exponent p - 1.
  Subspace zs2 = b.span_where([&](const JenningsMonomial& m) {
    std::size_t deficit = 0;
    for (std::size_t k = 0; k < js.gens.size(); ++k) {
      const std::uint32_t e = m.exponents[k];
      if (e == p - 1) continue;
      if (js.gens[k].level != 1 || e != p - 2) return false;
      ++deficit;
    }
    return deficit <= 1;
  });
  const Subspace actual2 = zs(a, 2);
  out.push_back(make("zs12.zs2", zs2 == actual2,
                     "dim ZS^2 = " + std::to_string(actual2.dim()) + ", explicit " +
                         std::to_string(zs2.dim())));

  out.push_back(make("zs12.socle2_central", a.socle(2).is_subspace_of(a.center()), "Soc^2 <= Z"));
  return out;
}

CheckResult verify_okuyama(const JenningsBasis& b) {
  const std::size_t r1 = b.structure().rank(1);
  const std::size_t d = zs(b.algebra(), 2).dim();
  return make("okuyama", d == 1 + r1,
              "dim ZS^2 = " + std::to_string(d) + ", 1 + r_1 = " + std::to_string(1 + r1));
}

CheckResult verify_otokita(const Algebra& a) {
  const std::size_t ll = a.nilpotency_index();
  for (std::size_t n = 0; n <= ll; ++n) {
    const std::size_t lhs = zs(a, n).dim();
    const std::size_t rhs = a.dim() - a.radical_power(n).dim();
    if (lhs > rhs)
      return make("otokita", false,
                  "n = " + std::to_string(n) + ": dim ZS^n = " + std::to_string(lhs) +
                      " > " + std::to_string(rhs));
  }
  const bool agrees = otokita_bound_check(a);
  return make("otokita", agrees, "dim ZS^n <= dim A - dim J^n for n = 0.." + std::to_string(ll));
}

CheckResult verify_morita(const AlgebraPtr& a, std::size_t k) {
  MoritaReport r = morita_invariance_check(a, k);
  std::ostringstream os;
  os << "k = " << k << ", LL " << r.base_loewy_length << " vs " << r.matrix_loewy_length
     << ", dims";
  for (std::size_t i = 0; i < r.base_dims.size(); ++i)
    os << (i ? "," : " ") << r.base_dims[i];
  if (!r.equal) {
    os << " vs";
    for (std::size_t i = 0; i < r.matrix_dims.size(); ++i)
      os << (i ? "," : " ") << r.matrix_dims[i];
  }
  return make("morita", r.equal, os.str());
}

ScanResult jennings_spanning_scan(const JenningsBasis& b) {
  const auto& js = b.structure();
  const Algebra& a = b.algebra();
  ScanResult r;
  for (std::size_t n = 1; n <= js.loewy_length; ++n) {
    Subspace z = zs(a, n);
    std::vector<FpVector> inside;
    for (const auto& e : b.elements())
      if (z.contains(e.coeffs)) inside.push_back(e.coeffs);
    if (!(Subspace::span(a.modulus(), a.dim(), inside) == z)) r.failing.push_back(n);
  }
  r.result.name = "scan";
  if (r.failing.empty()) {
    r.result.status = CheckStatus::pass;
    r.result.details = "every ZS^n is spanned by Jennings monomials";
  } else {
    r.result.status = CheckStatus::finding;
    r.result.details = "no Jennings-monomial basis at n =";
    for (std::size_t k = 0; k < r.failing.size(); ++k)
      r.result.details += (k ? "," : " ") + std::to_string(r.failing[k]);
  }
  return r;
}

}  // namespace zsalg
