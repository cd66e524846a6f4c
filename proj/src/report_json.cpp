#include "thue/report_json.hpp"

#include <sstream>

namespace thue {

namespace {

std::string dec(const mpz_class& v) { return v.get_str(); }

Json point_json(const Point& p) { return Json::array({dec(p.first), dec(p.second)}); }

Json optional_real(const std::optional<Real>& v) {
  if (!v) return "bound astronomically large";
  return real_to_json(*v);
}

}  // namespace

Json logreal_to_json(const LogReal& v) {
  Json j;
  j["sign"] = v.sign();
  if (v.is_zero())
    j["ln"] = nullptr;
  else
    j["ln"] = v.log_magnitude().to_string(kReportDigits);
  return j;
}

Json real_to_json(const Real& v) { return v.to_string(kReportDigits); }

Json thresholds_to_json(const Thresholds& th) {
  Json j;
  j["n"] = th.n;
  j["s"] = th.s;
  j["m"] = dec(th.m);
  j["height"] = dec(th.height);
  j["R"] = logreal_to_json(th.R);
  j["C"] = logreal_to_json(th.C);
  j["Y_S"] = logreal_to_json(th.Y_S);
  j["Y_L"] = logreal_to_json(th.Y_L);
  j["Y_0"] = logreal_to_json(th.Y_0);
  j["U"] = logreal_to_json(th.U);
  j["a"] = real_to_json(th.a);
  j["b"] = real_to_json(th.b);
  j["lambda"] = real_to_json(th.lambda);
  j["A"] = real_to_json(th.capA);
  j["N"] = th.N;
  Json ladder = Json::array();
  for (const auto& y : th.ladder) ladder.push_back(logreal_to_json(y));
  j["ladder"] = ladder;
  j["outside_theorem_preconditions"] = th.outside_theorem_preconditions;
  j["medium_range_empty"] = th.medium_range_empty;
  j["ladder_error"] = th.ladder_error ? Json(*th.ladder_error) : Json(nullptr);
  return j;
}

Json solution_to_json(const Solution& s) {
  Json j;
  j["x"] = dec(s.x);
  j["y"] = dec(s.y);
  j["value"] = dec(s.value);
  j["primitive"] = s.primitive;
  j["class"] = to_string(s.size_class);
  j["source"] = to_string(s.source);
  return j;
}

Json solutions_to_json(const std::vector<Solution>& sols) {
  Json a = Json::array();
  for (const auto& s : sols) a.push_back(solution_to_json(s));
  return a;
}

std::string solutions_to_csv(const std::vector<Solution>& sols) {
  std::ostringstream out;
  out << "x,y,value,primitive,class,source\n";
  for (const auto& s : sols) {
    out << s.x.get_str() << ',' << s.y.get_str() << ',' << s.value.get_str() << ',' << (s.primitive ? 1 : 0) << ','
        << to_string(s.size_class) << ',' << to_string(s.source) << '\n';
  }
  return out.str();
}

Json counts_to_json(const CountsReport& c) {
  Json j;
  j["N"] = c.N;
  j["P"] = c.P;
  j["Ptilde"] = c.Ptilde;
  Json pi;
  for (const auto& [k, v] : c.pi) pi[dec(k)] = v;
  j["pi"] = pi.is_null() ? Json::object() : pi;
  j["region"] = {{"certificate", to_string(c.region.certificate)}, {"bound", dec(c.region.bound)}};
  j["band_convention"] = c.band_convention;
  return j;
}

Json prime_to_json(const PrimeSelection& p) {
  Json j;
  j["target"] = logreal_to_json(p.target);
  j["prime"] = p.prime ? Json(dec(*p.prime)) : Json(nullptr);
  j["bertrand_ok"] = p.bertrand_ok;
  j["capped"] = p.capped;
  return j;
}

Json bound_report_to_json(const BinaryForm& f, const mpz_class& m, const BoundReport& r) {
  Json j;
  j["form"] = form_to_json(f);
  j["m"] = dec(m);
  Json pre = Json::object();
  for (const auto& [k, v] : r.preconditions) pre[k] = v;
  j["preconditions"] = pre;
  Json bounds = Json::object();
  for (const auto& [k, v] : r.bounds) bounds[k] = logreal_to_json(v);
  j["bounds"] = bounds;
  j["observed"] = counts_to_json(r.observed);
  Json ratios = Json::object();
  for (const auto& [k, v] : r.ratios) ratios[k] = optional_real(v);
  j["ratios"] = ratios;
  Json emp = Json::object();
  for (const auto& [k, v] : r.empirical_checks) emp[k] = v;
  j["empirical_checks"] = emp;
  j["flags"] = r.flags;
  j["primes"] = {{"large_disc", prime_to_json(r.large_disc_prime)}, {"three_tier", prime_to_json(r.three_tier_prime)}};
  j["thresholds"] = r.thresholds ? thresholds_to_json(*r.thresholds) : Json(nullptr);
  return j;
}

Json to_json(const LewisMahlerReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["skipped_y_zero"] = r.skipped_y_zero;
  Json e = Json::array();
  for (const auto& x : r.entries) {
    e.push_back({{"x", dec(x.x)},
                 {"y", dec(x.y)},
                 {"value", dec(x.value)},
                 {"nearest_root", x.nearest_root},
                 {"distance_upper", real_to_json(x.distance_upper)},
                 {"rhs", logreal_to_json(x.rhs)},
                 {"pass", x.pass}});
  }
  j["entries"] = e;
  return j;
}

Json to_json(const XiReport& r) {
  Json j;
  j["empty"] = r.empty;
  j["anchor"] = r.anchor ? point_json(*r.anchor) : Json(nullptr);
  j["candidates"] = r.candidates;
  Json mem = Json::array();
  for (const auto& list : r.members) {
    Json a = Json::array();
    for (const auto& p : list) a.push_back(point_json(p));
    mem.push_back(a);
  }
  j["members"] = mem;
  j["conjugate_sets_equal"] = r.conjugate_sets_equal;
  j["cross_determinant_holds"] = r.cross_determinant_holds;
  j["chain_holds"] = r.chain_holds;
  j["pairs_checked"] = r.pairs_checked;
  j["ambiguous"] = r.ambiguous;
  j["pass"] = r.pass();
  return j;
}

Json to_json(const RepSetReport& r) {
  Json j;
  j["S"] = r.S;
  j["size"] = r.size;
  j["bound"] = r.bound;
  j["occupied_intervals"] = r.occupied_intervals;
  j["empirical_ratio"] = real_to_json(r.empirical_ratio);
  j["grid_size"] = r.grid_size;
  j["refined_ratio"] = real_to_json(r.refined_ratio);
  j["refined_grid_size"] = r.refined_grid_size;
  j["within_bound"] = r.within_bound;
  j["stable"] = r.stable;
  j["below_R"] = r.below_R;
  j["pass"] = r.pass();
  return j;
}

Json to_json(const GapReport& r) {
  Json j;
  j["Y_0"] = logreal_to_json(r.Y_0);
  j["disc_precondition"] = r.disc_precondition;
  j["m_precondition"] = r.m_precondition;
  j["large_count"] = r.large_count;
  j["gap_violations"] = r.gap_violations;
  Json strong = Json::object();
  for (const auto& [k, v] : r.strong_approximations) strong[std::to_string(k)] = v;
  j["strong_approximations"] = strong;
  j["flags"] = Json::array();
  if (r.vacuous) j["flags"].push_back("no large solutions in region");
  j["pass"] = r.pass();
  return j;
}

Json to_json(const MediumLadderReport& r) {
  Json j;
  j["Y_S"] = logreal_to_json(r.Y_S);
  Json ladder = Json::array();
  for (const auto& y : r.ladder) ladder.push_back(logreal_to_json(y));
  j["ladder"] = ladder;
  j["N"] = r.N;
  j["ladder_error"] = r.ladder_error ? Json(*r.ladder_error) : Json(nullptr);
  j["ladder_valid"] = r.ladder_valid;
  j["medium_count"] = r.medium_count;
  j["medium_in_window"] = r.medium_in_window;
  Json counts = Json::array();
  for (const auto& c : r.counts) {
    counts.push_back({{"chart", std::string(1, c.chart)}, {"root", c.root}, {"w", c.w}});
  }
  j["counts"] = counts;
  j["caps_hold"] = r.caps_hold;
  j["caps_enforced"] = r.caps_enforced;
  j["window_monotone"] = r.window_monotone;
  j["flags"] = Json::array();
  if (r.diagnostic) j["flags"].push_back("diagnostic");
  if (r.vacuous) j["flags"].push_back("vacuous");
  j["pass"] = r.pass();
  return j;
}

Json with_version(const Json& body) {
  Json j;
  j["version"] = kReportVersion;
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

}  // namespace thue
