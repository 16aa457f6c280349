#include "gkz/job.hpp"

#include <algorithm>
#include <cstdio>

namespace gkz {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::parse_error, what);
}

Int int_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned())
      return Int(std::to_string(v.get<std::uint64_t>()));
    return Int(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      parse_fail(where + ": invalid integer \"" + v.get<std::string>() + "\"");
    }
  }
  parse_fail(where + ": expected an integer (floats are not accepted)");
}

GaussRat gauss_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return GaussRat{Rat::parse(v.get<std::string>())};
  if (v.is_object()) {
    for (const auto& [key, unused] : v.items())
      if (key != "re" && key != "im")
        parse_fail(where + ": unknown field \"" + key + "\"");
    if (!v.contains("re")) parse_fail(where + ": missing \"re\"");
    if (!v["re"].is_string()) parse_fail(where + ": \"re\" must be a string");
    Rat re = Rat::parse(v["re"].get<std::string>());
    Rat im;
    if (v.contains("im")) {
      if (!v["im"].is_string()) parse_fail(where + ": \"im\" must be a string");
      im = Rat::parse(v["im"].get<std::string>());
    }
    return {std::move(re), std::move(im)};
  }
  parse_fail(where + ": expected \"p/q\" or {\"re\",\"im\"}");
}

ordered_json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json gauss_to_json(const GaussRat& v) {
  return ordered_json{{"re", v.re.str()}, {"im", v.im.str()}};
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

ordered_json factor_to_json(const MonodromyFactor& f) {
  ordered_json out;
  out["d"] = int_to_json(f.degree);
  out["delta"] = gauss_to_json(f.exponent);
  out["multiplicity"] = int_to_json(f.multiplicity);
  return out;
}

void run_internal_checks(const Configuration& config, const JobReport& report) {
  const HullResult& hull = config.hull();

  // Facet certificates: correct sign everywhere, equality exactly on the
  // incident set, primitive normals.
  for (const Facet& facet : hull.facets) {
    if (make_primitive(facet.normal).scale != 1)
      throw Error(ErrorCode::internal, "check: non-primitive facet normal");
    for (int j = 0; j < int(hull.points.size()); ++j) {
      int side = cmp(dot(facet.normal, hull.points[j]), facet.support);
      bool on = std::binary_search(facet.incident.begin(),
                                   facet.incident.end(), j);
      if (side < 0 || (side == 0) != on)
        throw Error(ErrorCode::internal, "check: facet certificate failed");
    }
  }

  for (const JobResult& result : report.results) {
    if (result.poly.certified() && result.poly.degree() != config.rank())
      throw Error(ErrorCode::internal, "check: degree identity failed");
    const IntVec& marked = config.points()[result.j0 - 1];
    for (int fi = 0; fi < int(hull.facets.size()); ++fi) {
      if (sgn(lattice_distance(hull.facets[fi], marked)) <= 0) continue;
      if (!check_lifted_facet(config, result.j0, fi).ok())
        throw Error(ErrorCode::internal, "check: lifted-facet lemma failed");
    }
  }
}

}  // namespace

JobSpec parse_job(const json& input) {
  if (!input.is_object()) parse_fail("input must be a JSON object");
  for (const auto& [key, unused] : input.items())
    if (key != "points" && key != "gamma" && key != "j0")
      parse_fail("unknown field \"" + key + "\"");

  JobSpec spec;
  if (!input.contains("points") || !input["points"].is_array() ||
      input["points"].empty())
    parse_fail("\"points\" must be a non-empty array of integer vectors");
  for (std::size_t r = 0; r < input["points"].size(); ++r) {
    const json& row = input["points"][r];
    if (!row.is_array() || row.empty())
      parse_fail("points[" + std::to_string(r) + "] must be a non-empty array");
    IntVec p;
    p.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
      p.push_back(int_from_json(
          row[c], "points[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    if (!spec.points.empty() && p.size() != spec.points[0].size())
      parse_fail("points[" + std::to_string(r) + "] has inconsistent dimension");
    spec.points.push_back(std::move(p));
  }

  if (!input.contains("gamma") || !input["gamma"].is_array())
    parse_fail("\"gamma\" must be an array");
  for (std::size_t i = 0; i < input["gamma"].size(); ++i)
    spec.gamma.push_back(
        gauss_from_json(input["gamma"][i], "gamma[" + std::to_string(i) + "]"));
  if (spec.gamma.size() != spec.points[0].size() + 1)
    parse_fail("gamma must have " +
               std::to_string(spec.points[0].size() + 1) +
               " entries (point dimension + 1), got " +
               std::to_string(spec.gamma.size()));

  if (input.contains("j0")) {
    const json& j0 = input["j0"];
    if (j0.is_string()) {
      if (j0.get<std::string>() != "all")
        parse_fail("\"j0\" must be a 1-based index or \"all\"");
    } else if (j0.is_number_integer()) {
      long long k = j0.get<long long>();
      if (k < 1 || k > (long long)spec.points.size())
        throw Error(ErrorCode::index_out_of_range,
                    "j0 = " + std::to_string(k) + " out of range 1.." +
                        std::to_string(spec.points.size()));
      spec.j0 = int(k);
    } else {
      parse_fail("\"j0\" must be a 1-based index or \"all\"");
    }
  }
  return spec;
}

JobReport run_job(const JobSpec& spec) {
  Configuration config = Configuration::build(spec.points);
  Parameter param(spec.gamma);

  JobReport report;
  report.rank = config.rank();
  report.resonance = nonresonance_check(config, param);
  if (!report.resonance.nonresonant && !spec.options.force) {
    report.exit_code = 2;
    return report;
  }

  std::vector<int> targets;
  if (spec.j0)
    targets.push_back(*spec.j0);
  else
    for (int k = 1; k <= config.m(); ++k) targets.push_back(k);

  for (int j0 : targets)
    report.results.push_back(
        {j0, monodromy_at_infinity(config, param, j0, spec.options.force)});

  if (spec.options.check) run_internal_checks(config, report);
  return report;
}

std::string render_text(const JobReport& report, const JobSpec& spec) {
  std::string out;
  out += "rank: " + report.rank.get_str() + "\n";
  out += std::string("nonresonant: ") +
         (report.resonance.nonresonant ? "true" : "false") + "\n";
  for (const ResonanceViolation& v : report.resonance.violations) {
    out += "violation: facet " + std::to_string(v.facet_index) +
           ", functional = (";
    for (std::size_t k = 0; k < v.functional.size(); ++k) {
      if (k) out += ", ";
      out += v.functional[k].get_str();
    }
    out += "), pairing = " + v.pairing.str() + "\n";
  }
  for (const JobResult& r : report.results) {
    out += "j0 = " + std::to_string(r.j0) +
           ": degree = " + r.poly.degree().get_str() + ", certified = " +
           (r.poly.certified() ? "true" : "false") + "\n";
    out += "  lambda = " + to_text(r.poly) + "\n";
    if (spec.options.zeta) out += "  zeta = " + to_zeta_text(r.poly) + "\n";
    if (spec.options.expand) {
      auto coeff = expand(r.poly, spec.options.digits);
      out += "  coefficients (ascending):\n";
      for (std::size_t i = 0; i < coeff.size(); ++i)
        out += "    t^" + std::to_string(i) + ": " +
               format_double(coeff[i].real(), spec.options.digits) + " + " +
               format_double(coeff[i].imag(), spec.options.digits) + "*i\n";
    }
  }
  return out;
}

ordered_json render_json(const JobReport& report, const JobSpec& spec) {
  ordered_json out;
  out["rank"] = int_to_json(report.rank);
  out["nonresonant"] = report.resonance.nonresonant;
  out["violations"] = ordered_json::array();
  for (const ResonanceViolation& v : report.resonance.violations) {
    ordered_json entry;
    entry["facet"] = v.facet_index;
    entry["functional"] = ordered_json::array();
    for (const Int& x : v.functional) entry["functional"].push_back(int_to_json(x));
    entry["pairing"] = gauss_to_json(v.pairing);
    out["violations"].push_back(std::move(entry));
  }
  out["results"] = ordered_json::array();
  for (const JobResult& r : report.results) {
    ordered_json entry;
    entry["j0"] = r.j0;
    entry["factors"] = ordered_json::array();
    for (const MonodromyFactor& f : r.poly.factors())
      entry["factors"].push_back(factor_to_json(f));
    entry["degree"] = int_to_json(r.poly.degree());
    entry["certified"] = r.poly.certified();
    if (spec.options.expand) {
      auto coeff = expand(r.poly, spec.options.digits);
      entry["expanded"] = ordered_json::array();
      for (const auto& c : coeff)
        entry["expanded"].push_back(ordered_json{
            {"re", format_double(c.real(), spec.options.digits)},
            {"im", format_double(c.imag(), spec.options.digits)}});
    }
    if (spec.options.zeta) {
      entry["zeta"] = ordered_json::array();
      for (const ZetaFactor& z : to_zeta_form(r.poly)) {
        ordered_json zf;
        zf["d"] = int_to_json(z.degree);
        zf["delta"] = gauss_to_json(z.exponent);
        zf["multiplicity"] = int_to_json(z.multiplicity);
        entry["zeta"].push_back(std::move(zf));
      }
    }
    out["results"].push_back(std::move(entry));
  }
  ordered_json input;
  input["points"] = ordered_json::array();
  for (const IntVec& p : spec.points) {
    ordered_json row = ordered_json::array();
    for (const Int& x : p) row.push_back(int_to_json(x));
    input["points"].push_back(std::move(row));
  }
  input["gamma"] = ordered_json::array();
  for (const GaussRat& g : spec.gamma) input["gamma"].push_back(gauss_to_json(g));
  if (spec.j0)
    input["j0"] = *spec.j0;
  else
    input["j0"] = "all";
  out["input"] = std::move(input);
  return out;
}

FactoredCharPoly factored_from_json(const json& result) {
  std::vector<MonodromyFactor> factors;
  for (const json& f : result.at("factors")) {
    Int d = int_from_json(f.at("d"), "factor d");
    GaussRat delta = gauss_from_json(f.at("delta"), "factor delta");
    Int mult = int_from_json(f.at("multiplicity"), "factor multiplicity");
    factors.push_back(make_factor(std::move(d), std::move(delta), std::move(mult)));
  }
  return FactoredCharPoly::canonicalize(std::move(factors),
                                        result.value("certified", true));
}

}  // namespace gkz
