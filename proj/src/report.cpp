#include "lensspec/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace lensspec {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json-lines") return Format::JsonLines;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json-lines or csv)");
}

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

Json to_json(const LensSpace& space) {
  Json j;
  j["q"] = space.order();
  j["rotations"] = std::vector<Int>(space.rotations().begin(), space.rotations().end());
  j["padding"] = space.padding();
  j["label"] = space.to_string();
  return j;
}

LensSpace lens_space_from_json(const Json& j) {
  return LensSpace(j.at("q").get<Int>(), j.at("rotations").get<std::vector<Int>>(), j.at("padding").get<Int>());
}

Json to_json(const IsometryWitness& witness) {
  Json j;
  j["l"] = witness.l;
  j["signs"] = witness.signs;
  j["permutation"] = witness.permutation;
  return j;
}

IsometryWitness witness_from_json(const Json& j) {
  IsometryWitness w;
  w.l = j.at("l").get<Int>();
  w.signs = j.at("signs").get<std::vector<int>>();
  w.permutation = j.at("permutation").get<std::vector<std::size_t>>();
  return w;
}

Json to_json(const SpectrumRow& row) {
  Json j;
  j["k"] = row.k;
  j["eigenvalue"] = row.eigenvalue;
  j["multiplicity"] = row.multiplicity;
  return j;
}

SpectrumRow spectrum_row_from_json(const Json& j) {
  return {j.at("k").get<Int>(), j.at("eigenvalue").get<Int>(), j.at("multiplicity").get<Int>()};
}

Json to_json(const SingularDecomposition& d) {
  Json j;
  j["q1"] = d.q1;
  j["q2"] = d.q2;
  j["alpha_hat"] = d.alpha_hat;
  j["beta_hat"] = d.beta_hat;
  j["g"] = d.g;
  j["alpha"] = d.alpha;
  j["beta"] = d.beta;
  return j;
}

SingularDecomposition decomposition_from_json(const Json& j) {
  SingularDecomposition d;
  d.q1 = j.at("q1").get<Int>();
  d.q2 = j.at("q2").get<Int>();
  d.alpha_hat = j.at("alpha_hat").get<Int>();
  d.beta_hat = j.at("beta_hat").get<Int>();
  d.g = j.at("g").get<Int>();
  d.alpha = j.at("alpha").get<Int>();
  d.beta = j.at("beta").get<Int>();
  return d;
}

Json to_json(const HeatTerm& term) {
  Json j;
  j["exponent"] = to_string(term.exponent);
  j["inv_pi"] = to_string(term.coefficient.inv_pi);
  j["sqrt_pi"] = to_string(term.coefficient.sqrt_pi);
  j["exact"] = term.exact;
  j["display"] = term.coefficient.to_string();
  j["decimal"] = decimal(term.coefficient.value());
  return j;
}

HeatTerm heat_term_from_json(const Json& j) {
  HeatTerm t;
  t.exponent = parse_rational(j.at("exponent").get<std::string>());
  t.coefficient.inv_pi = parse_rational(j.at("inv_pi").get<std::string>());
  t.coefficient.sqrt_pi = parse_rational(j.at("sqrt_pi").get<std::string>());
  t.exact = j.at("exact").get<bool>();
  return t;
}

Json to_json(const StratumTerm& term) {
  Json j;
  j["label"] = term.label;
  j["isotropy_order"] = term.isotropy_order;
  j["b0"] = to_string(term.b0);
  j["b1"] = to_string(term.b1);
  j["b0_trig"] = decimal(term.b0_trig);
  j["b1_trig"] = decimal(term.b1_trig);
  return j;
}

StratumTerm stratum_term_from_json(const Json& j) {
  StratumTerm t;
  t.label = j.at("label").get<std::string>();
  t.isotropy_order = j.at("isotropy_order").get<Int>();
  t.b0 = parse_rational(j.at("b0").get<std::string>());
  t.b1 = parse_rational(j.at("b1").get<std::string>());
  t.b0_trig = std::stod(j.at("b0_trig").get<std::string>());
  t.b1_trig = std::stod(j.at("b1_trig").get<std::string>());
  return t;
}

Json to_json(const HeatExpansion& expansion) {
  Json j;
  j["space"] = to_json(expansion.space);
  j["requested_order"] = expansion.requested_order;
  j["truncated"] = expansion.truncated;
  j["terms"] = Json::array();
  for (const HeatTerm& t : expansion.terms) j["terms"].push_back(to_json(t));
  j["strata"] = Json::array();
  for (const StratumTerm& s : expansion.strata) j["strata"].push_back(to_json(s));
  return j;
}

HeatExpansion heat_expansion_from_json(const Json& j) {
  HeatExpansion e{lens_space_from_json(j.at("space")), {}, {}, j.at("requested_order").get<Int>(),
                  j.at("truncated").get<bool>()};
  for (const Json& t : j.at("terms")) e.terms.push_back(heat_term_from_json(t));
  for (const Json& s : j.at("strata")) e.strata.push_back(stratum_term_from_json(s));
  return e;
}

Json to_json(const PairReport& report) {
  Json j;
  j["first"] = to_json(report.first);
  j["second"] = to_json(report.second);
  j["isometric"] = report.isometric;
  j["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  j["isospectral"] = report.isospectral;
  j["first_difference"] = report.first_difference ? Json(*report.first_difference) : Json(nullptr);
  j["heat"] = report.heat ? Json(std::string(to_string(*report.heat))) : Json(nullptr);
  return j;
}

PairReport pair_report_from_json(const Json& j) {
  PairReport r(lens_space_from_json(j.at("first")), lens_space_from_json(j.at("second")));
  r.isometric = j.at("isometric").get<bool>();
  if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
  r.isospectral = j.at("isospectral").get<bool>();
  if (!j.at("first_difference").is_null()) r.first_difference = j.at("first_difference").get<Int>();
  if (!j.at("heat").is_null()) {
    const auto h = j.at("heat").get<std::string>();
    if (h == "GuaranteedEqual") r.heat = HeatVerdict::GuaranteedEqual;
    else if (h == "Unknown") r.heat = HeatVerdict::Unknown;
    else throw std::invalid_argument("unknown heat verdict '" + h + "'");
  }
  return r;
}

Json to_json(const QRecord& record) {
  Json j;
  j["q"] = record.q;
  j["classes"] = record.classes;
  j["pairs"] = record.pairs;
  j["isospectral_pairs"] = record.isospectral_pairs;
  j["counterexamples"] = record.counterexamples;
  return j;
}

QRecord q_record_from_json(const Json& j) {
  QRecord r;
  r.q = j.at("q").get<Int>();
  r.classes = j.at("classes").get<Int>();
  r.pairs = j.at("pairs").get<Int>();
  r.isospectral_pairs = j.at("isospectral_pairs").get<Int>();
  r.counterexamples = j.at("counterexamples").get<Int>();
  return r;
}

Json to_json(const SweepSummary& summary, bool with_timing) {
  Json j;
  j["qmin"] = summary.qmin;
  j["qmax"] = summary.qmax;
  j["n"] = summary.n;
  j["padding"] = summary.padding;
  j["dimension"] = 2 * summary.n + summary.padding - 1;
  j["spaces"] = summary.spaces;
  j["isometry_classes"] = summary.spaces;
  j["pairs"] = summary.pairs;
  j["isospectral_pairs"] = summary.isospectral_pairs;
  j["counterexamples"] = static_cast<Int>(summary.counterexamples.size());
  j["counterexample_pairs"] = Json::array();
  for (const PairReport& p : summary.counterexamples) j["counterexample_pairs"].push_back(to_json(p));
  j["small_q_anomalies"] = Json::array();
  for (const PairReport& p : summary.small_q_anomalies) j["small_q_anomalies"].push_back(to_json(p));
  j["spot_checks"] = summary.spot_checks;
  j["spot_check_failures"] = summary.spot_check_failures;
  if (with_timing) j["wall_ms"] = decimal(summary.wall_ms);
  return j;
}

SweepSummary sweep_summary_from_json(const Json& j) {
  SweepSummary s;
  s.qmin = j.at("qmin").get<Int>();
  s.qmax = j.at("qmax").get<Int>();
  s.n = j.at("n").get<Int>();
  s.padding = j.at("padding").get<Int>();
  s.spaces = j.at("spaces").get<Int>();
  s.pairs = j.at("pairs").get<Int>();
  s.isospectral_pairs = j.at("isospectral_pairs").get<Int>();
  for (const Json& p : j.at("counterexample_pairs")) s.counterexamples.push_back(pair_report_from_json(p));
  for (const Json& p : j.at("small_q_anomalies")) s.small_q_anomalies.push_back(pair_report_from_json(p));
  if (static_cast<Int>(s.counterexamples.size()) != j.at("counterexamples").get<Int>())
    throw std::invalid_argument("counterexample count does not match the listed pairs");
  s.spot_checks = j.at("spot_checks").get<Int>();
  s.spot_check_failures = j.at("spot_check_failures").get<Int>();
  if (j.contains("wall_ms")) s.wall_ms = std::stod(j.at("wall_ms").get<std::string>());
  return s;
}

Json envelope(std::string_view command, Json input, Json result, std::optional<double> timing_ms) {
  Json j;
  j["command"] = std::string(command);
  j["version"] = std::string(kVersion);
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  if (timing_ms) j["timing_ms"] = decimal(*timing_ms);
  return j;
}

}  // namespace lensspec
