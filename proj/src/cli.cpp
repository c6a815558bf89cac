#include "lensspec/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "lensspec/report.hpp"

namespace lensspec {

namespace {

struct Options {
  Int q = 0;
  std::vector<Int> rotations;
  std::vector<Int> second_rotations;
  bool has_second = false;
  Int padding = 0;
  Int kmax = 10;
  Int order = 3;
  bool symbolic = false;
  std::string format = "text";
  Int qmin = 0;
  Int qmax = 0;
  std::string mode = "rigidity";
  Int threads = 0;
  std::string out_file;
  bool timing = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

bool is_integer(const std::string& token) {
  if (token.empty()) return false;
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9') return false;
  return true;
}

LensSpace make_space(Int q, std::vector<Int> rotations, Int padding, const char* what) {
  if (q == 1 && rotations.empty()) rotations = {0, 0};
  if (rotations.empty()) throw UsageError(std::string(what) + ": at least one rotation is required for q > 1");
  return reduce(q, rotations, padding);
}

Json raw_input(Int q, const std::vector<Int>& rotations, Int padding) {
  Json j;
  j["q"] = q;
  j["rotations"] = rotations;
  j["padding"] = padding;
  return j;
}

std::string signs_text(const IsometryWitness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.signs.size(); ++i) s += (i ? "," : "") + std::string(w.signs[i] > 0 ? "+1" : "-1");
  return s + ")";
}

std::string perm_text(const IsometryWitness& w, char sep) {
  std::string s;
  for (std::size_t i = 0; i < w.permutation.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(w.permutation[i]);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int cmd_spectrum(const Options& o, Format fmt, std::ostream& out) {
  if (o.kmax < 0) throw UsageError("--kmax must be non-negative");
  const LensSpace space = make_space(o.q, o.rotations, o.padding, "spectrum");
  const SpectrumTable table = spectrum_table(space, o.kmax);
  switch (fmt) {
    case Format::Text:
      out << space.to_string() << " on S^" << space.sphere_dimension() << ", k = 0.." << o.kmax << "\n";
      out << std::setw(6) << "k" << std::setw(14) << "eigenvalue" << std::setw(16) << "multiplicity" << "\n";
      for (const SpectrumRow& r : table.rows)
        out << std::setw(6) << r.k << std::setw(14) << r.eigenvalue << std::setw(16) << r.multiplicity << "\n";
      break;
    case Format::Csv:
      out << "k,eigenvalue,multiplicity\n";
      for (const SpectrumRow& r : table.rows) out << r.k << ',' << r.eigenvalue << ',' << r.multiplicity << "\n";
      break;
    case Format::JsonLines: {
      Json result;
      result["space"] = to_json(space);
      result["rows"] = Json::array();
      for (const SpectrumRow& r : table.rows) result["rows"].push_back(to_json(r));
      Json input = raw_input(o.q, o.rotations, o.padding);
      input["kmax"] = o.kmax;
      out << envelope("spectrum", input, result).dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

Json pair_input(const Options& o) {
  Json input;
  input["q"] = o.q;
  input["first"] = o.rotations;
  input["second"] = o.second_rotations;
  input["padding"] = o.padding;
  return input;
}

int cmd_isometric(const Options& o, Format fmt, std::ostream& out) {
  if (!o.has_second) throw UsageError("isometric: expected two rotation lists separated by --");
  const LensSpace a = make_space(o.q, o.rotations, o.padding, "first space");
  const LensSpace b = make_space(o.q, o.second_rotations, o.padding, "second space");
  const auto witness = is_isometric(a, b);
  const std::string verdict = witness ? "YES" : "NO";
  switch (fmt) {
    case Format::Text:
      out << a.to_string() << " vs " << b.to_string() << ": " << verdict;
      if (witness)
        out << "  witness l=" << witness->l << " signs=" << signs_text(*witness) << " permutation=("
            << perm_text(*witness, ',') << ")";
      out << "\n";
      break;
    case Format::Csv:
      out << "first,second,verdict,l,signs,permutation\n";
      out << csv_field(a.to_string()) << ',' << csv_field(b.to_string()) << ',' << verdict << ',';
      if (witness) {
        std::string signs;
        for (std::size_t i = 0; i < witness->signs.size(); ++i) signs += (i ? " " : "") + std::to_string(witness->signs[i]);
        out << witness->l << ',' << signs << ',' << perm_text(*witness, ' ');
      } else {
        out << ",,";
      }
      out << "\n";
      break;
    case Format::JsonLines: {
      Json result;
      result["first"] = to_json(a);
      result["second"] = to_json(b);
      result["verdict"] = verdict;
      result["witness"] = witness ? to_json(*witness) : Json(nullptr);
      out << envelope("isometric", pair_input(o), result).dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

std::string_view reason_text(IsospectralReason r) {
  switch (r) {
    case IsospectralReason::Equal: return "equal";
    case IsospectralReason::GroupOrdersDiffer: return "group_orders_differ";
    case IsospectralReason::MultiplicityDiffers: return "multiplicity_differs";
  }
  return "equal";
}

int cmd_isospectral(const Options& o, Format fmt, std::ostream& out) {
  if (!o.has_second) throw UsageError("isospectral: expected two rotation lists separated by --");
  const LensSpace a = make_space(o.q, o.rotations, o.padding, "first space");
  const LensSpace b = make_space(o.q, o.second_rotations, o.padding, "second space");
  const IsospectralVerdict v = is_isospectral(a, b);
  const std::string verdict = v.isospectral ? "YES" : "NO";
  std::optional<std::pair<Int, Int>> at;
  if (v.first_difference) at = std::pair{multiplicity(a, *v.first_difference), multiplicity(b, *v.first_difference)};
  switch (fmt) {
    case Format::Text:
      out << a.to_string() << " vs " << b.to_string() << ": " << verdict;
      if (v.isospectral) out << "  (multiplicities agree for k <= " << isospectrality_bound(a) << ")";
      else if (at) out << "  first differing k = " << *v.first_difference << " (" << at->first << " vs " << at->second << ")";
      else out << "  (" << reason_text(v.reason) << ")";
      out << "\n";
      break;
    case Format::Csv:
      out << "first,second,verdict,reason,first_difference,multiplicity_first,multiplicity_second\n";
      out << csv_field(a.to_string()) << ',' << csv_field(b.to_string()) << ',' << verdict << ',' << reason_text(v.reason)
          << ',';
      if (at) out << *v.first_difference << ',' << at->first << ',' << at->second;
      else out << ",,";
      out << "\n";
      break;
    case Format::JsonLines: {
      Json result;
      result["first"] = to_json(a);
      result["second"] = to_json(b);
      result["verdict"] = verdict;
      result["reason"] = std::string(reason_text(v.reason));
      result["first_difference"] = v.first_difference ? Json(*v.first_difference) : Json(nullptr);
      result["multiplicities"] = at ? Json::array({at->first, at->second}) : Json(nullptr);
      out << envelope("isospectral", pair_input(o), result).dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

std::string exponent_label(const Rational& e) { return "t^(" + to_string(e) + ")"; }

// c = inv_pi / pi + s * sqrt(pi) with s = R * x: render x next to the symbol.
std::string symbolic_text(const HeatTerm& t, const Rational& curvature) {
  if (t.coefficient.sqrt_pi.numerator() == 0 || curvature.numerator() == 0 || t.exponent != Rational(1, 2)) return t.coefficient.to_string();
  HeatCoefficient head{t.coefficient.inv_pi, Rational(0)};
  const Rational x = t.coefficient.sqrt_pi / curvature;
  std::string s = head.inv_pi.numerator() != 0 ? head.to_string() + (x.numerator() < 0 ? " - " : " + ") : (x.numerator() < 0 ? "-" : "");
  return s + to_string(x.numerator() < 0 ? -x : x) + " · (R1313 + R2323) · √π";
}

int cmd_heat(const Options& o, Format fmt, std::ostream& out) {
  const LensSpace space = make_space(o.q, o.rotations, o.padding, "heat");
  CurvatureContext ctx = CurvatureContext::three_sphere();
  ctx.symbolic = o.symbolic;
  const HeatExpansion e = heat_expansion_3d(space, o.order, ctx);
  const SingularDecomposition d = decompose_singular(space);
  switch (fmt) {
    case Format::Text:
      out << "heat trace of " << space.to_string() << " (alpha=" << d.alpha << ", beta=" << d.beta << ", g=" << d.g
          << ")\n";
      for (const HeatTerm& t : e.terms) {
        out << "  " << std::left << std::setw(10) << exponent_label(t.exponent) << std::right << "  "
            << (ctx.symbolic ? symbolic_text(t, ctx.curvature_sum()) : t.coefficient.to_string()) << "  ~ "
            << decimal(t.coefficient.value()) << "\n";
      }
      if (e.strata.empty()) {
        out << "  stratum terms: none\n";
      } else {
        for (const StratumTerm& s : e.strata)
          out << "  stratum " << s.label << ": isotropy " << s.isotropy_order << ", b0 = " << to_string(s.b0)
              << ", b1 = " << to_string(s.b1) << "\n";
      }
      if (e.truncated) out << "  truncated: " << e.terms.size() << " of " << e.requested_order << " terms available\n";
      break;
    case Format::Csv:
      out << "exponent,inv_pi,sqrt_pi,display,decimal,exact\n";
      for (const HeatTerm& t : e.terms)
        out << to_string(t.exponent) << ',' << to_string(t.coefficient.inv_pi) << ',' << to_string(t.coefficient.sqrt_pi)
            << ',' << csv_field(t.coefficient.to_string()) << ',' << decimal(t.coefficient.value()) << ','
            << (t.exact ? "true" : "false") << "\n";
      break;
    case Format::JsonLines: {
      Json result = to_json(e);
      result["decomposition"] = to_json(d);
      Json input = raw_input(o.q, o.rotations, o.padding);
      input["order"] = o.order;
      out << envelope("heat", input, result).dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

// The worker count cannot change results, so it is not echoed.
Json sweep_input(const Options& o) {
  Json input;
  input["qmin"] = o.qmin;
  input["qmax"] = o.qmax;
  input["padding"] = o.padding;
  input["mode"] = o.mode;
  return input;
}

Json typed(std::string_view type, Json body) {
  Json j;
  j["type"] = std::string(type);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

int cmd_sweep(const Options& o, Format fmt, std::ostream& out) {
  if (o.qmin < 1 || o.qmax < o.qmin)
    throw UsageError("sweep: need 1 <= qmin <= qmax, got " + std::to_string(o.qmin) + " " + std::to_string(o.qmax));
  if (o.padding != 0 && o.padding != 1) throw UsageError("sweep: --padding must be 0 or 1");
  if (o.mode != "rigidity" && o.mode != "heat-degenerate") throw UsageError("sweep: unknown --mode '" + o.mode + "'");
  const std::size_t threads = o.threads > 0 ? static_cast<std::size_t>(o.threads) : default_thread_count();
  const Json input = sweep_input(o);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); };

  auto emit_pair = [&](const PairReport& p) {
    switch (fmt) {
      case Format::Text:
        out << "  pair " << p.first.to_string() << " " << p.second.to_string() << " isometric=" << (p.isometric ? "yes" : "no")
            << " isospectral=" << (p.isospectral ? "yes" : "no");
        if (p.first_difference) out << " first_difference=" << *p.first_difference;
        if (p.heat) out << " heat=" << to_string(*p.heat);
        out << "\n";
        break;
      case Format::Csv:
        out << "pair," << p.first.order() << ",,,,," << csv_field(p.first.to_string()) << ',' << csv_field(p.second.to_string())
            << ',' << (p.first_difference ? std::to_string(*p.first_difference) : "") << ','
            << (p.heat ? std::string(to_string(*p.heat)) : "") << "\n";
        break;
      case Format::JsonLines:
        out << envelope("sweep", input, typed("pair", to_json(p))).dump() << "\n";
        break;
    }
  };

  if (fmt == Format::Csv) out << "record,q,classes,pairs,isospectral_pairs,counterexamples,first,second,first_difference,heat\n";

  if (o.mode == "rigidity") {
    const SweepSummary s = verify_rigidity(o.qmin, o.qmax, o.padding, threads, [&](const QRecord& r, const std::vector<PairReport>& bad) {
      switch (fmt) {
        case Format::Text:
          out << "q=" << r.q << " classes=" << r.classes << " pairs=" << r.pairs << " isospectral_pairs=" << r.isospectral_pairs
              << " counterexamples=" << r.counterexamples << (r.q < kRigidityMinOrder ? " (small q)" : "") << "\n";
          break;
        case Format::Csv:
          out << "order," << r.q << ',' << r.classes << ',' << r.pairs << ',' << r.isospectral_pairs << ',' << r.counterexamples
              << ",,,,\n";
          break;
        case Format::JsonLines:
          out << envelope("sweep", input, typed("order", to_json(r))).dump() << "\n";
          break;
      }
      for (const PairReport& p : bad) emit_pair(p);
      out.flush();
    });
    std::optional<double> timing;
    if (o.timing) timing = elapsed();
    switch (fmt) {
      case Format::Text:
        out << "summary: q=" << s.qmin << ".." << s.qmax << " dimension=" << (3 + s.padding) << " spaces=" << s.spaces
            << " pairs=" << s.pairs << " isospectral_pairs=" << s.isospectral_pairs
            << " counterexamples=" << s.counterexamples.size() << " small_q_anomalies=" << s.small_q_anomalies.size()
            << " spot_checks=" << s.spot_checks << " spot_check_failures=" << s.spot_check_failures;
        if (timing) out << " wall_ms=" << decimal(*timing);
        out << "\n";
        break;
      case Format::Csv:
        out << "summary,," << s.spaces << ',' << s.pairs << ',' << s.isospectral_pairs << ',' << s.counterexamples.size()
            << ",,,,\n";
        break;
      case Format::JsonLines:
        out << envelope("sweep", input, typed("summary", to_json(s)), timing).dump() << "\n";
        break;
    }
    return s.spot_check_failures == 0 ? kExitOk : kExitInvariant;
  }

  Int found = 0;
  find_heat_degenerate(o.qmin, o.qmax, o.padding, threads, [&](Int, const std::vector<PairReport>& pairs) {
    for (const PairReport& p : pairs) emit_pair(p);
    found += static_cast<Int>(pairs.size());
    out.flush();
  });
  std::optional<double> timing;
  if (o.timing) timing = elapsed();
  switch (fmt) {
    case Format::Text:
      out << "summary: q=" << o.qmin << ".." << o.qmax << " heat_degenerate_pairs=" << found;
      if (timing) out << " wall_ms=" << decimal(*timing);
      out << "\n";
      break;
    case Format::Csv:
      out << "summary,,,,,,,,," << found << "\n";
      break;
    case Format::JsonLines: {
      Json result;
      result["qmin"] = o.qmin;
      result["qmax"] = o.qmax;
      result["padding"] = o.padding;
      result["heat_degenerate_pairs"] = found;
      out << envelope("sweep", input, typed("summary", result), timing).dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;

  // "a b -- c d --flag v": integers right after "--" form the second list.
  std::vector<std::string> head;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--" && !o.has_second) {
      o.has_second = true;
      std::size_t j = i + 1;
      for (; j < args.size() && is_integer(args[j]); ++j) o.second_rotations.push_back(std::stoll(args[j]));
      head.insert(head.end(), args.begin() + static_cast<std::ptrdiff_t>(j), args.end());
      break;
    }
    head.push_back(args[i]);
  }

  CLI::App app{"Spectra, isometry and heat invariants of orbifold lens spaces", "lensspec"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json-lines or csv")->check(CLI::IsMember({"text", "json-lines", "csv"}));
  };
  auto add_padding = [&](CLI::App* sub) {
    sub->add_option("-W,--padding", o.padding, "number of fixed coordinates (0 or 1)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "multiplicity table of one space");
  spectrum->add_option("q", o.q, "group order")->required();
  spectrum->add_option("rotations", o.rotations, "rotation numerators");
  spectrum->add_option("--kmax", o.kmax, "largest harmonic degree");
  add_padding(spectrum);
  add_format(spectrum);

  auto* isometric = app.add_subcommand("isometric", "isometry test: q p1 .. pn -- s1 .. sn");
  auto* isospectral = app.add_subcommand("isospectral", "isospectrality test: q p1 .. pn -- s1 .. sn");
  for (auto* sub : {isometric, isospectral}) {
    sub->add_option("q", o.q, "group order")->required();
    sub->add_option("rotations", o.rotations, "rotations of the first space")->required();
    add_padding(sub);
    add_format(sub);
  }

  auto* heat = app.add_subcommand("heat", "small-t heat trace coefficients (3D)");
  heat->add_option("q", o.q, "group order")->required();
  heat->add_option("rotations", o.rotations, "rotation numerators");
  heat->add_option("--order", o.order, "number of terms");
  heat->add_flag("--symbolic", o.symbolic, "show the curvature factor of the t^(1/2) term");
  add_padding(heat);
  add_format(heat);

  auto* sweep = app.add_subcommand("sweep", "exhaustive search over a range of q");
  sweep->add_option("qmin", o.qmin, "smallest order")->required();
  sweep->add_option("qmax", o.qmax, "largest order")->required();
  sweep->add_option("--mode", o.mode, "rigidity or heat-degenerate");
  sweep->add_option("--threads", o.threads, "worker threads (default: LENSSPEC_THREADS or hardware)")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", o.timing, "include wall-clock time");
  add_padding(sweep);
  add_format(sweep);

  for (auto* sub : {spectrum, heat, sweep}) sub->add_option("--out", o.out_file, "write the report to this file");

  try {
    std::vector<std::string> reversed(head.rbegin(), head.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.has_second && !isometric->parsed() && !isospectral->parsed()) {
    err << "error: a second rotation list is only accepted by isometric and isospectral\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) {
      err << "error: cannot open --out file '" << o.out_file << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    const Format fmt = parse_format(o.format);
    if (spectrum->parsed()) return cmd_spectrum(o, fmt, *sink);
    if (isometric->parsed()) return cmd_isometric(o, fmt, *sink);
    if (isospectral->parsed()) return cmd_isospectral(o, fmt, *sink);
    if (heat->parsed()) return cmd_heat(o, fmt, *sink);
    return cmd_sweep(o, fmt, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LensError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? kExitInvariant : kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace lensspec
