#include "burnside/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"

#include "burnside/errors.hpp"
#include "burnside/fp_poly.hpp"

namespace burnside::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::uint32_t parse_uint(std::string_view text, const std::string& what) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || v > 0xFFFFFFFFULL) {
    throw InvalidInput("bad " + what + " '" + std::string(text) + "'");
  }
  return static_cast<std::uint32_t>(v);
}

Json residues(std::span<const Residue> v) { return Json(std::vector<Residue>(v.begin(), v.end())); }

Json degree_json(const Degree& d) {
  return d.is_finite() ? Json(d.value()) : Json("-inf");
}

}  // namespace

GroupSpec parse_group_file(std::istream& in, std::uint32_t prime_cap) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<PrimeField> field;
  std::vector<Perm> gens;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (!field) {
        if (line.substr(0, 2) != "p=") throw InvalidInput("expected 'p=<prime>'");
        field.emplace(parse_uint(line.substr(2), "modulus"), prime_cap);
      } else {
        gens.push_back(Perm::parse(*field, line));
      }
    } catch (const InputError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw InputError(e.what(), line_no);
    }
  }
  if (!field) throw InputError("missing 'p=<prime>' header", line_no);
  if (gens.empty()) throw InputError("no generators given", line_no);
  return GroupSpec(*field, std::move(gens));
}

std::string render_group_file(const GroupSpec& G) {
  std::string out = "p=" + std::to_string(G.p()) + "\n";
  for (const Perm& g : G.generators()) out += g.to_string() + "\n";
  return out;
}

DiffSet parse_diff_set(const PrimeField& field, const std::string& text) {
  std::vector<Residue> elems;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    elems.push_back(parse_uint(rest.substr(0, comma), "set element"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return DiffSet(field, std::move(elems));
}

std::string digest(const std::string& canonical_input) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_input) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json classification_to_json(const GroupSpec& G, const Classification& c) {
  Json j;
  j["p"] = G.p();
  Json gens = Json::array();
  for (const Perm& g : G.generators()) gens.push_back(g.to_string());
  j["generators"] = gens;
  j["verdict"] = std::string(to_string(c.verdict));
  if (c.witness) {
    const AffineWitness& w = *c.witness;
    Json cert;
    cert["relabeling"] = w.relabeling.to_string();
    cert["relabeling_cycles"] = w.relabeling.to_cycle_string();
    cert["U"] = residues(w.U.elements());
    Json emb = Json::array();
    for (const AffineCoeffs& ab : w.embedding) emb.push_back(Json{{"a", ab.a}, {"b", ab.b}});
    cert["embedding"] = emb;
    cert["group_order"] = w.group_order;
    const std::size_t p = G.p();
    cert["derived_series"] = derived_series(enumerate_group(G, p * (p - 1)));
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  j["certificate_verified"] = verify_certificate(G, c);
  return j;
}

std::pair<GroupSpec, Classification> classification_from_json(const Json& j) {
  try {
    const PrimeField field(j.at("p").get<std::uint32_t>());
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Perm::parse(field, g.get<std::string>()));
    GroupSpec G(field, std::move(gens));
    Classification c{verdict_from_string(j.at("verdict").get<std::string>()), std::nullopt};
    const Json& cert = j.at("certificate");
    if (!cert.is_null()) {
      std::vector<AffineCoeffs> emb;
      for (const auto& ab : cert.at("embedding")) {
        emb.push_back({ab.at("a").get<Residue>(), ab.at("b").get<Residue>()});
      }
      c.witness = AffineWitness{Perm::parse(field, cert.at("relabeling").get<std::string>()),
                                DiffSet(field, cert.at("U").get<std::vector<Residue>>()),
                                std::move(emb), cert.at("group_order").get<std::size_t>()};
    }
    return {std::move(G), std::move(c)};
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed classification JSON: ") + e.what());
  }
}

Json aut_to_json(const AutResult& aut) {
  Json j;
  j["p"] = aut.U.p();
  j["U"] = residues(aut.U.elements());
  j["mult_stabilizer"] = aut.mult_stabilizer;
  j["count"] = aut.automorphisms.size();
  j["expected_count"] = std::size_t{aut.U.p()} * aut.mult_stabilizer.size();
  j["all_affine"] = aut.all_affine;
  Json autos = Json::array();
  for (const Perm& pi : aut.automorphisms) {
    Json e;
    e["images"] = pi.to_string();
    if (const auto ab = recognize_affine(pi)) {
      e["a"] = ab->a;
      e["b"] = ab->b;
    } else {
      e["a"] = nullptr;
      e["b"] = nullptr;
    }
    autos.push_back(e);
  }
  j["automorphisms"] = autos;
  return j;
}

Json trace_to_json(const DiffSet& U, const Perm& pi, const TraceReport& report) {
  Json j;
  j["p"] = U.p();
  j["U"] = residues(U.elements());
  j["perm"] = pi.to_string();
  j["reduced_U"] = residues(report.reduced_U.elements());
  j["n"] = degree_json(report.n);
  j["w_max"] = report.w_max;
  j["r"] = report.r;
  j["S_values"] = report.S_values;
  Json steps = Json::array();
  for (const TraceStep& s : report.steps) {
    steps.push_back(Json{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  }
  j["steps"] = steps;
  j["verdict"] = to_string(report.verdict);
  return j;
}

Json scan_to_json(const ScanSummary& summary) {
  Json j;
  j["p"] = summary.p;
  j["subset_count"] = summary.rows.size();
  j["total_automorphisms"] = summary.total_automorphisms;
  std::size_t violations = 0;
  for (const ScanRow& row : summary.rows) violations += row.all_affine ? 0 : 1;
  j["violations"] = violations;

  // Complement symmetry, reported rather than exploited: row for U and for
  // its complement must agree on |Aut|.
  bool complement_consistent = true;
  if (!summary.rows.empty()) {
    const std::uint64_t full = (std::uint64_t{1} << (summary.p - 1)) - 1;
    for (std::size_t idx = 0; idx < summary.rows.size(); ++idx) {
      const std::uint64_t mask = idx + 1;
      const std::size_t partner = static_cast<std::size_t>((full ^ mask) - 1);
      complement_consistent = complement_consistent && summary.rows[idx].automorphism_count ==
                                                           summary.rows[partner].automorphism_count;
    }
  }
  j["complement_consistent"] = complement_consistent;

  Json rows = Json::array();
  for (const ScanRow& row : summary.rows) {
    rows.push_back(Json{{"U", residues(row.U.elements())},
                        {"size", row.U.size()},
                        {"mult_stabilizer_size", row.mult_stabilizer_size},
                        {"automorphism_count", row.automorphism_count},
                        {"r", row.min_nonzero_power_sum},
                        {"all_affine", row.all_affine}});
  }
  j["rows"] = rows;
  return j;
}

Json interp_to_json(const Perm& pi) {
  const FpPoly f = interpolate(pi);
  Json j;
  j["p"] = pi.degree();
  j["perm"] = pi.to_string();
  j["coefficients"] = residues(f.coeffs());
  j["degree"] = degree_json(f.degree());
  j["polynomial"] = f.to_string();
  if (const auto ab = recognize_affine(pi)) {
    j["affine"] = Json{{"a", ab->a}, {"b", ab->b}};
  } else {
    j["affine"] = nullptr;
  }
  return j;
}

namespace {

void render_text(const Json& j, std::ostream& os, int indent) {
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    os << std::string(indent, ' ') << std::left << std::setw(static_cast<int>(width)) << key << " : ";
    if (value.is_object()) {
      os << '\n';
      render_text(value, os, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << '\n';
      for (const auto& item : value) {
        std::string line;
        for (const auto& [k, v] : item.items()) {
          if (!line.empty()) line += "  ";
          line += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        os << std::string(indent + 2, ' ') << line << '\n';
      }
    } else {
      os << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

struct Options {
  std::string format = "json";
  std::string output;
  std::string group_path;
  std::uint32_t p = 0;
  std::string set;
  std::string perm;
  unsigned jobs = 1;
  std::uint32_t unsafe_cap = 0;
};

struct Outcome {
  Json arguments;
  std::string canonical_input;
  Json result;
  int exit_code = kOk;
  std::string status = "ok";
};

Outcome do_classify(const Options& o) {
  std::ifstream in(o.group_path);
  if (!in) throw InputError("cannot open group file '" + o.group_path + "'", 0);
  const GroupSpec G = parse_group_file(in);
  const Classification c = classify(G);
  Outcome out{Json{{"group", o.group_path}}, "classify\n" + render_group_file(G),
              classification_to_json(G, c)};
  if (!out.result["certificate_verified"].get<bool>()) {
    throw InternalInvariantViolation("classification failed its own verification",
                                     out.result.dump());
  }
  return out;
}

Outcome do_aut(const Options& o) {
  const PrimeField F(o.p);
  const DiffSet U = parse_diff_set(F, o.set);
  const AutResult aut = enumerate_diff_preserving(U);
  Outcome out{Json{{"p", o.p}, {"set", U.to_string()}}, "aut p=" + std::to_string(o.p) + " set=" + U.to_string(),
              aut_to_json(aut)};
  if (!aut.all_affine || aut.automorphisms.size() != std::size_t{o.p} * aut.mult_stabilizer.size()) {
    throw PropositionViolated("difference-preserving permutation set contradicts the affine law",
                              out.result.dump());
  }
  return out;
}

Outcome do_trace(const Options& o) {
  const PrimeField F(o.p);
  const DiffSet U = parse_diff_set(F, o.set);
  const Perm pi = Perm::parse(F, o.perm);
  const TraceReport report = run_trace(U, pi);
  Outcome out{Json{{"p", o.p}, {"set", U.to_string()}, {"perm", pi.to_string()}},
              "trace p=" + std::to_string(o.p) + " set=" + U.to_string() + " perm=" + pi.to_string(),
              trace_to_json(U, pi, report)};
  if (report.verdict != TraceVerdict::kAffine) {
    out.exit_code = kInternalError;
    out.status = "internal_error";
    out.result["counterexample"] = Json{{"U", U.to_string()}, {"perm", pi.to_string()}};
  }
  return out;
}

Outcome do_scan(const Options& o) {
  const std::uint32_t cap = o.unsafe_cap ? o.unsafe_cap : kDefaultScanPrimeCap;
  const PrimeField F(o.p, std::max(cap, kDefaultPrimeCap));
  const ScanSummary summary = scan_all_subsets(F, o.jobs, cap);
  return {Json{{"p", o.p}}, "scan p=" + std::to_string(o.p), scan_to_json(summary)};
}

Outcome do_interp(const Options& o) {
  const PrimeField F(o.p);
  const Perm pi = Perm::parse(F, o.perm);
  return {Json{{"p", o.p}, {"perm", pi.to_string()}},
          "interp p=" + std::to_string(o.p) + " perm=" + pi.to_string(), interp_to_json(pi)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burnside's theorem for groups of prime degree: classification, "
               "exhaustive difference-set automorphism checks and proof replay",
               "burnside"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", o.output, "Write the report to FILE instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a group given by generators");
  classify_cmd->add_option("--group", o.group_path, "Group file")->required();

  auto* aut_cmd = app.add_subcommand("aut", "Enumerate U-difference-preserving permutations");
  aut_cmd->add_option("--p", o.p, "Prime")->required();
  aut_cmd->add_option("--set", o.set, "Difference set u1,u2,...")->required();

  auto* trace_cmd = app.add_subcommand("trace", "Replay the polynomial argument for one permutation");
  trace_cmd->add_option("--p", o.p, "Prime")->required();
  trace_cmd->add_option("--set", o.set, "Difference set u1,u2,...")->required();
  trace_cmd->add_option("--perm", o.perm, "Images i0,i1,...")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Check every difference set for a prime");
  scan_cmd->add_option("--p", o.p, "Prime")->required();
  scan_cmd->add_option("--jobs", o.jobs, "Worker threads")
      ->envname("BURNSIDE_JOBS")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--unsafe-cap", o.unsafe_cap, "Raise the scan prime cap (default 13)");

  auto* interp_cmd = app.add_subcommand("interp", "Interpolating polynomial of a permutation");
  interp_cmd->add_option("--p", o.p, "Prime")->required();
  interp_cmd->add_option("--perm", o.perm, "Images i0,i1,...")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (command == "classify") outcome = do_classify(o);
    else if (command == "aut") outcome = do_aut(o);
    else if (command == "trace") outcome = do_trace(o);
    else if (command == "scan") outcome = do_scan(o);
    else outcome = do_interp(o);
  } catch (const InternalInvariantViolation& e) {
    outcome.status = "internal_error";
    outcome.exit_code = kInternalError;
    outcome.result = Json{{"error", e.what()}, {"counterexample", e.counterexample()}};
    err << "internal invariant violation: " << e.what() << "\n";
  } catch (const Error& e) {
    outcome.status = "invalid_input";
    outcome.exit_code = kInvalidInput;
    outcome.result = Json{{"error", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  Json report;
  report["command"] = command;
  report["arguments"] = outcome.arguments.is_null() ? Json::object() : outcome.arguments;
  report["input_digest"] = digest(outcome.canonical_input);
  report["status"] = outcome.status;
  report["result"] = outcome.result;

  std::ostringstream rendered;
  if (o.format == "json") {
    rendered << report.dump(2) << '\n';
  } else {
    render_text(report, rendered, 0);
    rendered << "elapsed : " << elapsed.count() << " ms\n";
  }

  if (o.output.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << rendered.str())) {
      err << "error: cannot write '" << o.output << "'\n";
      return kInvalidInput;
    }
  }
  return outcome.exit_code;
}

}  // namespace burnside::cli
