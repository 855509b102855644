#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "psg/apery.hpp"
#include "psg/closed_forms.hpp"
#include "psg/decompose.hpp"
#include "psg/enumeration.hpp"
#include "psg/hilbert.hpp"
#include "psg/report.hpp"
#include "psg/symmetry.hpp"

namespace psg::cli {

namespace {

constexpr std::int64_t kMaxSweep = 10'000;

enum class Format { Text, Json, Csv };

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

Json int_list(std::span<const std::int64_t> xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

Json bits(const PowerSeries& s) {
  Json out = Json::array();
  for (auto c : s.coefficients()) out.push_back(c);
  return out;
}

std::string join(std::span<const std::int64_t> xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void check_single_p(const JobSpec& job) {
  if (job.p_is_range && job.p_lo != job.p_hi) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "command '" + job.command + "' takes a single p");
  }
}

std::int64_t require_n(const JobSpec& job) {
  if (!job.n) throw ValidationError(ErrorCode::InvalidArgument, "-n is required");
  return *job.n;
}

Json classification_json(const ClassificationReport& c) {
  Json mid;
  mid["integral"] = c.midpoint.integral;
  if (c.midpoint.integral) {
    mid["value"] = c.midpoint.value;
    mid["in_semigroup"] = c.midpoint.in_semigroup;
  }
  Json out;
  out["symmetric"] = c.is_symmetric;
  out["pseudo_symmetric"] = c.is_pseudo_symmetric;
  out["completely_symmetric"] = c.is_completely_symmetric;
  out["irreducible"] = c.is_irreducible;
  out["midpoint"] = std::move(mid);
  return out;
}

Json invariants(const JobSpec& job, const GeneratorTuple& gens) {
  check_single_p(job);
  if (job.mu < 1) throw ValidationError(ErrorCode::InvalidArgument, "--mu must be >= 1");
  ReportOptions opts;
  opts.max_mu = job.mu;
  opts.verify = job.verify;
  opts.build = build_options_from_env();
  const auto r = build_report(gens, PParameter(job.p_lo), opts);

  Json out;
  out["command"] = "invariants";
  out["gens"] = int_list(gens.elements());
  out["minimal"] = gens.is_minimal();
  out["p"] = job.p_lo;
  out["ell0"] = r.ell0;
  out["frobenius"] = r.frobenius;
  out["genus"] = r.genus;
  out["sylvester_sum"] = to_decimal(r.sylvester_sum);
  Json sums = Json::array();
  for (const auto& s : r.power_sums) sums.push_back(to_decimal(s));
  out["power_sums"] = std::move(sums);
  out["apery"] = int_list(r.apery.by_residue);
  out["pf"] = int_list(r.classification.pf);
  out["type"] = r.classification.type_number;
  out["classification"] = classification_json(r.classification);
  if (r.classification.valuation) {
    const auto& v = *r.classification.valuation;
    out["valuation"] = Json{{"d1", v.d1}, {"d2", v.d2}, {"d3", v.d3}};
  } else {
    out["valuation"] = nullptr;
  }
  out["embedding_dimension"] = r.embedding_dimension;
  return out;
}

Json sweep_row(const GeneratorTuple& gens, std::int64_t p, bool verify) {
  ReportOptions opts;
  opts.max_mu = 1;
  opts.verify = verify;
  opts.embedding_dimension = false;
  opts.build = build_options_from_env();
  const auto r = build_report(gens, PParameter(p), opts);
  Json row;
  row["p"] = p;
  row["ell0"] = r.ell0;
  row["frobenius"] = r.frobenius;
  row["genus"] = r.genus;
  row["sylvester_sum"] = to_decimal(r.sylvester_sum);
  row["symmetric"] = r.classification.is_symmetric;
  row["pseudo_symmetric"] = r.classification.is_pseudo_symmetric;
  row["completely_symmetric"] = r.classification.is_completely_symmetric;
  row["type"] = r.classification.type_number;
  return row;
}

Json sweep(const JobSpec& job, const GeneratorTuple& gens) {
  if (job.p_hi < job.p_lo) throw ValidationError(ErrorCode::InvalidArgument, "empty p range");
  if (job.p_hi - job.p_lo > kMaxSweep) {
    throw ValidationError(ErrorCode::InvalidArgument, "p range longer than 10000");
  }
  Json rows = Json::array();
  for (auto p = job.p_lo; p <= job.p_hi; ++p) rows.push_back(sweep_row(gens, p, job.verify));
  Json out;
  out["command"] = "sweep";
  out["gens"] = int_list(gens.elements());
  out["rows"] = std::move(rows);
  return out;
}

Json hilbert(const JobSpec& job, const GeneratorTuple& gens) {
  check_single_p(job);
  const PParameter p(job.p_lo);
  const auto s = build_psemigroup(gens, p, build_options_from_env());
  const auto n = job.trunc.value_or(4 * std::max<std::int64_t>(s.frobenius() + 1, 1));
  if (n < 0) throw ValidationError(ErrorCode::InvalidArgument, "--trunc must be >= 0");
  const auto h = hilbert_direct(s, n);
  if (job.verify) {
    if (!(hilbert_from_apery(apery_set(s), n) == h)) {
      throw ConsistencyError(ErrorCode::CrossCheckFailed, "Hilbert series: Apery vs table");
    }
    if (gens.size() == 3 && gens[1] - gens[0] == gens[2] - gens[1] && gens[0] >= 3 &&
        job.p_lo <= gens[0] / 2) {
      if (!(arith_hilbert_closed(gens[0], gens[1] - gens[0], p, n) == h)) {
        throw ConsistencyError(ErrorCode::CrossCheckFailed, "Hilbert series: closed form vs table");
      }
    }
  }
  Json out;
  out["command"] = "hilbert";
  out["gens"] = int_list(gens.elements());
  out["p"] = job.p_lo;
  out["truncation"] = n;
  out["hilbert"] = bits(h);
  if (job.gaps) out["gaps"] = bits(gaps_series(s, n));
  return out;
}

Json decompose(const JobSpec& job, const GeneratorTuple& gens) {
  check_single_p(job);
  const auto s = build_psemigroup(gens, PParameter(job.p_lo), build_options_from_env());
  const auto t = FiniteSemigroup::from_psemigroup(s);
  const auto parts = irreducible_decomposition(t);
  if (job.verify && !is_valid_decomposition(t, parts)) {
    throw ConsistencyError(ErrorCode::CrossCheckFailed, "decomposition failed validation");
  }
  Json comps = Json::array();
  for (const auto& c : parts) {
    Json j;
    j["frobenius"] = c.frobenius();
    j["genus"] = c.genus();
    j["symmetric"] = c.is_symmetric();
    j["pseudo_symmetric"] = c.is_pseudo_symmetric();
    j["minimal_generators"] = int_list(c.minimal_generators());
    comps.push_back(std::move(j));
  }
  Json out;
  out["command"] = "decompose";
  out["gens"] = int_list(gens.elements());
  out["p"] = job.p_lo;
  out["frobenius"] = t.frobenius();
  out["irreducible"] = parts.size() == 1;
  out["components"] = std::move(comps);
  return out;
}

std::uint64_t denumerant_of(const GeneratorTuple& gens, std::int64_t n, bool verify) {
  if (n < 0) return 0;
  const auto d = denumerant_table(gens, n)(n);
  if (verify) {
    // Same count with the generators taken in the opposite order.
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    const auto el = gens.elements();
    for (auto it = el.rbegin(); it != el.rend(); ++it) {
      for (std::int64_t m = *it; m <= n; ++m) {
        c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - *it)];
      }
    }
    if (c.back() != d) throw ConsistencyError(ErrorCode::CrossCheckFailed, "denumerant mismatch");
  }
  return d;
}

Json membership(const JobSpec& job, const GeneratorTuple& gens) {
  check_single_p(job);
  const auto n = require_n(job);
  const PParameter p(job.p_lo);
  const auto d = denumerant_of(gens, n, job.verify);
  const bool member = d > static_cast<std::uint64_t>(job.p_lo);
  if (job.verify) {
    const auto s = build_psemigroup(gens, p, build_options_from_env());
    bool ok = s.contains(n) == member;
    if (gens.size() == 2) ok = ok && two_var_membership(n, gens[0], gens[1], p) == member;
    if (!ok) throw ConsistencyError(ErrorCode::CrossCheckFailed, "membership mismatch");
  }
  Json out;
  out["command"] = "membership";
  out["gens"] = int_list(gens.elements());
  out["p"] = job.p_lo;
  out["n"] = n;
  out["denumerant"] = std::to_string(d);
  out["member"] = member;
  return out;
}

Json denumerant(const JobSpec& job, const GeneratorTuple& gens) {
  const auto n = require_n(job);
  Json out;
  out["command"] = "denumerant";
  out["gens"] = int_list(gens.elements());
  out["n"] = n;
  out["denumerant"] = std::to_string(denumerant_of(gens, n, job.verify));
  return out;
}

Json apery(const JobSpec& job, const GeneratorTuple& gens) {
  check_single_p(job);
  const auto s = build_psemigroup(gens, PParameter(job.p_lo), build_options_from_env());
  const auto ap = apery_set(s, job.modulus.value_or(gens.min()));
  if (job.verify && ap.modulus == gens.min()) {
    if (frobenius_from_apery(ap) != s.frobenius() || genus_from_apery(ap) != genus(s) ||
        sylvester_sum_from_apery(ap) != sylvester_sum(s)) {
      throw ConsistencyError(ErrorCode::CrossCheckFailed, "Apery invariants mismatch");
    }
  }
  Json out;
  out["command"] = "apery";
  out["gens"] = int_list(gens.elements());
  out["p"] = job.p_lo;
  out["modulus"] = ap.modulus;
  out["by_residue"] = int_list(ap.by_residue);
  out["sorted"] = int_list(ap.sorted);
  return out;
}

// ---- text rendering ------------------------------------------------------

std::string str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += str(v[i]);
    }
    return out;
  }
  return v.dump();
}

void print_pairs(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  }
}

void print_table(std::ostream& out, const Json& rows, const char* sep, bool pad) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < keys.size(); ++i) {
      line.push_back(str(row[keys[i]]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << sep;
      if (pad && i + 1 < line.size()) {
        out << std::left << std::setw(static_cast<int>(width[i])) << line[i];
      } else {
        out << line[i];
      }
    }
    out << '\n';
  };
  emit(keys);
  for (const auto& line : cells) emit(line);
}

void print_text(std::ostream& out, const Json& doc) {
  const auto command = doc["command"].get<std::string>();
  if (command == "sweep") {
    print_table(out, doc["rows"], "  ", true);
    return;
  }
  if (command == "denumerant") {
    out << doc["denumerant"].get<std::string>() << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [k, v] : doc.items()) {
    if (k == "command") continue;
    if (k == "classification") {
      for (const auto& [ck, cv] : v.items()) {
        if (ck == "midpoint") {
          rows.emplace_back("midpoint", cv["integral"].get<bool>()
                                            ? std::to_string(cv["value"].get<std::int64_t>()) +
                                                  (cv["in_semigroup"].get<bool>() ? " (member)" : " (gap)")
                                            : "not an integer");
        } else {
          rows.emplace_back(ck, str(cv));
        }
      }
    } else if (k == "valuation" && v.is_object()) {
      rows.emplace_back("valuation", "d1=" + str(v["d1"]) + " d2=" + str(v["d2"]) + " d3=" + str(v["d3"]));
    } else if (k == "components") {
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& c = v[i];
        std::string kind = c["symmetric"].get<bool>()          ? "symmetric"
                           : c["pseudo_symmetric"].get<bool>() ? "pseudo-symmetric"
                                                               : "irreducible";
        rows.emplace_back("component " + std::to_string(i + 1),
                          "F=" + str(c["frobenius"]) + " genus=" + str(c["genus"]) + " " + kind +
                              " <" + str(c["minimal_generators"]) + ">");
      }
    } else if (v.is_array() && (k == "hilbert" || k == "gaps")) {
      std::string s;
      for (const auto& b : v) s += b.get<std::int64_t>() ? '1' : '0';
      rows.emplace_back(k, s);
    } else {
      rows.emplace_back(k, str(v));
    }
  }
  print_pairs(out, rows);
}

void print_csv(std::ostream& out, const Json& doc) { print_table(out, doc["rows"], ",", false); }

int report_error(std::ostream& err, const std::exception& e) {
  const auto code = exit_code_for(e);
  if (const auto* pe = dynamic_cast<const Error*>(&e)) {
    err << "error: " << to_string(pe->code()) << ": " << e.what() << '\n';
  } else {
    err << "error: " << e.what() << '\n';
  }
  return code;
}

Json error_json(const std::exception& e) {
  Json out;
  if (const auto* pe = dynamic_cast<const Error*>(&e)) {
    out["error"] = std::string(to_string(pe->code()));
  } else {
    out["error"] = "Internal";
  }
  out["message"] = e.what();
  out["exit"] = exit_code_for(e);
  return out;
}

int run_batch(std::istream& in, std::ostream& out) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  std::vector<std::string> results(lines.size());
  std::vector<int> codes(lines.size(), 0);
  std::size_t next = 0;
  std::mutex mu;
  const auto worker = [&] {
    while (true) {
      std::size_t i = 0;
      {
        std::lock_guard lock(mu);
        if (next == lines.size()) return;
        i = next++;
      }
      try {
        results[i] = run_job(job_from_json(Json::parse(lines[i]))).dump();
      } catch (const Json::exception& e) {
        const ValidationError ve(ErrorCode::InvalidArgument, std::string("bad JSON: ") + e.what());
        results[i] = error_json(ve).dump();
        codes[i] = 2;
      } catch (const std::exception& e) {
        results[i] = error_json(e).dump();
        codes[i] = exit_code_for(e);
      }
    }
  };
  const auto n_threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1,
                                                 std::max<std::size_t>(lines.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : results) out << r << '\n';
  int code = 0;
  for (auto c : codes) {
    if (c == 1) return 1;
    if (c == 2) code = 2;
  }
  return code;
}

}  // namespace

std::vector<std::int64_t> parse_gens(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    auto piece = std::string_view(text).substr(start, comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(parse_int(piece, "generator"));
    start = comma + 1;
  }
  return out;
}

void parse_p(const std::string& text, JobSpec& job) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    job.p_lo = job.p_hi = parse_int(text, "p");
    job.p_is_range = false;
  } else {
    job.p_lo = parse_int(std::string_view(text).substr(0, dots), "p");
    job.p_hi = parse_int(std::string_view(text).substr(dots + 2), "p");
    job.p_is_range = true;
  }
  if (job.p_lo < 0 || job.p_hi < 0) {
    throw ValidationError(ErrorCode::InvalidArgument, "p must be non-negative");
  }
}

JobSpec job_from_json(const Json& line) {
  if (!line.is_object()) throw ValidationError(ErrorCode::InvalidArgument, "job must be an object");
  JobSpec job;
  const auto get_int = [&](const char* key) -> std::optional<std::int64_t> {
    if (!line.contains(key)) return std::nullopt;
    const auto& v = line[key];
    if (!v.is_number_integer()) {
      throw ValidationError(ErrorCode::InvalidArgument, std::string("'") + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
  };
  if (line.contains("command")) job.command = line["command"].get<std::string>();
  if (!line.contains("gens")) throw ValidationError(ErrorCode::EmptyInput, "'gens' is required");
  const auto& g = line["gens"];
  if (g.is_string()) {
    job.gens = parse_gens(g.get<std::string>());
  } else if (g.is_array()) {
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw ValidationError(ErrorCode::InvalidArgument, "bad generator");
      job.gens.push_back(x.get<std::int64_t>());
    }
  } else {
    throw ValidationError(ErrorCode::InvalidArgument, "'gens' must be a list or a string");
  }
  if (line.contains("p")) {
    const auto& p = line["p"];
    parse_p(p.is_string() ? p.get<std::string>() : std::to_string(p.get<std::int64_t>()), job);
  }
  job.n = get_int("n");
  job.trunc = get_int("trunc");
  job.modulus = get_int("modulus");
  if (auto mu = get_int("mu")) job.mu = static_cast<int>(*mu);
  if (line.contains("verify")) job.verify = line["verify"].get<bool>();
  if (line.contains("gaps")) job.gaps = line["gaps"].get<bool>();
  return job;
}

Json run_job(const JobSpec& job) {
  const auto gens = validate_generators(job.gens);
  if (job.command == "invariants") return invariants(job, gens);
  if (job.command == "sweep") return sweep(job, gens);
  if (job.command == "hilbert") return hilbert(job, gens);
  if (job.command == "decompose") return decompose(job, gens);
  if (job.command == "membership") return membership(job, gens);
  if (job.command == "denumerant") return denumerant(job, gens);
  if (job.command == "apery") return apery(job, gens);
  throw ValidationError(ErrorCode::InvalidArgument, "unknown command '" + job.command + "'");
}

int exit_code_for(const std::exception& e) {
  return dynamic_cast<const ValidationError*>(&e) != nullptr ? 2 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Invariants of p-numerical semigroups", "psg"};
  app.require_subcommand(1);

  std::string gens_text, p_text, file;
  bool json = false, csv = false, text = false, quiet = false;
  JobSpec job;
  std::int64_t n = 0, trunc = 0, modulus = 0;
  std::vector<CLI::Option*> n_opts, trunc_opts, modulus_opts, p_opts;

  const auto common = [&](CLI::App* sub, bool with_p) {
    sub->add_option("--gens", gens_text, "Generators, comma separated")->required();
    if (with_p) p_opts.push_back(sub->add_option("-p,--p", p_text, "p, or a range A..B"));
    auto* j = sub->add_flag("--json", json, "JSON output");
    auto* c = sub->add_flag("--csv", csv, "CSV output (sweep)");
    auto* t = sub->add_flag("--text", text, "Aligned text output");
    j->excludes(c)->excludes(t);
    c->excludes(t);
    sub->add_option("--mu", job.mu, "Highest power sum");
    sub->add_flag("--verify", job.verify, "Re-derive results by enumeration");
    sub->add_flag("--quiet", quiet, "Suppress warnings");
  };

  std::vector<CLI::App*> subs;
  subs.push_back(app.add_subcommand("invariants", "All invariants for one p"));
  subs.push_back(app.add_subcommand("sweep", "One row per p over a range"));
  subs.push_back(app.add_subcommand("hilbert", "Truncated Hilbert series"));
  subs.push_back(app.add_subcommand("decompose", "Irreducible decomposition of S_p u {0}"));
  subs.push_back(app.add_subcommand("membership", "Is n in S_p?"));
  subs.push_back(app.add_subcommand("denumerant", "Number of representations of n"));
  subs.push_back(app.add_subcommand("apery", "p-Apery set"));
  for (auto* sub : subs) common(sub, sub->get_name() != "denumerant");
  for (auto* name : {"membership", "denumerant"}) {
    n_opts.push_back(app.get_subcommand(name)->add_option("-n", n, "Target integer")->required());
  }
  trunc_opts.push_back(app.get_subcommand("hilbert")->add_option("--trunc", trunc, "Truncation degree"));
  app.get_subcommand("hilbert")->add_flag("--gaps", job.gaps, "Include the gaps series");
  modulus_opts.push_back(app.get_subcommand("apery")->add_option("--modulus", modulus, "Generator to use"));

  auto* batch = app.add_subcommand("batch", "JSON-lines jobs from a file or stdin");
  batch->add_option("--file", file, "Input file ('-' for stdin)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (batch->parsed()) {
    if (file.empty() || file == "-") return run_batch(in, out);
    std::ifstream f(file);
    if (!f) {
      err << "error: cannot open " << file << '\n';
      return 2;
    }
    return run_batch(f, out);
  }

  const auto* sub = app.get_subcommands().front();
  job.command = sub->get_name();
  const auto any = [](const std::vector<CLI::Option*>& opts) {
    return std::any_of(opts.begin(), opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
  };
  try {
    job.gens = parse_gens(gens_text);
    if (any(p_opts)) parse_p(p_text, job);
    if (any(n_opts)) job.n = n;
    if (any(trunc_opts)) job.trunc = trunc;
    if (any(modulus_opts)) job.modulus = modulus;
    const auto format = json ? Format::Json : csv ? Format::Csv : text ? Format::Text
                        : job.command == "sweep"                      ? Format::Csv
                                                                      : Format::Text;
    if (format == Format::Csv && job.command != "sweep") {
      throw ValidationError(ErrorCode::InvalidArgument, "--csv applies to sweep only");
    }
    const auto gens = validate_generators(job.gens);
    if (!quiet && !gens.is_minimal()) {
      err << "warning: generators are not minimal (redundant: " << join(gens.redundant())
          << "); counting uses all of them\n";
    }
    const auto doc = run_job(job);
    switch (format) {
      case Format::Json:
        if (job.command == "sweep") {
          for (const auto& row : doc["rows"]) out << row.dump() << '\n';
        } else {
          out << doc.dump() << '\n';
        }
        break;
      case Format::Csv:
        print_csv(out, doc);
        break;
      case Format::Text:
        print_text(out, doc);
        break;
    }
    return 0;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

}  // namespace psg::cli
