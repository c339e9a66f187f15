#include "zsalg/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "zsalg/errors.hpp"
#include "zsalg/report.hpp"

namespace zsalg {
namespace {

namespace fs = std::filesystem;

struct Globals {
  std::string cache_dir;
  bool no_weights = false;
  std::uint32_t p = 0;
  bool timing = false;
};

class Cache {
 public:
  explicit Cache(const Globals& g) {
    if (!g.cache_dir.empty()) {
      dir_ = g.cache_dir;
    } else if (const char* env = std::getenv("ZSALG_CACHE_DIR"); env && *env) {
      dir_ = env;
    }
  }

  std::optional<Report> load(const std::string& key) const {
    if (dir_.empty()) return std::nullopt;
    std::ifstream in(dir_ / (key + ".json"));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return report_from_json(buf.str());
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const Report& r) const {
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    const fs::path tmp = dir_ / (key + ".json.tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << report_to_json(r);
    }
    fs::rename(tmp, dir_ / (key + ".json"), ec);
    if (ec) fs::remove(tmp, ec);
  }

 private:
  fs::path dir_;
};

std::string cache_key(const std::string& command, const ParsedGroup& g, const Globals& globals,
                      const std::string& extra) {
  std::ostringstream os;
  os << command << '\n' << g.spec << '\n' << kVersion << '\n' << g.p << '\n'
     << (globals.no_weights ? "linear" : "weights") << '\n' << extra;
  return fnv1a_hex(os.str());
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Report produce(const std::string& command, const std::string& spec, const Globals& globals,
               const ReportOptions& ropt, const VerifyOptions* vopt) {
  const auto start = std::chrono::steady_clock::now();
  ParsedGroup g = parse_group_spec(spec, globals.p);
  std::string extra = ropt.table ? "table" : "info";
  if (vopt) {
    extra += "\nk=" + std::to_string(vopt->morita_k) + "\nchecks=";
    for (const auto& c : vopt->checks) extra += c + ",";
  }
  const std::string key = cache_key(command, g, globals, extra);
  Cache cache(globals);
  Report r;
  if (auto hit = cache.load(key); hit && hit->spec == g.spec) {
    r = std::move(*hit);
  } else {
    r = build_report(g, ropt);
    if (vopt) r.checks = run_checks(g, *vopt);
    cache.store(key, r);
  }
  if (globals.timing) r.timing_ms = elapsed_ms(start);
  return r;
}

std::vector<std::string> split_checks(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centers and socle series of modular p-group algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("zsalg ") + kVersion);
  Globals globals;
  app.add_option("--cache-dir", globals.cache_dir,
                 "Directory for cached reports (overrides ZSALG_CACHE_DIR)");
  app.add_flag("--no-weights", globals.no_weights,
               "Compute every dimension by linear algebra instead of Jennings weights");
  app.add_option("--p", globals.p, "Prime for the trivial group; must match otherwise");
  app.add_flag("--timing", globals.timing, "Report wall-clock time");

  std::string spec, format = "text", output;
  auto* info = app.add_subcommand("info", "Order, prime, dimension subgroups, Loewy length");
  info->add_option("spec", spec, "Group spec")->required();
  info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("zs-table", "Dimensions of J^n, Soc^n and ZS^n");
  table->add_option("spec", spec, "Group spec")->required();
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_option("--output,-o", output, "Write to a file instead of stdout");

  std::vector<std::string> specs, raw_checks;
  VerifyOptions vopt;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run theorem checks on one or more groups");
  verify->add_option("specs", specs, "Group specs")->required();
  verify->add_option("--checks", raw_checks, "Comma-separated subset of: jennings, rigidity, "
                                              "main, powerful, zs12, morita, okuyama, otokita, scan")
      ->delimiter(',');
  verify->add_option("--k", vopt.morita_k, "Matrix size for the morita check")
      ->check(CLI::Range(1, 16));
  verify->add_option("--jobs,-j", jobs, "Groups verified in parallel")->check(CLI::Range(1, 256));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output,-o", output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "zsalg " << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    ReportOptions ropt;
    ropt.weights = !globals.no_weights;
    if (info->parsed()) {
      ropt.table = false;
      Report r = produce("info", spec, globals, ropt, nullptr);
      out << (format == "json" ? report_to_json(r, globals.timing) : report_to_text(r));
      return kExitOk;
    }
    if (table->parsed()) {
      Report r = produce("zs-table", spec, globals, ropt, nullptr);
      std::string text = format == "json"  ? report_to_json(r, globals.timing)
                         : format == "csv" ? report_to_csv(r)
                                           : report_to_text(r);
      emit(text, output, out);
      return kExitOk;
    }

    vopt.checks = split_checks(raw_checks);
    for (const auto& c : vopt.checks)
      if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
        throw ParseError("unknown check '" + c + "'");
    // Parse everything up front so a bad spec fails before any work.
    for (const auto& s : specs) parse_group_spec(s, globals.p);

    std::vector<Report> reports(specs.size());
    std::vector<std::exception_ptr> errors(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < specs.size(); k = next++) {
        try {
          reports[k] = produce("verify", specs[k], globals, ropt, &vopt);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned n_threads = std::min<std::size_t>(jobs, specs.size());
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);

    bool ok = true;
    std::string text;
    if (format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports)
        arr.push_back(nlohmann::ordered_json::parse(report_to_json(r, globals.timing)));
      text = arr.dump(2) + "\n";
    }
    for (std::size_t k = 0; k < reports.size(); ++k) {
      ok = ok && all_passed(reports[k].checks);
      if (format != "json") text += (k ? "\n" : "") + report_to_text(reports[k]);
    }
    if (format != "json") text += ok ? "\nall checks passed\n" : "\nsome checks FAILED\n";
    emit(text, output, out);
    return ok ? kExitOk : kExitCheckFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace zsalg
