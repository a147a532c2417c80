#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fatoukit/io.hpp"
#include "fatoukit/parallel.hpp"
#include "fatoukit/pipeline.hpp"
#include "fatoukit/verify.hpp"

using namespace fatoukit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string family2;
  std::string window = "-2,2,-2,2";
  std::string grid = "256x256";
  std::string disk;
  std::optional<int> nmax;
  std::optional<double> escape_radius;
  std::optional<double> marty_threshold;
  std::string out = "fatoukit";
  int threads = 0;
  bool list = false;
  std::vector<std::string> cases;
};

std::vector<double> numbers(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(std::string("bad number in ") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != count) {
    throw UsageError(std::string(what) + " needs " + std::to_string(count) + " comma-separated numbers");
  }
  return out;
}

Window make_window(const Options& o) {
  Window w;
  const auto r = numbers(o.window, 4, "--window");
  w.re_min = r[0];
  w.re_max = r[1];
  w.im_min = r[2];
  w.im_max = r[3];
  int gw = 0, gh = 0;
  char x = 0, extra = 0;
  if (std::sscanf(o.grid.c_str(), "%d%c%d%c", &gw, &x, &gh, &extra) != 3 || (x != 'x' && x != 'X')) {
    throw UsageError("--grid expects WxH, got '" + o.grid + "'");
  }
  w.width = gw;
  w.height = gh;
  if (!o.disk.empty()) {
    const auto d = numbers(o.disk, 3, "--disk");
    w.disk = Disk{cd(d[0], d[1]), d[2]};
  }
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return w;
}

RunInputs make_inputs(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  RunInputs in;
  in.text = o.family;
  in.spec = parse_family(o.family);
  in.window = make_window(o);
  if (o.nmax) {
    in.normality.n_max = *o.nmax;
    in.escape.n_max = *o.nmax;
  }
  if (o.escape_radius) in.escape.escape_radius = *o.escape_radius;
  if (o.marty_threshold) in.normality.marty_threshold = *o.marty_threshold;
  in.normality.threads = o.threads;
  in.escape.threads = o.threads;
  try {
    in.normality.validate();
    in.escape.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return in;
}

void write_json(const std::string& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

void write_rasters(const std::string& out, const Analysis& a, std::vector<std::string>& artifacts) {
  const std::vector<std::pair<std::string, Grid<std::uint8_t>>> rasters = {
      {out + ".fj.pgm", label_raster(a.map)},
      {out + ".i.pgm", member_raster(a.map.in_I)},
      {out + ".u.pgm", member_raster(a.map.in_U)}};
  for (const auto& [path, g] : rasters) {
    write_pgm(path, g);
    artifacts.push_back(path);
  }
}

int run_analysis(const Options& o, bool full) {
  const RunInputs in = make_inputs(o);
  const Analysis a = analyze(in);
  std::vector<std::string> artifacts;
  write_rasters(o.out, a, artifacts);
  json doc = full ? report_document(in, a) : classify_document(in, a);
  artifacts.push_back(o.out + ".json");
  doc["artifacts"] = artifacts;
  write_json(o.out + ".json", doc);
  const auto& c = doc["counts"];
  std::cout << "fatou " << c["fatou"] << " julia " << c["julia"] << " undecided " << c["undecided"] << " masked "
            << c["masked"] << "; I " << doc["escape"]["I_pixels"] << " U " << doc["escape"]["U_pixels"] << "\n";
  for (const auto& p : artifacts) std::cout << "wrote " << p << "\n";
  return kExitOk;
}

int run_algebra(const Options& o) {
  if (o.family2.empty()) throw UsageError("algebra needs --family2");
  const RunInputs in = make_inputs(o);
  const FamilySpec b = parse_family(o.family2);
  LawParams lp;
  lp.escape = in.escape;
  lp.normality = in.normality;
  const LawReport r = check_algebra_laws(in.spec, b, in.window, lp);
  json doc = algebra_document(in, o.family2, b, r);
  doc["artifacts"] = json::array({o.out + ".json"});
  write_json(o.out + ".json", doc);
  for (const auto& c : r.checks) {
    std::cout << "law " << c.law << " (" << c.relation << "): "
              << (c.skipped ? "skipped" : c.holds() ? "holds" : "violated") << ", violations " << c.violations
              << ", reverse difference " << c.reverse_difference << "\n";
  }
  std::cout << "wrote " << o.out << ".json\n";
  return kExitOk;
}

int run_verify(const Options& o) {
  const auto& cases = verify_cases();
  if (o.list) {
    for (const auto& c : cases) std::cout << c.name << "\n";
    return kExitOk;
  }
  VerifyConfig cfg;
  cfg.escape_radius = o.escape_radius;
  cfg.marty_threshold = o.marty_threshold;
  cfg.n_max = o.nmax;
  cfg.threads = o.threads;
  for (const auto& name : o.cases) {
    const bool known = std::any_of(cases.begin(), cases.end(), [&](const VerifyCase& c) { return c.name == name; });
    if (!known) throw UsageError("unknown case '" + name + "'");
  }
  int failed = 0, run = 0;
  for (const auto& c : cases) {
    if (!o.cases.empty() && std::find(o.cases.begin(), o.cases.end(), c.name) == o.cases.end()) continue;
    CaseResult r;
    try {
      r = c.run(cfg);
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    ++run;
    failed += !r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << c.name << ": " << c.claim << " (" << r.detail << ")" << std::endl;
  }
  std::cout << run - failed << "/" << run << " cases passed\n";
  return failed == 0 ? kExitOk : kExitVerify;
}

void add_tunables(CLI::App* app, Options& o) {
  app->add_option("--nmax", o.nmax, "members examined per part")->envname("FATOUKIT_NMAX")->check(CLI::PositiveNumber);
  app->add_option("--escape-radius", o.escape_radius, "escape radius R")
      ->envname("FATOUKIT_ESCAPE_RADIUS")
      ->check(CLI::PositiveNumber);
  app->add_option("--marty-threshold", o.marty_threshold, "spherical-derivative level for Julia-like pixels")
      ->envname("FATOUKIT_MARTY_THRESHOLD")
      ->check(CLI::PositiveNumber);
  app->add_option("--threads", o.threads, "worker cap (0 = all cores)")
      ->envname("FATOUKIT_THREADS")
      ->check(CLI::NonNegativeNumber);
}

void add_run_options(CLI::App* app, Options& o, bool two_families) {
  app->add_option("--family", o.family, "family in the DSL")->envname("FATOUKIT_FAMILY");
  if (two_families) app->add_option("--family2", o.family2, "second family")->envname("FATOUKIT_FAMILY2");
  app->add_option("--window", o.window, "re0,re1,im0,im1")->envname("FATOUKIT_WINDOW")->capture_default_str();
  app->add_option("--grid", o.grid, "WxH")->envname("FATOUKIT_GRID")->capture_default_str();
  app->add_option("--disk", o.disk, "cx,cy,r: restrict to a disk")->envname("FATOUKIT_DISK");
  app->add_option("--out", o.out, "output path prefix")->envname("FATOUKIT_OUT")->capture_default_str();
  add_tunables(app, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fatou-like, Julia-like and escaping sets of function families"};
  app.require_subcommand(1);
  Options o;
  auto* classify = app.add_subcommand("classify", "label a window and write rasters and a JSON report");
  auto* report = app.add_subcommand("report", "classify plus topology, fixed points and limit functions");
  auto* verify = app.add_subcommand("verify", "run the built-in example suite");
  auto* algebra = app.add_subcommand("algebra", "check the union and intersection laws for two families");
  add_run_options(classify, o, false);
  add_run_options(report, o, false);
  add_run_options(algebra, o, true);
  add_tunables(verify, o);
  verify->add_flag("--list", o.list, "print case names and exit");
  verify->add_option("--case", o.cases, "run only the named cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  set_default_threads(o.threads);
  try {
    if (*classify) return run_analysis(o, false);
    if (*report) return run_analysis(o, true);
    if (*algebra) return run_algebra(o);
    return run_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "fatoukit: family parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "fatoukit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "fatoukit: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "fatoukit: " << e.what() << "\n";
    return kExitUsage;
  }
}
