// ttk: command-line front end over the C API.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttk.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct InputError {
  std::string msg;
};

struct Run {
  std::string command;
  std::string fixtures_dir;
  std::string output;
  int threads = 1;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json options = nlohmann::ordered_json::object();
};

std::string resolve(const Run& run, const std::string& path) {
  if (path.empty() || fs::exists(path) || run.fixtures_dir.empty()) return path;
  fs::path alt = fs::path(run.fixtures_dir) / path;
  return fs::exists(alt) ? alt.string() : path;
}

std::string slurp(Run& run, const std::string& key, const std::string& path) {
  std::string p = resolve(run, path);
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  run.inputs[key] = p;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string r = s ? s : "";
  ttk_string_free(s);
  return r;
}

int status_exit(ttk_status st) {
  if (st == TTK_OK) return kExitOk;
  std::cerr << "error: " << ttk_last_error() << "\n";
  return st == TTK_ERR_INPUT ? kExitInput : kExitDomain;
}

struct TrackHandle {
  ttk_track* p = nullptr;
  ~TrackHandle() { ttk_track_free(p); }
};
struct CycleHandle {
  ttk_cycle* p = nullptr;
  ~CycleHandle() { ttk_cycle_free(p); }
};
struct ComplexHandle {
  ttk_complex* p = nullptr;
  ~ComplexHandle() { ttk_complex_free(p); }
};

int emit(const Run& run, const std::string& text) {
  if (run.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(run.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << run.output << "\n";
    return kExitInput;
  }
  out << text;
  return kExitOk;
}

void write_manifest(const Run& run, int exit_code, double elapsed) {
  nlohmann::ordered_json m;
  m["command"] = run.command;
  m["inputs"] = run.inputs;
  m["options"] = run.options;
  m["version"] = ttk_version();
  m["exit_code"] = exit_code;
  m["elapsed_seconds"] = elapsed;
  std::string text = m.dump(2) + "\n";
  if (run.output.empty()) {
    std::cerr << text;
    return;
  }
  std::ofstream out(run.output + ".manifest.json", std::ios::binary);
  out << text;
}

int cmd_validate(Run& run, const std::string& file) {
  std::string text = slurp(run, "track", file);
  TrackHandle t;
  if (ttk_status st = ttk_track_parse(text.c_str(), &t.p)) return status_exit(st);
  int ok = 0;
  char* report = nullptr;
  if (ttk_status st = ttk_track_validate(t.p, &ok, &report)) return status_exit(st);
  int rc = emit(run, take(report));
  if (rc) return rc;
  return ok ? kExitOk : kExitDomain;
}

int cmd_split(Run& run, const std::string& file, const std::string& branch) {
  std::string text = slurp(run, "track", file);
  run.options["branch"] = branch;
  TrackHandle t, out;
  if (ttk_status st = ttk_track_parse(text.c_str(), &t.p)) return status_exit(st);
  char* ev = nullptr;
  ttk_status st = branch.empty() ? ttk_track_maximal_split(t.p, &out.p, &ev)
                                 : ttk_track_split(t.p, branch.c_str(), &out.p, &ev);
  if (st) return status_exit(st);
  std::string events = take(ev);
  char* written = nullptr;
  if ((st = ttk_track_write(out.p, &written))) return status_exit(st);
  return emit(run, "# split " + events + "\n" + take(written));
}

int cmd_cycle(Run& run, const std::string& file, int max_iters) {
  std::string text = slurp(run, "track", file);
  run.options["max_iters"] = max_iters;
  TrackHandle t;
  if (ttk_status st = ttk_track_parse(text.c_str(), &t.p)) return status_exit(st);
  CycleHandle c;
  if (ttk_status st = ttk_cycle_find(t.p, max_iters, &c.p)) return status_exit(st);
  char* out = nullptr;
  if (ttk_status st = ttk_cycle_write(c.p, &out)) return status_exit(st);
  return emit(run, take(out));
}

int cmd_bounds(Run& run, const std::string& file, bool structured) {
  std::string text = slurp(run, "cycle", file);
  run.options["json"] = structured;
  CycleHandle c;
  if (ttk_status st = ttk_cycle_parse(text.c_str(), &c.p)) return status_exit(st);
  char* out = nullptr;
  if (ttk_status st = ttk_cycle_bounds(c.p, structured ? 1 : 0, &out)) return status_exit(st);
  return emit(run, take(out));
}

int cmd_factorize(Run& run, const std::string& file, const std::string& sigma_file) {
  std::string text = slurp(run, "cycle", file);
  std::string sigma = sigma_file.empty() ? "" : slurp(run, "sigma", sigma_file);
  CycleHandle c;
  if (ttk_status st = ttk_cycle_parse(text.c_str(), &c.p)) return status_exit(st);
  char* seq = nullptr;
  char* h1 = nullptr;
  if (ttk_status st = ttk_cycle_factorize(c.p, sigma.c_str(), &seq, &h1)) return status_exit(st);
  std::string s = take(seq);
  std::string h = take(h1);
  return emit(run, s + "begin h1\n" + h + "end h1\n");
}

int cmd_heegaard(Run& run, const std::string& file, const std::string& basis_file, const std::string& sigma_file,
                 const std::string& report_file, bool enumerate) {
  std::string text = slurp(run, "track", file);
  std::string basis = slurp(run, "basis", basis_file);
  std::string sigma = sigma_file.empty() ? "" : slurp(run, "sigma", sigma_file);
  std::string report = report_file.empty() ? "" : slurp(run, "bound_report", report_file);
  run.options["enumerate"] = enumerate;
  TrackHandle t;
  if (ttk_status st = ttk_track_parse(text.c_str(), &t.p)) return status_exit(st);
  char* out = nullptr;
  if (ttk_status st = ttk_heegaard(t.p, basis.c_str(), sigma.c_str(), report.empty() ? nullptr : report.c_str(),
                                   enumerate ? 1 : 0, &out))
    return status_exit(st);
  return emit(run, take(out));
}

int cmd_support(Run& run, const std::string& file, int k_max, const std::string& method) {
  std::string text = slurp(run, "complex", file);
  run.options["kmax"] = k_max;
  run.options["method"] = method;
  ttk_support_method m = method == "tangent"  ? TTK_SUPPORT_TANGENT
                         : method == "points" ? TTK_SUPPORT_POINTS
                                              : TTK_SUPPORT_BOTH;
  ComplexHandle c;
  if (ttk_status st = ttk_complex_parse(text.c_str(), &c.p)) return status_exit(st);
  int dim = -1;
  char* out = nullptr;
  if (ttk_status st = ttk_complex_support(c.p, k_max, m, &dim, &out)) return status_exit(st);
  return emit(run, take(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"train track toolkit"};
  app.require_subcommand(1);
  Run run;
  app.add_option("--fixtures-dir", run.fixtures_dir, "directory searched for relative input paths");
  app.add_option("--threads", run.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", run.output, "write primary output here; manifest goes to <output>.manifest.json");
  app.set_version_flag("--version", std::string(ttk_version()));

  std::string file, branch, basis, sigma, report, method = "both";
  int max_iters = 200, kmax = 6;
  bool structured = false, enumerate = false;

  auto* validate = app.add_subcommand("validate", "check a train track file");
  validate->add_option("track", file)->required();

  auto* split = app.add_subcommand("split", "split one branch, or maximally split");
  split->add_option("track", file)->required();
  split->add_option("--branch", branch, "large branch to split; omit for a maximal split");

  auto* cycle = app.add_subcommand("cycle", "find a periodic splitting sequence");
  cycle->add_option("track", file)->required();
  cycle->add_option("--max-iters", max_iters)->check(CLI::NonNegativeNumber);

  auto* bounds = app.add_subcommand("bounds", "bound report for a cycle");
  bounds->add_option("cycle", file)->required();
  bounds->add_flag("--json", structured, "machine-readable output");

  auto* factorize = app.add_subcommand("factorize", "arcslide factorization of a cycle");
  factorize->add_option("cycle", file)->required();
  factorize->add_option("--sigma", sigma, "mark file");

  auto* heegaard = app.add_subcommand("heegaard", "bordered sutured diagram and generator count");
  heegaard->add_option("track", file)->required();
  heegaard->add_option("--basis", basis)->required();
  heegaard->add_option("--sigma", sigma);
  heegaard->add_option("--bound-report", report);
  heegaard->add_flag("--enumerate", enumerate);

  auto* support = app.add_subcommand("support", "dimension of the support variety");
  support->add_option("complex", file)->required();
  support->add_option("--kmax", kmax)->check(CLI::Range(2, 24));
  support->add_option("--method", method)->check(CLI::IsMember({"tangent", "points", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  ttk_set_threads(run.threads);
  auto* sub = app.get_subcommands().front();
  run.command = sub->get_name();
  run.options["threads"] = run.threads;
  auto t0 = std::chrono::steady_clock::now();
  int rc = kExitOk;
  try {
    if (sub == validate) rc = cmd_validate(run, file);
    else if (sub == split) rc = cmd_split(run, file, branch);
    else if (sub == cycle) rc = cmd_cycle(run, file, max_iters);
    else if (sub == bounds) rc = cmd_bounds(run, file, structured);
    else if (sub == factorize) rc = cmd_factorize(run, file, sigma);
    else if (sub == heegaard) rc = cmd_heegaard(run, file, basis, sigma, report, enumerate);
    else if (sub == support) rc = cmd_support(run, file, kmax, method);
  } catch (const InputError& e) {
    std::cerr << "error: ParseError: " << e.msg << "\n";
    rc = kExitInput;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(run, rc, elapsed);
  return rc;
}
