#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skg/skg.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "text";
  bool no_timing = false;
  unsigned threads = 0;
  std::string data;
};

struct ApiError {
  skg_status status;
  std::string message;
};

void check(skg_status s) {
  if (s != SKG_OK) throw ApiError{s, skg_last_error()};
}

int exit_code_for(skg_status s) {
  switch (s) {
    case SKG_INVALID_ARGUMENT:
    case SKG_PARSE_ERROR:
    case SKG_IO_ERROR:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

std::string normalize(const std::string& lambda) {
  char buf[256];
  check(skg_partition_normalize(lambda.c_str(), buf, sizeof buf));
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

json envelope(const std::string& command, json echo) {
  json j;
  j["schema"] = "skg.report/1";
  j["command"] = std::move(echo);
  j["command"]["name"] = command;
  j["items"] = json::array();
  j["failures"] = json::array();
  return j;
}

void emit(json& report, const Common& c, const Timer& t) {
  if (!c.no_timing) report["timing_ms"] = std::round(t.ms() * 1000.0) / 1000.0;
  std::cout << report.dump(2) << "\n";
}

struct DimArgs {
  std::string which = "gtensor";
  std::string lambda;
  int d = 0;
  int p = 2;
  bool weights = false;
};

using ModulePtr = std::unique_ptr<skg_module, decltype(&skg_module_free)>;

int run_dim(const DimArgs& a, const Common& c) {
  Timer timer;
  const std::string lambda = normalize(a.lambda);
  skg_build_options opts{c.threads};
  if (a.which == "u" && a.p != 2) throw ApiError{SKG_INVALID_ARGUMENT, "--which u needs --p 2"};
  skg_module* raw = nullptr;
  check(skg_module_build(a.which == "nabla" ? SKG_NABLA : SKG_GTENSOR, lambda.c_str(), a.d, a.p, &opts, &raw));
  ModulePtr module(raw, &skg_module_free);

  uint64_t value = 0;
  if (a.which == "u") {
    check(skg_module_u_dim(module.get(), &value));
  } else {
    check(skg_module_dim(module.get(), &value));
  }
  json weights = json::array();
  if (a.weights && a.which != "u") {
    size_t count = 0;
    check(skg_module_weight_count(module.get(), &count));
    std::vector<int> w(static_cast<std::size_t>(a.d));
    for (size_t i = 0; i < count; ++i) {
      uint64_t m = 0;
      check(skg_module_weight_at(module.get(), i, w.data(), w.size(), &m));
      weights.push_back({{"weight", w}, {"multiplicity", m}});
    }
  }

  if (c.format == "json") {
    auto report = envelope("dim", {{"which", a.which}, {"lambda", lambda}, {"d", a.d}, {"p", a.p}});
    json it{{"lambda", lambda}, {"d", a.d}, {"p", a.p}, {"kind", a.which}, {"value", value}};
    if (a.weights && a.which != "u") it["weights"] = weights;
    report["items"].push_back(it);
    emit(report, c, timer);
  } else {
    std::cout << value << "\n";
    for (const auto& w : weights) {
      std::cout << "  ";
      for (std::size_t i = 0; i < w["weight"].size(); ++i) std::cout << (i ? "," : "") << w["weight"][i].get<int>();
      std::cout << " : " << w["multiplicity"].get<uint64_t>() << "\n";
    }
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string suite = "all";
  int n_min = 1;
  int n_max = 0;
  bool weaker = false;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  Timer timer;
  skg_suite_options opts{a.n_min, a.n_max, a.weaker ? 1 : 0, c.threads, c.data.empty() ? nullptr : c.data.c_str()};
  skg_report* raw = nullptr;
  check(skg_run_suite(a.suite.c_str(), &opts, &raw));
  std::unique_ptr<skg_report, decltype(&skg_report_free)> report(raw, &skg_report_free);
  size_t count = 0;
  int passed = 0;
  check(skg_report_count(report.get(), &count));
  check(skg_report_passed(report.get(), &passed));

  json out = envelope("verify", {{"suite", a.suite}, {"n_min", a.n_min}, {"n_max", a.n_max}, {"weaker_bound", a.weaker}});
  std::size_t failures = 0;
  for (size_t i = 0; i < count; ++i) {
    skg_check_item it{};
    check(skg_report_item(report.get(), i, &it));
    json j{{"lambda", it.lambda}, {"d", it.d}, {"p", it.p}, {"kind", it.kind},
           {"expected", it.expected}, {"got", it.got}, {"verdict", it.pass ? "pass" : "fail"}};
    if (!it.pass) {
      ++failures;
      out["failures"].push_back(j);
    }
    out["items"].push_back(std::move(j));
  }
  if (c.format == "json") {
    emit(out, c, timer);
  } else {
    for (const auto& f : out["failures"]) {
      std::cout << "FAIL " << f["kind"].get<std::string>() << " " << f["lambda"].get<std::string>()
                << " d=" << f["d"].get<int>() << " p=" << f["p"].get<int>()
                << " expected=" << f["expected"].get<std::string>() << " got=" << f["got"].get<std::string>() << "\n";
    }
    std::cout << "suite " << a.suite << ": " << (count - failures) << "/" << count << " checks passed";
    if (!c.no_timing) std::cout << " in " << static_cast<long long>(timer.ms()) << " ms";
    std::cout << "\n";
  }
  return passed ? kExitPass : kExitFail;
}

struct TableArgs {
  std::string which;
  int d = 5;
  int n = 0;
  std::string out;
  std::string golden;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError{SKG_IO_ERROR, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string call_csv(const std::function<skg_status(char*, size_t, size_t*)>& fn) {
  std::vector<char> buf(1 << 16);
  size_t needed = 0;
  skg_status s = fn(buf.data(), buf.size(), &needed);
  if (s == SKG_BUFFER_TOO_SMALL) {
    buf.resize(needed);
    s = fn(buf.data(), buf.size(), &needed);
  }
  check(s);
  return buf.data();
}

int run_table(const TableArgs& a, const Common& c) {
  Timer timer;
  std::string csv;
  if (a.which == "table1") {
    csv = call_csv([&](char* b, size_t n, size_t* need) { return skg_table1_csv(a.d, b, n, need); });
  } else {
    skg_decomposition* raw = nullptr;
    check(skg_decomposition_load(c.data.empty() ? nullptr : c.data.c_str(), &raw));
    std::unique_ptr<skg_decomposition, decltype(&skg_decomposition_free)> data(raw, &skg_decomposition_free);
    skg_build_options opts{c.threads};
    std::vector<int> ns = a.n ? std::vector<int>{a.n} : std::vector<int>{4, 5};
    for (std::size_t k = 0; k < ns.size(); ++k) {
      if (k) csv += "\n";
      csv += call_csv([&](char* b, size_t n, size_t* need) { return skg_table3_csv(data.get(), ns[k], &opts, b, n, need); });
    }
  }

  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw ApiError{SKG_IO_ERROR, "cannot write " + a.out};
    f << csv;
  }
  bool golden_ok = true;
  if (!a.golden.empty()) golden_ok = read_file(a.golden) == csv;

  if (c.format == "json") {
    json echo{{"which", a.which}};
    if (a.which == "table1") echo["d"] = a.d; else echo["n"] = a.n;
    auto report = envelope("table", echo);
    report["items"].push_back({{"kind", a.which}, {"csv", csv}});
    if (!a.golden.empty()) {
      json g{{"kind", "golden"}, {"path", a.golden}, {"verdict", golden_ok ? "pass" : "fail"}};
      report["items"].push_back(g);
      if (!golden_ok) report["failures"].push_back(g);
    }
    emit(report, c, timer);
  } else {
    if (a.out.empty()) std::cout << csv;
    if (!a.golden.empty()) std::cout << "golden " << a.golden << ": " << (golden_ok ? "match" : "MISMATCH") << "\n";
  }
  return golden_ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual Weyl modules and images of Specht modules over GF(p)"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timing", common.no_timing, "Omit timings from the output");
  app.add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  app.add_option("--data", common.data, "Decomposition data file (default: $SKG_DECOMPOSITION_DATA or the bundled file)");

  DimArgs dim;
  auto* cdim = app.add_subcommand("dim", "Dimension of the dual Weyl module, the G⊗ model, or U");
  cdim->add_option("--which", dim.which, "nabla | gtensor | u")->check(CLI::IsMember({"nabla", "gtensor", "u"}));
  cdim->add_option("--lambda", dim.lambda, "Partition, e.g. 2,2,1 or 2^2,1")->required();
  cdim->add_option("--d", dim.d, "Alphabet size")->required()->check(CLI::Range(1, 255));
  cdim->add_option("--p", dim.p, "Characteristic")->check(CLI::IsMember({2, 3, 5}));
  cdim->add_flag("--weights", dim.weights, "Also print the weight table");

  VerifyArgs ver;
  auto* cver = app.add_subcommand("verify", "Run a verification suite");
  cver->add_option("--suite", ver.suite, "thm1 | thm2 | d1 | hooks-d2 | tables | example61 | all")
      ->check(CLI::IsMember({"thm1", "thm2", "d1", "hooks-d2", "tables", "example61", "all"}));
  cver->add_option("--n-min", ver.n_min, "Smallest n")->check(CLI::Range(1, 12));
  cver->add_option("--n-max", ver.n_max, "Largest n (suite default when omitted)")->check(CLI::Range(1, 12));
  cver->add_flag("--weaker-bound", ver.weaker, "Use the shape-dependent converse threshold");

  TableArgs tab;
  auto* ctab = app.add_subcommand("table", "Emit a table as CSV");
  ctab->add_option("--which", tab.which, "table1 | table3")->required()->check(CLI::IsMember({"table1", "table3"}));
  ctab->add_option("--d", tab.d, "Alphabet size for table1")->check(CLI::Range(1, 12));
  ctab->add_option("--n", tab.n, "4 or 5 for table3 (both when omitted)")->check(CLI::IsMember({4, 5}));
  ctab->add_option("--out", tab.out, "Write the CSV here");
  ctab->add_option("--golden", tab.golden, "Compare with this CSV; exit 1 on mismatch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cdim) return run_dim(dim, common);
    if (*cver) return run_verify(ver, common);
    if (*ctab) return run_table(tab, common);
  } catch (const ApiError& e) {
    std::cerr << "skgtool: " << skg_status_string(e.status) << ": " << e.message << "\n";
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "skgtool: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
