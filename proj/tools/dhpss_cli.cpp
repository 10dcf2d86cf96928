// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dhpss/dhpss.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

// Raised for anything the user can fix: bad flags, bad values, bad files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dhpss_status st) {
  if (st == DHPSS_OK) return;
  const std::string msg = dhpss_last_error();
  if (st == DHPSS_ERR_DOMAIN || st == DHPSS_ERR_INDEX) throw UsageError(msg);
  throw NumericalFailure(msg);
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using ProblemPtr = std::unique_ptr<dhpss_problem, Deleter<dhpss_problem, dhpss_problem_destroy>>;
using SpectrumPtr = std::unique_ptr<dhpss_spectrum, Deleter<dhpss_spectrum, dhpss_spectrum_destroy>>;
using ZerosPtr = std::unique_ptr<dhpss_zeros, Deleter<dhpss_zeros, dhpss_zeros_destroy>>;
using ReportsPtr = std::unique_ptr<dhpss_report_list, Deleter<dhpss_report_list, dhpss_report_list_destroy>>;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// JSON can't carry NaN or infinities; they go out as null.
json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct Common {
  std::string format = "csv";
  std::string out;
  std::string config;
  int quad_points = 0;
};

class Manifest {
 public:
  explicit Manifest(std::string command) : command_(std::move(command)) {}

  void param(const std::string& key, const std::string& value) { params_.emplace_back(key, value); }
  void param(const std::string& key, double value) { param(key, num(value)); }
  void param(const std::string& key, int value) { param(key, std::to_string(value)); }

  json to_json() const {
    json p = json::object();
    for (const auto& [k, v] : params_) p[k] = v;
    return {{"command", command_}, {"parameters", p}, {"tool_version", dhpss_version()}, {"timestamp", stamp_}};
  }

  void write_csv_header(std::ostream& os) const {
    os << "# command: " << command_ << '\n';
    os << "# tool_version: " << dhpss_version() << '\n';
    os << "# timestamp: " << stamp_ << '\n';
    for (const auto& [k, v] : params_) os << "# parameter: " << k << '=' << v << '\n';
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::string stamp_ = timestamp_now();
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
    stream().imbue(std::locale::classic());
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const Common& common, const Manifest& manifest, json body) {
  body["manifest"] = manifest.to_json();
  Output out(common.out);
  out.stream() << body.dump(2) << '\n';
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<long> parse_freqs(const std::string& s) {
  std::vector<long> out;
  for (const std::string& item : split_list(s)) {
    long v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw UsageError("frequency '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--freqs must list at least one frequency");
  return out;
}

ProblemPtr make_problem(double alpha, double omega, int n, int quad_points) {
  dhpss_problem* raw = nullptr;
  check(dhpss_problem_create(alpha, omega, n, quad_points, &raw));
  return ProblemPtr(raw);
}

SpectrumPtr make_spectrum(const dhpss_problem* p, dhpss_method m) {
  dhpss_spectrum* raw = nullptr;
  check(dhpss_spectrum_compute(p, m, &raw));
  return SpectrumPtr(raw);
}

std::vector<double> eigenvalues_of(const dhpss_spectrum* s) {
  std::vector<double> v(dhpss_spectrum_size(s));
  check(dhpss_spectrum_eigenvalues(s, v.data(), v.size()));
  return v;
}

std::vector<std::vector<double>> vectors_of(const dhpss_spectrum* s) {
  const size_t n = dhpss_spectrum_size(s);
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) check(dhpss_spectrum_coefficients(s, i, out[i].data(), n));
  return out;
}

void add_problem_params(Manifest& m, double alpha, double omega, int n, const dhpss_problem* p) {
  dhpss_problem_info info{};
  check(dhpss_problem_get_info(p, &info));
  m.param("alpha", alpha);
  m.param("omega", omega);
  m.param("n", n);
  m.param("quad_points", info.quad_points);
}

// ---------------------------------------------------------------------------

struct ZerosArgs {
  double alpha = 0.0;
  int count = 10;
};

int run_zeros(const Common& common, const ZerosArgs& a) {
  if (a.count < 1) throw UsageError("count must be >= 1");
  dhpss_zeros* raw = nullptr;
  check(dhpss_zeros_create(a.alpha, static_cast<size_t>(a.count), &raw));
  ZerosPtr zeros(raw);

  Manifest m("zeros");
  m.param("alpha", a.alpha);
  m.param("count", a.count);

  std::vector<double> s(static_cast<size_t>(a.count)), res(s.size());
  for (size_t n = 1; n <= s.size(); ++n) check(dhpss_zeros_get(zeros.get(), n, &s[n - 1], &res[n - 1]));

  if (common.format == "json") {
    json rows = json::array();
    for (size_t i = 0; i < s.size(); ++i) rows.push_back({{"n", i + 1}, {"zero", s[i]}, {"residual", res[i]}});
    emit_json(common, m, {{"zeros", rows}});
    return kExitOk;
  }
  Output out(common.out);
  auto& os = out.stream();
  m.write_csv_header(os);
  os << "n,zero,residual\n";
  for (size_t i = 0; i < s.size(); ++i) os << i + 1 << ',' << num(s[i]) << ',' << num(res[i]) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ProblemArgs {
  double alpha = 0.0;
  double omega = 0.5;
  int n = 20;
};

struct SpectrumArgs : ProblemArgs {
  std::string method = "gram";
  bool vectors = false;
};

int run_spectrum(const Common& common, const SpectrumArgs& a) {
  if (a.method != "gram" && a.method != "nystrom" && a.method != "both") {
    throw UsageError("method must be one of gram, nystrom, both");
  }
  auto problem = make_problem(a.alpha, a.omega, a.n, common.quad_points);

  Manifest m("spectrum");
  add_problem_params(m, a.alpha, a.omega, a.n, problem.get());
  m.param("method", a.method);
  m.param("vectors", a.vectors ? "true" : "false");

  const dhpss_method primary = a.method == "nystrom" ? DHPSS_METHOD_NYSTROM : DHPSS_METHOD_GRAM;
  auto spectrum = make_spectrum(problem.get(), primary);
  const std::vector<double> values = eigenvalues_of(spectrum.get());
  double min_gap = 0.0, rank_tail = 0.0;
  check(dhpss_spectrum_stats(spectrum.get(), &min_gap, &rank_tail));

  std::vector<double> other;
  double discrepancy = 0.0;
  if (a.method == "both") {
    auto ny = make_spectrum(problem.get(), DHPSS_METHOD_NYSTROM);
    other = eigenvalues_of(ny.get());
    check(dhpss_spectrum_stats(ny.get(), nullptr, &rank_tail));
    for (size_t i = 0; i < values.size(); ++i) discrepancy = std::max(discrepancy, std::abs(values[i] - other[i]));
  }
  std::vector<std::vector<double>> vecs;
  if (a.vectors) vecs = vectors_of(spectrum.get());

  if (common.format == "json") {
    json body{{"method", a.method}, {"eigenvalues", values}, {"min_gap", min_gap}};
    if (a.method != "gram") body["rank_tail"] = rank_tail;
    if (a.method == "both") {
      body["nystrom_eigenvalues"] = other;
      body["discrepancy"] = discrepancy;
    }
    if (a.vectors) body["vectors"] = vecs;
    emit_json(common, m, std::move(body));
    return kExitOk;
  }

  Output out(common.out);
  auto& os = out.stream();
  m.write_csv_header(os);
  os << "# min_gap: " << num(min_gap) << '\n';
  if (a.method != "gram") os << "# rank_tail: " << num(rank_tail) << '\n';
  if (a.method == "both") os << "# discrepancy: " << num(discrepancy) << '\n';
  os << (a.method == "both" ? "n,gram,nystrom,abs_diff" : "n,eigenvalue");
  if (a.vectors) {
    for (size_t k = 1; k <= values.size(); ++k) os << ",x_" << k;
  }
  os << '\n';
  for (size_t i = 0; i < values.size(); ++i) {
    os << i << ',' << num(values[i]);
    if (a.method == "both") os << ',' << num(other[i]) << ',' << num(std::abs(values[i] - other[i]));
    if (a.vectors) {
      for (double x : vecs[i]) os << ',' << num(x);
    }
    os << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs : ProblemArgs {
  std::string checks;
  double eps = 0.01;
};

const std::vector<std::string> kAllChecks = {"decay", "sandwich", "kernel", "l2", "trace", "plunge"};

struct ReportRow {
  std::string check;
  dhpss_report report;
  std::vector<std::pair<std::string, double>> context;
};

int run_analyze(const Common& common, const AnalyzeArgs& a) {
  std::vector<std::string> checks;
  if (a.checks.empty()) {
    for (const auto& c : kAllChecks) {
      if (c == "sandwich" && !(a.alpha > 0.0)) continue;
      checks.push_back(c);
    }
  } else {
    checks = split_list(a.checks);
    for (const auto& c : checks) {
      if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
        throw UsageError("unknown check '" + c + "'");
      }
    }
  }
  auto wants = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };
  if (wants("plunge") && !(a.eps > 0.0 && a.eps < 0.5)) throw UsageError("eps must be in (0, 0.5)");
  if (wants("sandwich") && !(a.alpha > 0.0)) throw UsageError("sandwich requires alpha > 0");

  auto problem = make_problem(a.alpha, a.omega, a.n, common.quad_points);
  Manifest m("analyze");
  add_problem_params(m, a.alpha, a.omega, a.n, problem.get());
  std::string joined;
  for (const auto& c : checks) joined += (joined.empty() ? "" : ",") + c;
  m.param("checks", joined);
  m.param("eps", a.eps);

  std::vector<ReportsPtr> keep;
  std::vector<ReportRow> rows;
  for (const auto& c : checks) {
    dhpss_report_list* raw = nullptr;
    check(dhpss_analyze(problem.get(), c.c_str(), a.eps, &raw));
    keep.emplace_back(raw);
    for (size_t i = 0; i < dhpss_report_list_size(raw); ++i) {
      ReportRow row{c, {}, {}};
      check(dhpss_report_get(raw, i, &row.report));
      for (size_t k = 0; k < row.report.context_count; ++k) {
        const char* key = nullptr;
        double value = 0.0;
        check(dhpss_report_context(raw, i, k, &key, &value));
        row.context.emplace_back(key, value);
      }
      rows.push_back(std::move(row));
    }
  }

  if (common.format == "json") {
    json reports = json::array();
    for (const auto& r : rows) {
      json ctx = json::object();
      for (const auto& [k, v] : r.context) ctx[k] = jnum(v);
      reports.push_back({{"check", r.check},
                         {"name", r.report.name},
                         {"computed", jnum(r.report.computed)},
                         {"bound", jnum(r.report.bound)},
                         {"margin", jnum(r.report.margin)},
                         {"tolerance", jnum(r.report.tolerance)},
                         {"satisfied", r.report.satisfied != 0},
                         {"asserted", r.report.asserted != 0},
                         {"note", r.report.note},
                         {"context", ctx}});
    }
    emit_json(common, m, {{"reports", reports}});
    return kExitOk;
  }

  Output out(common.out);
  auto& os = out.stream();
  m.write_csv_header(os);
  os << "check,name,computed,bound,margin,tolerance,satisfied,asserted,context,note\n";
  for (const auto& r : rows) {
    std::string ctx;
    for (const auto& [k, v] : r.context) ctx += (ctx.empty() ? "" : ";") + k + '=' + num(v);
    os << r.check << ',' << r.report.name << ',' << num(r.report.computed) << ',' << num(r.report.bound) << ','
       << num(r.report.margin) << ',' << num(r.report.tolerance) << ',' << (r.report.satisfied ? "true" : "false")
       << ',' << (r.report.asserted ? "true" : "false") << ',' << ctx << ",\"" << r.report.note << "\"\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct KernelArgs : ProblemArgs {
  int grid = 21;
  std::string which = "residual";
};

int run_kernel(const Common& common, const KernelArgs& a) {
  if (a.grid < 2) throw UsageError("grid must be >= 2");
  static const std::map<std::string, dhpss_kernel_kind> kinds = {{"discrete", DHPSS_KERNEL_DISCRETE},
                                                                 {"continuous", DHPSS_KERNEL_CONTINUOUS},
                                                                 {"correction", DHPSS_KERNEL_CORRECTION},
                                                                 {"residual", DHPSS_KERNEL_RESIDUAL}};
  const std::vector<std::string> which = split_list(a.which);
  if (which.empty()) throw UsageError("--which must name at least one grid");
  for (const auto& w : which) {
    if (!kinds.count(w)) throw UsageError("unknown kernel '" + w + "'");
  }

  auto problem = make_problem(a.alpha, a.omega, a.n, common.quad_points);
  Manifest m("kernel");
  add_problem_params(m, a.alpha, a.omega, a.n, problem.get());
  m.param("grid", a.grid);
  m.param("which", a.which);

  const auto g = static_cast<size_t>(a.grid);
  std::vector<double> x(g);
  for (size_t i = 0; i < g; ++i) x[i] = a.omega * static_cast<double>(i) / static_cast<double>(g - 1);
  x.back() = a.omega;

  std::vector<std::vector<std::vector<double>>> grids;
  for (const auto& w : which) {
    std::vector<std::vector<double>> grid(g, std::vector<double>(g));
    for (size_t i = 0; i < g; ++i) {
      for (size_t j = i; j < g; ++j) {
        check(dhpss_kernel_value(problem.get(), kinds.at(w), x[i], x[j], &grid[i][j]));
        grid[j][i] = grid[i][j];
      }
    }
    grids.push_back(std::move(grid));
  }

  if (common.format == "json") {
    json body{{"x", x}};
    json gj = json::object();
    for (size_t w = 0; w < which.size(); ++w) {
      json rows = json::array();
      for (const auto& row : grids[w]) {
        json r = json::array();
        for (double v : row) r.push_back(jnum(v));
        rows.push_back(std::move(r));
      }
      gj[which[w]] = std::move(rows);
    }
    body["grids"] = std::move(gj);
    emit_json(common, m, std::move(body));
    return kExitOk;
  }
  Output out(common.out);
  auto& os = out.stream();
  m.write_csv_header(os);
  os << "kernel,x,y,value\n";
  for (size_t w = 0; w < which.size(); ++w) {
    for (size_t i = 0; i < g; ++i) {
      for (size_t j = 0; j < g; ++j) {
        os << which[w] << ',' << num(x[i]) << ',' << num(x[j]) << ',' << num(grids[w][i][j]) << '\n';
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct InghamArgs {
  double T = 0.0;
  std::string freqs;
  int count = 4;
};

int run_ingham(const Common& common, const InghamArgs& a) {
  if (!(a.T > 1.0)) throw UsageError("T must be > 1");
  std::vector<long> freqs;
  if (!a.freqs.empty()) {
    freqs = parse_freqs(a.freqs);
  } else {
    if (a.count < 1) throw UsageError("count must be >= 1");
    for (long k = 1; k <= a.count; ++k) freqs.push_back(k);
  }

  dhpss_ingham_result r{};
  check(dhpss_ingham(a.T, freqs.data(), freqs.size(), &r));

  Manifest m("ingham");
  m.param("T", a.T);
  std::string fj;
  for (long f : freqs) fj += (fj.empty() ? "" : ",") + std::to_string(f);
  m.param("freqs", fj);

  const std::vector<std::pair<std::string, double>> fields = {
      {"T", r.T},
      {"n_of_T", static_cast<double>(r.n_of_T)},
      {"omega", r.omega},
      {"eigenvalue_used", r.eigenvalue_used},
      {"upper_bound", r.upper_bound},
      {"best_constant", r.best_constant},
      {"closed_form_bound", r.closed_form},
      {"A_T", r.a_t},
      {"asymptotic_upper", r.asymptotic_upper},
      {"asymptotic_lower", r.asymptotic_lower},
      {"full_problem_size", static_cast<double>(r.full_problem_size)},
      {"full_problem_eigenvalue", r.full_problem_eigenvalue},
      {"envelope_bound", r.envelope_bound}};
  const std::vector<std::pair<std::string, bool>> flags = {{"envelope_in_window", r.envelope_in_window != 0},
                                                           {"best_le_upper", r.best_le_upper != 0},
                                                           {"upper_le_closed", r.upper_le_closed != 0},
                                                           {"upper_le_envelope", r.upper_le_envelope != 0},
                                                           {"envelope_le_closed", r.envelope_le_closed != 0}};

  if (common.format == "json") {
    json body = json::object();
    for (const auto& [k, v] : fields) body[k] = jnum(v);
    body["n_of_T"] = r.n_of_T;
    body["full_problem_size"] = r.full_problem_size;
    body["frequencies"] = freqs;
    json chain = json::object();
    for (const auto& [k, v] : flags) chain[k] = v;
    body["chain"] = std::move(chain);
    emit_json(common, m, std::move(body));
    return kExitOk;
  }
  Output out(common.out);
  auto& os = out.stream();
  m.write_csv_header(os);
  os << "quantity,value\n";
  os << "T," << num(r.T) << '\n';
  os << "n_of_T," << r.n_of_T << '\n';
  for (size_t i = 2; i < fields.size(); ++i) {
    if (fields[i].first == "full_problem_size") {
      os << "full_problem_size," << r.full_problem_size << '\n';
    } else {
      os << fields[i].first << ',' << num(fields[i].second) << '\n';
    }
  }
  for (const auto& [k, v] : flags) os << k << ',' << (v ? "true" : "false") << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

// Flat key = value file; '#' and ';' start comments. Keys are long flag names
// without the dashes. The entries are spliced in ahead of the real command-line
// flags so that those win.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    auto trim = [](std::string s) {
      const auto l = s.find_first_not_of(" \t\r\"");
      const auto r = s.find_last_not_of(" \t\r\"");
      return l == std::string::npos ? std::string() : s.substr(l, r - l + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
    if (key == "config") continue;
    if (key == "vectors") {
      if (value == "true" || value == "1") args.push_back("--vectors");
      continue;
    }
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

// Finds --config PATH / --config=PATH after the subcommand and splices the
// file's entries in right after the subcommand name.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  if (args.size() < 2) return args;
  std::optional<std::string> path;
  for (size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (!path) return args;
  std::vector<std::string> extra = read_config(*path);
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output path (default: standard output)");
  sub->add_option("--config", c.config, "Flat key = value file; flags override it");
  sub->add_option("--quad-points", c.quad_points, "Quadrature nodes (default: oscillation rule)");
}

void add_problem(CLI::App* sub, ProblemArgs& p) {
  sub->add_option("--alpha", p.alpha, "Bessel order (>= -0.5)");
  sub->add_option("--omega", p.omega, "Concentration radius in (0, 1]");
  sub->add_option("--n", p.n, "Number of basis functions N");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Hankel prolate spheroidal sequences: spectra, bounds and kernels"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", std::string(dhpss_version()));

  Common common;
  ZerosArgs zeros_args;
  SpectrumArgs spectrum_args;
  AnalyzeArgs analyze_args;
  KernelArgs kernel_args;
  InghamArgs ingham_args;

  auto* zeros = app.add_subcommand("zeros", "Positive zeros of J_alpha");
  zeros->add_option("--alpha", zeros_args.alpha, "Bessel order (>= -0.5)");
  zeros->add_option("--count", zeros_args.count, "Number of zeros");
  add_common(zeros, common);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues (and coefficient vectors) of the discrete operator");
  add_problem(spectrum, spectrum_args);
  spectrum->add_option("--method", spectrum_args.method, "gram, nystrom or both");
  spectrum->add_flag("--vectors", spectrum_args.vectors, "Also write coefficient vectors");
  add_common(spectrum, common);

  auto* analyze = app.add_subcommand("analyze", "Evaluate the decay, comparison, kernel, l2, trace and plunge checks");
  add_problem(analyze, analyze_args);
  analyze->add_option("--checks", analyze_args.checks, "Comma-separated subset of decay,sandwich,kernel,l2,trace,plunge");
  analyze->add_option("--eps", analyze_args.eps, "Plunge threshold in (0, 0.5)");
  add_common(analyze, common);

  auto* kernel = app.add_subcommand("kernel", "Kernel grids on [0, omega]^2");
  add_problem(kernel, kernel_args);
  kernel->add_option("--grid", kernel_args.grid, "Grid points per axis (>= 2)");
  kernel->add_option("--which", kernel_args.which, "Comma-separated subset of discrete,continuous,correction,residual");
  add_common(kernel, common);

  auto* ingham = app.add_subcommand("ingham", "Upper bounds for Ingham's constant");
  ingham->add_option("--T", ingham_args.T, "Half-length of the time window (> 1)")->required();
  ingham->add_option("--freqs", ingham_args.freqs, "Comma-separated increasing positive integers");
  ingham->add_option("--count", ingham_args.count, "Use frequencies 1..count when --freqs is absent");
  add_common(ingham, common);

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
      app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? kExitOk : kExitUsage;
    }

    if (*zeros) return run_zeros(common, zeros_args);
    if (*spectrum) return run_spectrum(common, spectrum_args);
    if (*analyze) return run_analyze(common, analyze_args);
    if (*kernel) return run_kernel(common, kernel_args);
    if (*ingham) return run_ingham(common, ingham_args);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
