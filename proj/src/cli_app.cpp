#include "viswork/cli_app.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "viswork/errors.hpp"
#include "viswork/runner.hpp"
#include "viswork/svg.hpp"
#include "viswork/testgen.hpp"

namespace viswork {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& content,
          std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write file '" + path + "'");
  out << content;
}

std::string instance_text(const std::vector<Point>& vertices, const Point& q) {
  std::string out = std::to_string(vertices.size()) + "\n";
  for (const Point& p : vertices) out += p.x.str() + " " + p.y.str() + "\n";
  out += "q " + q.x.str() + " " + q.y.str() + "\n";
  return out;
}

template <typename T>
std::vector<T> split_list(const std::string& csv,
                          T (*one)(const std::string&)) {
  std::vector<T> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(one(item));
  }
  if (out.empty())
    fail(ErrorCode::ParseError, "empty list '" + csv + "'");
  return out;
}

std::size_t parse_size(const std::string& s) {
  try {
    return std::stoul(s);
  } catch (const std::logic_error&) {
    fail(ErrorCode::ParseError, "bad number '" + s + "'");
  }
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    return std::stoull(s);
  } catch (const std::logic_error&) {
    fail(ErrorCode::ParseError, "bad seed '" + s + "'");
  }
}

AlgoKind parse_algo(const std::string& s) { return algo_from(s); }

LoadOptions load_opts(bool strict_set, bool strict) {
  LoadOptions opts;
  if (strict_set) opts.strict = strict;
  return opts;
}

// generated instances keep the strict-validated handle; files are loaded here
std::vector<std::pair<std::string, PolygonHandle>> gather_instances(
    const std::vector<std::string>& specs,
    const std::vector<std::string>& files, const LoadOptions& opts) {
  std::vector<std::pair<std::string, PolygonHandle>> instances;
  for (const std::string& text : specs) {
    Generated g = generate(GenSpec::parse(text));
    if (!g.handle)
      fail(ErrorCode::InvalidQuery,
           "'" + g.spec.str() + "' generates an invalid instance on purpose");
    instances.emplace_back(g.spec.str(), std::move(*g.handle));
  }
  for (const std::string& path : files) {
    instances.emplace_back(path, load_text(slurp(path), opts));
  }
  if (instances.empty())
    fail(ErrorCode::ParseError, "no instances: pass --spec or input files");
  return instances;
}

// scan ignores s and seed; dnc-det ignores seed. Duplicates are dropped.
std::vector<RunConfig> expand_configs(const std::vector<AlgoKind>& algos,
                                      const std::vector<std::size_t>& s_list,
                                      const std::vector<std::uint64_t>& seeds,
                                      bool validate) {
  std::vector<RunConfig> out;
  for (AlgoKind a : algos) {
    if (a == AlgoKind::SCAN) {
      out.push_back({a, 1, 0, false});
      continue;
    }
    for (std::size_t s : s_list) {
      if (a == AlgoKind::DNC_DET) {
        out.push_back({a, s, 0, validate});
        continue;
      }
      for (std::uint64_t seed : seeds) out.push_back({a, s, seed, validate});
    }
  }
  return out;
}

struct ComputeArgs {
  std::string input, spec, algo = "scan", format = "text", out_path;
  std::size_t s = 1;
  std::uint64_t seed = 0;
  bool validate = false;
  bool strict = false;
  bool strict_set = false;
};

int run_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.input.empty() == a.spec.empty()) {
    err << "compute needs exactly one of --input or --gen\n";
    return 2;
  }
  std::string family = "file";
  PolygonHandle h = [&]() -> PolygonHandle {
    if (a.spec.empty())
      return load_text(slurp(a.input), load_opts(a.strict_set, a.strict));
    Generated g = generate(GenSpec::parse(a.spec));
    family = g.spec.family_name();
    if (g.handle) return std::move(*g.handle);
    // degenerate fixtures must fail here with their specific error
    return load(std::move(g.vertices), std::move(g.q), load_opts(true, true));
  }();

  RunConfig cfg;
  cfg.algo = algo_from(a.algo);
  cfg.s = a.s;
  cfg.seed = a.seed;
  cfg.validate = a.validate;
  RunResult res = run_algo(h, cfg, family);

  if (a.format == "text") {
    std::string text = events_text(res.events);
    text += "# " + csv_header().substr(std::string(CSV_BANNER).size() + 1) +
            "\n# " + csv_row(res.report) + "\n";
    emit(a.out_path, text, out);
  } else if (a.format == "json") {
    nlohmann::json j;
    j["report"] = nlohmann::json::parse(report_json(res.report));
    j["events"] = nlohmann::json::parse(events_json(res.events));
    emit(a.out_path, j.dump(2) + "\n", out);
  } else {
    emit(a.out_path, render_svg(h, res.events), out);
  }
  return 0;
}

struct ListArgs {
  std::vector<std::string> specs, files;
  std::string algos = "scan,dnc-det,dnc-rand", s_csv = "1,3", seeds_csv = "0";
  bool strict = false, strict_set = false, validate = false;
};

int run_verify(const ListArgs& a, bool inject_fault, std::ostream& out) {
  auto instances =
      gather_instances(a.specs, a.files, load_opts(a.strict_set, a.strict));
  auto configs =
      expand_configs(split_list(a.algos, parse_algo),
                     split_list(a.s_csv, parse_size),
                     split_list(a.seeds_csv, parse_seed), a.validate);
  VerifyReport rep = verify_instances(instances, configs, inject_fault, out);
  out << "verified " << rep.instances << " instances, " << rep.runs
      << " runs, " << rep.mismatches << " mismatches\n";
  return rep.mismatches == 0 ? 0 : 1;
}

int run_bench(const ListArgs& a, std::size_t reps, const std::string& out_path,
              std::ostream& out) {
  auto instances =
      gather_instances(a.specs, a.files, load_opts(a.strict_set, a.strict));
  auto configs =
      expand_configs(split_list(a.algos, parse_algo),
                     split_list(a.s_csv, parse_size),
                     split_list(a.seeds_csv, parse_seed), a.validate);
  std::ostringstream buf;
  bench_instances(instances, configs, reps == 0 ? 1 : reps, buf);
  emit(out_path, buf.str(), out);
  return 0;
}

int run_gen(const std::string& spec_text, const std::string& format,
            const std::string& out_path, std::ostream& out) {
  Generated g = generate(GenSpec::parse(spec_text));
  if (format == "text") {
    emit(out_path, instance_text(g.vertices, g.q), out);
  } else if (format == "json") {
    nlohmann::json j;
    j["spec"] = g.spec.str();
    j["family"] = g.spec.family_name();
    j["n"] = g.vertices.size();
    j["valid"] = g.handle.has_value();
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& p : g.vertices)
      verts.push_back({p.x.str(), p.y.str()});
    j["vertices"] = std::move(verts);
    j["q"] = {g.q.x.str(), g.q.y.str()};
    emit(out_path, j.dump(2) + "\n", out);
  } else {
    emit(out_path, render_svg(g.vertices, g.q, {}), out);
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"visibility polygons in simple polygons under tight workspace "
               "budgets"};
  app.require_subcommand(0, 1);

  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand(
      "compute", "compute the visibility polygon of one instance");
  compute->add_option("--input,-i", ca.input, "instance file");
  compute->add_option("--gen,-g", ca.spec, "generator spec, e.g. comb:m=8");
  compute->add_option("--algo,-a", ca.algo, "algorithm")
      ->check(CLI::IsMember({"scan", "dnc-det", "dnc-rand"}));
  compute->add_option("--s", ca.s, "workspace exponent (dnc)");
  compute->add_option("--seed", ca.seed, "rng seed (dnc-rand)");
  compute->add_flag("--validate", ca.validate,
                    "cross-check partition picks against the rank oracle");
  compute->add_option("--format,-f", ca.format, "output format")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  compute->add_option("--out,-o", ca.out_path, "output file (default stdout)");
  auto* cs = compute->add_flag("--strict,!--no-strict", ca.strict,
                               "full O(n^2) load validation");

  ListArgs va;
  bool inject_fault = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "check algorithms against the quadratic reference");
  verify->add_option("--spec", va.specs, "generator specs (repeatable)")
      ->allow_extra_args(false);
  verify->add_option("files", va.files, "instance files");
  verify->add_option("--algos", va.algos, "comma list of algorithms");
  verify->add_option("--s-list", va.s_csv, "comma list of workspace exponents");
  verify->add_option("--seeds", va.seeds_csv, "comma list of rng seeds");
  verify->add_flag("--validate", va.validate,
                   "also cross-check partition picks");
  auto* vs = verify->add_flag("--strict,!--no-strict", va.strict,
                              "full O(n^2) load validation");
  verify->add_flag("--inject-fault", inject_fault,
                   "corrupt each run's output to prove mismatches are caught")
      ->group("");

  ListArgs ba;
  std::size_t reps = 3;
  std::string bench_out;
  CLI::App* bench =
      app.add_subcommand("bench", "measure runs and emit CSV metrics");
  bench->add_option("--spec", ba.specs, "generator specs (repeatable)")
      ->allow_extra_args(false);
  bench->add_option("files", ba.files, "instance files");
  bench->add_option("--algos", ba.algos, "comma list of algorithms");
  bench->add_option("--s-list", ba.s_csv, "comma list of workspace exponents");
  bench->add_option("--seeds", ba.seeds_csv, "comma list of rng seeds");
  bench->add_option("--reps", reps, "repetitions per configuration");
  bench->add_option("--out,-o", bench_out, "output file (default stdout)");
  auto* bs = bench->add_flag("--strict,!--no-strict", ba.strict,
                             "full O(n^2) load validation");

  std::string gen_spec, gen_format = "text", gen_out;
  CLI::App* gen =
      app.add_subcommand("gen", "write a generated instance to a file");
  gen->add_option("--spec", gen_spec, "generator spec")->required();
  gen->add_option("--format,-f", gen_format, "output format")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  ca.strict_set = cs->count() > 0;
  va.strict_set = vs->count() > 0;
  ba.strict_set = bs->count() > 0;

  try {
    if (compute->parsed()) return run_compute(ca, out, err);
    if (verify->parsed()) return run_verify(va, inject_fault, out);
    if (bench->parsed()) return run_bench(ba, reps, bench_out, out);
    if (gen->parsed()) return run_gen(gen_spec, gen_format, gen_out, out);
  } catch (const VisworkError& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::InternalError ? 4 : 3;
  }

  err << app.help();
  return 2;
}

}  // namespace viswork
