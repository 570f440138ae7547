#include "zonocalc/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "zonocalc/config.hpp"
#include "zonocalc/json_io.hpp"
#include "zonocalc/search.hpp"

namespace zonocalc {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json load_input(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return parse_json(inline_json);
  if (path.empty()) throw InputError("no input: pass --input FILE or --json TEXT");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string scalar_display(const Scalar& s) {
  return s.is_exact() ? s.str() : fmt17(s.float_value());
}

void print_check_human(const CheckResult& r, const std::string& statement, std::ostream& out) {
  out << r.check_id << ": " << to_string(r.verdict) << "  margin=" << scalar_display(r.margin)
      << "  mode=" << to_string(r.mode);
  if (r.tolerance > 0.0) out << "  tol=" << fmt17(r.tolerance);
  if (!statement.empty()) out << "  [" << statement << "]";
  if (!r.note.empty()) out << "\n  note: " << r.note;
  out << "\n";
}

void print_check_csv(const CheckResult& r, std::ostream& out, bool header) {
  if (header) out << "check_id,verdict,margin,lhs,rhs,mode,tolerance,seed,note\n";
  out << r.check_id << ',' << to_string(r.verdict) << ',' << scalar_display(r.margin) << ','
      << scalar_display(r.lhs) << ',' << scalar_display(r.rhs) << ',' << to_string(r.mode) << ','
      << fmt17(r.tolerance) << ',' << (r.seed ? std::to_string(*r.seed) : "") << ','
      << r.note << "\n";
}

int emit_check_result(const CheckResult& r, const std::string& format, std::ostream& out) {
  if (format == "human") {
    const CheckInfo* info = find_check(r.check_id);
    print_check_human(r, info ? info->statement : "", out);
  } else if (format == "csv") {
    print_check_csv(r, out, true);
  } else {
    out << check_result_to_json(r).dump() << "\n";
  }
  return r.exit_code();
}

struct CommonOpts {
  std::string input_path;
  std::string inline_json;
  std::string format = "json";
  std::string mode;
};

void add_common(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--input", o->input_path, "input JSON file");
  cmd->add_option("--json", o->inline_json, "inline JSON input");
  cmd->add_option("--format", o->format, "output format: json|csv|human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  cmd->add_option("--mode", o->mode, "arithmetic mode override: exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_flag_callback("--exact", [o] { o->mode = "exact"; }, "shorthand for --mode exact");
  cmd->add_flag_callback("--float", [o] { o->mode = "float"; }, "shorthand for --mode float");
}

json maybe_to_float(json j, const std::string& mode) {
  if (mode != "float") return j;
  // Re-tag container types so the parser produces float geometry.
  if (j.is_object() && j.contains("type") && j["type"] == "zonotope") j["mode"] = "float";
  return j;
}

int cmd_compute(const std::string& kind, const CommonOpts& o, std::ostream& out) {
  json in = maybe_to_float(load_input(o.input_path, o.inline_json), o.mode);
  if (kind == "volume") {
    Zonotope z = zonotope_from_json(in);
    if (o.mode == "float" && z.mode() == Mode::Exact) z = z.to_float();
    out << scalar_display(volume(z)) << "\n";
  } else if (kind == "projection") {
    Zonotope z = zonotope_from_json(in.at("zonotope"));
    std::vector<Vector> basis;
    for (const json& b : in.at("basis")) basis.push_back(vector_from_json(b));
    for (Vector& b : basis)
      if (b.mode() != z.mode()) b = z.mode() == Mode::Float ? b.to_float() : b;
    out << scalar_display(projection_volume(z, basis)) << "\n";
  } else if (kind == "mixed") {
    std::vector<Zonotope> slots;
    for (const json& s : in.at("slots")) slots.push_back(zonotope_from_json(s));
    out << scalar_display(mixed_volume(slots)) << "\n";
  } else if (kind == "surface") {
    out << scalar_display(surface_area(zonotope_from_json(in))) << "\n";
  } else if (kind == "steiner3") {
    SteinerPoly p = steiner3(zonotope_from_json(in));
    out << poly_to_json(p).dump() << "\n";
  } else if (kind == "ellipsoid-volume") {
    out << scalar_display(volume(ellipsoid_from_json(in))) << "\n";
  } else {
    throw InputError("unknown compute kind: " + kind);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zonocalc: zonotope/ellipsoid volume calculus and inequality checking"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate a geometric quantity");
  std::string compute_kind;
  compute->add_option("kind", compute_kind,
                      "volume|projection|mixed|surface|steiner3|ellipsoid-volume")
      ->required();
  CommonOpts compute_opts;
  add_common(compute, &compute_opts);

  // check
  auto* check = app.add_subcommand("check", "run one named inequality check");
  std::string check_id;
  check->add_option("id", check_id, "check id (see list-checks)")->required();
  CommonOpts check_opts;
  add_common(check, &check_opts);
  double check_p = 0.0;
  check->add_option("--p", check_p, "exponent p for lp checks");

  // search
  auto* search = app.add_subcommand("search", "run a randomized falsification campaign");
  std::string search_id;
  search->add_option("id", search_id, "check id");
  std::string campaign_config;
  search->add_option("--config", campaign_config, "campaign as a JSON file (flags then override)");
  CommonOpts search_opts;
  add_common(search, &search_opts);
  std::uint64_t trials = 1000, seed = 0;
  int dim = 3;
  std::string gens = "3..6";
  std::string dist = "integer-lattice";
  std::string out_path;
  double p_opt = 3.0;
  int lattice_range = 10;
  search->add_option("--trials", trials, "number of trials");
  search->add_option("--seed", seed, "campaign seed");
  search->add_option("--dim", dim, "ambient dimension");
  search->add_option("--gens", gens, "generator count range A..B");
  search->add_option("--dist", dist,
                     "integer-lattice|gaussian|sphere-uniform|flat|near-parallel");
  search->add_option("--range", lattice_range, "integer lattice coordinate range");
  search->add_option("--p", p_opt, "exponent p for lp checks");
  search->add_option("--out", out_path, "JSONL output path (records + summary footer)");

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "reproduce a built-in counterexample");
  std::string case_id;
  repro_cmd->add_option("case", case_id, "marcus.flat-disk|lp.det.p3|lp.polygon|gamma.threshold|c3.note")
      ->required();
  CommonOpts repro_opts;
  add_common(repro_cmd, &repro_opts);

  // list-checks
  auto* list = app.add_subcommand("list-checks", "enumerate check ids");
  std::string list_format = "human";
  list->add_option("--format", list_format, "json|human")->check(CLI::IsMember({"json", "human"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_kind, compute_opts, out);

    if (check->parsed()) {
      const CheckInfo& info = require_check(check_id);
      json in = load_input(check_opts.input_path, check_opts.inline_json);
      if (check_p > 0.0 && !in.contains("p")) in["p"] = check_p;
      CheckResult r = info.evaluate(in);
      return emit_check_result(r, check_opts.format, out);
    }

    if (search->parsed()) {
      Campaign c;
      if (!campaign_config.empty()) {
        c = Campaign::from_json(load_input(campaign_config, ""));
        if (!search_id.empty()) c.check_id = search_id;
      } else if (search_id.empty()) {
        throw InputError("search needs a check id or --config");
      } else {
        c.check_id = search_id;
      }
      if (search->count("--trials")) c.trials = trials;
      if (search->count("--seed")) c.seed = seed;
      if (search->count("--dim")) c.instance.dim = dim;
      if (search->count("--p")) c.instance.p = p_opt;
      if (search->count("--range")) c.instance.lattice_range = lattice_range;
      if (search->count("--gens") || campaign_config.empty()) {
        auto sep = gens.find("..");
        if (sep == std::string::npos) throw InputError("--gens expects A..B");
        c.instance.gens_min = std::stoi(gens.substr(0, sep));
        c.instance.gens_max = std::stoi(gens.substr(sep + 2));
      }
      if (search->count("--dist") || campaign_config.empty()) {
        if (dist == "integer-lattice") c.instance.dist = InstanceConfig::Dist::IntegerLattice;
        else if (dist == "gaussian") c.instance.dist = InstanceConfig::Dist::Gaussian;
        else if (dist == "sphere-uniform") c.instance.dist = InstanceConfig::Dist::SphereUniform;
        else if (dist == "flat") c.instance.dist = InstanceConfig::Dist::Flat;
        else if (dist == "near-parallel") c.instance.dist = InstanceConfig::Dist::NearParallel;
        else throw InputError("unknown distribution: " + dist);
      }
      if (search_opts.mode == "float" || c.instance.dist == InstanceConfig::Dist::Gaussian ||
          c.instance.dist == InstanceConfig::Dist::SphereUniform)
        c.instance.mode = Mode::Float;
      else if (search_opts.mode == "exact")
        c.instance.mode = Mode::Exact;
      require_check(c.check_id);

      auto t0 = std::chrono::steady_clock::now();
      CampaignSummary s;
      if (!out_path.empty()) {
        std::ofstream records(out_path);
        if (!records) throw InputError("cannot open output file: " + out_path);
        s = run_campaign(c, &records);
      } else {
        s = run_campaign(c, nullptr);
      }
      auto t1 = std::chrono::steady_clock::now();
      err << "campaign runtime: "
          << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
      out << s.to_json().dump() << "\n";
      return s.violated == 0 ? 0 : 2;
    }

    if (repro_cmd->parsed()) {
      CheckResult r = repro(case_id);
      return emit_check_result(r, repro_opts.format, out);
    }

    if (list->parsed()) {
      if (list_format == "json") {
        json arr = json::array();
        for (const CheckInfo& c : check_registry())
          arr.push_back({{"id", c.id}, {"statement", c.statement}, {"exact", c.exact_capable}});
        for (const std::string& id : repro_case_ids())
          arr.push_back({{"id", "repro:" + id}, {"statement", "built-in reproduction"}, {"exact", false}});
        out << arr.dump(2) << "\n";
      } else {
        for (const CheckInfo& c : check_registry())
          out << c.id << (c.exact_capable ? "  [exact] " : "  [float] ") << c.statement << "\n";
        out << "repro cases:";
        for (const std::string& id : repro_case_ids()) out << " " << id;
        out << "\n";
      }
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad input: " << e.what() << "\n";
    return 64;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}

}  // namespace zonocalc
