// rootex: root-structure extraction from segmented 3D scans.
// Subcommands: extract (volume -> root graph), eval (graph-vs-graph
// distance-tolerant F1), gen (synthetic phantom volumes + ground truth).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rootex/config.hpp"
#include "rootex/errors.hpp"
#include "rootex/evaluate.hpp"
#include "rootex/graph_io.hpp"
#include "rootex/phantom.hpp"
#include "rootex/pipeline.hpp"
#include "rootex/volume.hpp"

namespace {

using rootex::ExtractionConfig;
using rootex::InputError;

rootex::Vec3i parse_start(const std::string& text) {
  rootex::Vec3i p;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> p.x >> c1 >> p.y >> c2 >> p.z) || c1 != ',' || c2 != ',')
    throw InputError("--start expects x,y,z");
  return p;
}

rootex::Axis parse_axis(const std::string& text) {
  if (text == "x") return rootex::Axis::X;
  if (text == "y") return rootex::Axis::Y;
  if (text == "z") return rootex::Axis::Z;
  throw InputError("--cut-axis expects x, y or z");
}

// Plain "key value" lines, keys named after the long flags. Flags given on
// the command line take precedence over the file; the file over defaults.
std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key >> value))
      throw InputError("config file: malformed line " + std::to_string(line_no) +
                       " in " + path);
    kv[key] = value;
  }
  return kv;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InputError("config file: bad numeric value for " + key);
  }
}

struct ExtractCli {
  std::string in_path, out_path, start_text, config_path, debug_dir;
  std::string cost_kind = "rad";
  std::string cut_axis = "z";
  bool auto_start = false;
  bool skip_lcc = false;
  double gamma = 0, omega = 0, w_rad = 0, epsilon = 0, beta = 0, delta = 0;
  double fill_seg = 0, fill_lcc = 0, gap_penalty = 0;
  int gap_len = 0, cut_z = 0, quench_threshold = 0, threads = 0;
};

void apply_config_file(ExtractionConfig& cfg, rootex::CostKind& kind,
                       const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "gamma") cfg.gamma = to_double(key, value);
    else if (key == "omega") cfg.omega = to_double(key, value);
    else if (key == "gap-len") cfg.gap_len = int(to_double(key, value));
    else if (key == "w-rad") cfg.w_rad = to_double(key, value);
    else if (key == "epsilon") cfg.epsilon = to_double(key, value);
    else if (key == "beta") cfg.beta = to_double(key, value);
    else if (key == "delta") cfg.delta = to_double(key, value);
    else if (key == "cut-z") cfg.cut_z = int(to_double(key, value));
    else if (key == "cut-axis") cfg.cut_axis = parse_axis(value);
    else if (key == "fill-seg") cfg.fill_ratio_seg = to_double(key, value);
    else if (key == "fill-lcc") cfg.fill_ratio_lcc = to_double(key, value);
    else if (key == "quench-threshold") cfg.quench_threshold = int(to_double(key, value));
    else if (key == "gap-penalty") cfg.gap_penalty = to_double(key, value);
    else if (key == "threads") cfg.threads = int(to_double(key, value));
    else if (key == "cost") {
      if (value != "rad" && value != "rel")
        throw InputError("config file: cost must be rad or rel");
      kind = value == "rad" ? rootex::CostKind::Radius : rootex::CostKind::Relative;
    } else {
      throw InputError("config file: unknown key '" + key + "'");
    }
  }
}

int run_extract_cmd(const ExtractCli& cli, const CLI::App& sub) {
  ExtractionConfig cfg;
  rootex::CostKind kind = rootex::CostKind::Radius;
  if (!cli.config_path.empty())
    apply_config_file(cfg, kind, load_config_file(cli.config_path));

  const auto given = [&sub](const char* name) { return sub.count(name) > 0; };
  if (given("--gamma")) cfg.gamma = cli.gamma;
  if (given("--omega")) cfg.omega = cli.omega;
  if (given("--gap-len")) cfg.gap_len = cli.gap_len;
  if (given("--w-rad")) cfg.w_rad = cli.w_rad;
  if (given("--epsilon")) cfg.epsilon = cli.epsilon;
  if (given("--beta")) cfg.beta = cli.beta;
  if (given("--delta")) cfg.delta = cli.delta;
  if (given("--cut-z")) cfg.cut_z = cli.cut_z;
  if (given("--cut-axis")) cfg.cut_axis = parse_axis(cli.cut_axis);
  if (given("--fill-seg")) cfg.fill_ratio_seg = cli.fill_seg;
  if (given("--fill-lcc")) cfg.fill_ratio_lcc = cli.fill_lcc;
  if (given("--quench-threshold")) cfg.quench_threshold = cli.quench_threshold;
  if (given("--gap-penalty")) cfg.gap_penalty = cli.gap_penalty;
  if (given("--threads")) cfg.threads = cli.threads;
  if (given("--cost")) {
    if (cli.cost_kind != "rad" && cli.cost_kind != "rel")
      throw InputError("--cost expects rad or rel");
    kind = cli.cost_kind == "rad" ? rootex::CostKind::Radius
                                  : rootex::CostKind::Relative;
  }
  rootex::validate(cfg);

  const rootex::VolumeF seg = rootex::read_rvol_as_float(cli.in_path);
  rootex::Vec3i start;
  if (cli.auto_start) {
    start = rootex::auto_start(seg, cfg);
    std::fprintf(stderr, "auto-start at %d,%d,%d\n", start.x, start.y, start.z);
  } else if (!cli.start_text.empty()) {
    start = parse_start(cli.start_text);
  } else {
    throw InputError("extract needs --start x,y,z or --auto-start");
  }

  const rootex::RootGraph g =
      rootex::run_extract(seg, start, cfg, kind, cli.skip_lcc, cli.debug_dir);
  rootex::write_graph(g, cli.out_path);
  std::fprintf(stderr, "extracted %d nodes, %d branches -> %s\n", g.node_count(),
               g.branch_count, cli.out_path.c_str());
  return 0;
}

int run_eval_cmd(const std::string& extracted_path, const std::string& target_path,
                 double spacing, double tolerance, const std::string& dump_path) {
  const rootex::RootGraph extracted = rootex::read_graph(extracted_path);
  const rootex::RootGraph target = rootex::read_graph(target_path);
  const auto l_g = rootex::resample(extracted, spacing);
  const auto l_t = rootex::resample(target, spacing);
  std::vector<int> matches;
  const rootex::EvalReport r =
      rootex::score_samples(l_g, l_t, tolerance, &matches);

  // One structured record: tp fp fn precision recall f1
  std::printf("%lld %lld %lld %.6f %.6f %.6f\n", (long long)r.tp, (long long)r.fp,
              (long long)r.fn, r.precision, r.recall, r.f1);

  if (!dump_path.empty()) {
    std::ofstream out(dump_path, std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + dump_path);
    out << "# target_index matched_candidate_index tx ty tz\n";
    for (std::size_t t = 0; t < matches.size(); ++t)
      out << t << ' ' << matches[t] << ' ' << l_t[t].pos.x << ' ' << l_t[t].pos.y
          << ' ' << l_t[t].pos.z << '\n';
  }
  return 0;
}

int run_gen_cmd(const std::string& spec_path, std::uint64_t seed,
                const std::string& out_vol, const std::string& out_graph) {
  const rootex::PhantomSpec spec = rootex::read_phantom_spec(spec_path);
  const rootex::Phantom phantom = rootex::generate(spec, seed);
  if (!out_vol.empty()) rootex::write_rvol(out_vol, phantom.volume);
  if (!out_graph.empty()) rootex::write_graph(phantom.graph, out_graph);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"root structure extraction and evaluation"};
  app.require_subcommand(1);

  ExtractCli ex;
  CLI::App* extract = app.add_subcommand("extract", "volume to root graph");
  extract->add_option("--in", ex.in_path, "input RVOL volume")->required();
  extract->add_option("--out", ex.out_path, "output RGRAPH1 file")->required();
  extract->add_option("--start", ex.start_text, "start voxel x,y,z");
  extract->add_flag("--auto-start", ex.auto_start, "search the start point");
  extract->add_option("--cost", ex.cost_kind, "centerline cost map: rad|rel");
  extract->add_option("--gamma", ex.gamma, "minimum root intensity");
  extract->add_option("--omega", ex.omega, "maximum path cost");
  extract->add_option("--gap-len", ex.gap_len, "max bridged gap length (0 = off)");
  extract->add_option("--w-rad", ex.w_rad, "radius weight in the voxel cost");
  extract->add_option("--epsilon", ex.epsilon, "cost floor");
  extract->add_option("--beta", ex.beta, "control-volume dilation multiplier");
  extract->add_option("--delta", ex.delta, "simplification tolerance (0 = off)");
  extract->add_option("--cut-z", ex.cut_z, "ignore quench points below this slice");
  extract->add_option("--cut-axis", ex.cut_axis, "cut axis: x|y|z");
  extract->add_option("--fill-seg", ex.fill_seg, "sphere fill ratio (intensity)");
  extract->add_option("--fill-lcc", ex.fill_lcc, "sphere fill ratio (component)");
  extract->add_option("--quench-threshold", ex.quench_threshold,
                      "neighbor dominance count");
  extract->add_option("--gap-penalty", ex.gap_penalty, "sub-gamma cost multiplier");
  extract->add_option("--threads", ex.threads, "worker cap (0 = hardware)");
  extract->add_flag("--skip-lcc", ex.skip_lcc,
                    "threshold the input and skeletonize directly");
  extract->add_option("--config", ex.config_path, "key/value parameter file");
  extract->add_option("--debug-dir", ex.debug_dir, "dump intermediate volumes here");

  std::string eval_extracted, eval_target, eval_dump;
  double eval_spacing = 1.0, eval_tolerance = 15.0;
  CLI::App* eval = app.add_subcommand("eval", "score extraction against target");
  eval->add_option("--extracted", eval_extracted, "extracted RGRAPH1")->required();
  eval->add_option("--target", eval_target, "target RGRAPH1")->required();
  eval->add_option("--spacing", eval_spacing, "resampling spacing");
  eval->add_option("--tolerance", eval_tolerance, "correspondence distance");
  eval->add_option("--dump-matches", eval_dump, "write per-sample matches here");

  std::string gen_spec, gen_vol, gen_graph;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a phantom volume");
  gen->add_option("--spec", gen_spec, "PHANTOM1 spec file")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out-vol", gen_vol, "output RVOL volume");
  gen->add_option("--out-graph", gen_graph, "output ground-truth RGRAPH1");

  try {
    app.parse(argc, argv);
    if (extract->parsed()) return run_extract_cmd(ex, *extract);
    if (eval->parsed())
      return run_eval_cmd(eval_extracted, eval_target, eval_spacing, eval_tolerance,
                          eval_dump);
    if (gen->parsed()) return run_gen_cmd(gen_spec, gen_seed, gen_vol, gen_graph);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
