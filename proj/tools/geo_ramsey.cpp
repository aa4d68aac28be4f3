// geo_ramsey: generate, certify, extract and draw geometric Ramsey instances.
//
// Exit codes: 0 pass, 1 fail, 2 enumeration budget exceeded, 3 bad input.

#include "georamsey/georamsey.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace georamsey;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitError = 3;

struct Params {
  std::size_t n = 0;
  std::size_t q = 1;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  unsigned t = 0;
  std::size_t M = 0;
  std::optional<std::size_t> steps;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::size_t size = 0;
  unsigned bits = kDefaultCoordinateBits;
  bool expect_absent = false;
  bool no_verify = false;
  std::string out = ".";
  std::string points_file;
  std::string coloring_file;
  std::string highlight;
  std::string svg_file;
};

std::uint64_t resolve_budget(const Params& p) {
  if (p.budget) {
    return *p.budget;
  }
  if (const char* env = std::getenv("GEO_RAMSEY_BUDGET")) {
    try {
      std::size_t used = 0;
      const std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) {
        return v;
      }
    } catch (const std::exception&) {
    }
    throw BadInput(std::string("GEO_RAMSEY_BUDGET is not a number: ") + env);
  }
  return kDefaultBudget;
}

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw BadInput(what);
  }
}

std::vector<ExactPoint> load_points(const std::string& path) {
  require(!path.empty(), "--points is required");
  std::ifstream in(path);
  if (!in) {
    throw BadInput("cannot open " + path);
  }
  return read_points(in);
}

EdgeColoring load_coloring(const std::string& path) {
  require(!path.empty(), "--coloring is required");
  std::ifstream in(path);
  if (!in) {
    throw BadInput("cannot open " + path);
  }
  return read_coloring(in);
}

fs::path output_path(const Params& p, const std::string& name) {
  fs::create_directories(p.out);
  return fs::path(p.out) / name;
}

void save_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << text;
}

std::string points_text(std::span<const ExactPoint> pts) {
  std::ostringstream s;
  write_points(s, pts);
  return s.str();
}

template <SubsetColoring C>
std::string coloring_text(const C& c) {
  std::ostringstream s;
  write_coloring(s, c);
  return s.str();
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) {
    return out;
  }
  std::istringstream items(text);
  for (std::string item; std::getline(items, item, ',');) {
    std::size_t used = 0;
    std::size_t v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw BadInput("bad vertex index '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s;
}

// A search certificate turned into a statement that nothing was found.
Certificate absence(Certificate c) {
  c.verdict = c.passed() ? Verdict::Fail : Verdict::Pass;
  c.property += "-absent";
  return c;
}

Certificate no_convex_certificate(const PointConfig& config, std::size_t n) {
  const std::size_t best = max_convex_subset_size(config.points());
  Certificate c;
  c.property = "no-convex";
  c.verdict = best < n ? Verdict::Pass : Verdict::Fail;
  c.examined = config.size();
  c.details = {{"n", std::to_string(n)}, {"max_convex", std::to_string(best)}};
  return c;
}

Certificate clique_free_certificate(const EdgeColoring& pairs, std::size_t n) {
  Certificate c;
  c.property = "no-mono-clique";
  c.examined = binomial(pairs.vertex_count(), n);
  c.details = {{"n", std::to_string(n)}};
  if (auto clique = find_monochromatic_clique(pairs, n)) {
    c.verdict = Verdict::Fail;
    c.witness = std::move(*clique);
  }
  return c;
}

int report(const Certificate& c) {
  std::cout << to_string(c) << '\n';
  return c.passed() ? kExitPass : kExitFail;
}

int summarize(const std::string& kind, std::size_t points, const std::vector<fs::path>& files,
              const std::optional<Certificate>& cert) {
  std::cout << "generated kind=" << kind << " points=" << points << " files=";
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::cout << (i ? "," : "") << files[i].string();
  }
  std::cout << '\n';
  if (!cert) {
    std::cout << "verdict=skipped\n";
    return kExitPass;
  }
  return report(*cert);
}

int cmd_generate(const std::string& kind, const Params& p) {
  const bool verify = !p.no_verify;
  const EnumerationOptions opts{resolve_budget(p), true};

  if (kind == "cupcap-free") {
    const PointConfig pts = gen_cupcap_free(p.k, p.l);
    const auto file = output_path(p, "cupcap-free.points.txt");
    save_text(file, points_text(pts.points()));
    return summarize(kind, pts.size(), {file},
                     verify ? std::optional(verify_cupcap_free(pts.points(), p.k, p.l)) : std::nullopt);
  }
  if (kind == "no-convex") {
    require(p.n >= 3, "no-convex needs --n >= 3");
    const PointConfig pts = gen_no_convex(p.n);
    const auto file = output_path(p, "no-convex.points.txt");
    save_text(file, points_text(pts.points()));
    return summarize(kind, pts.size(), {file}, verify ? std::optional(no_convex_certificate(pts, p.n)) : std::nullopt);
  }
  if (kind == "blowup") {
    const BlowupInstance inst = gen_blowup_coloring(p.n, p.q);
    const auto pf = output_path(p, "blowup.points.txt");
    const auto cf = output_path(p, "blowup.coloring.txt");
    save_text(pf, points_text(inst.config.points()));
    save_text(cf, coloring_text(inst.coloring));
    std::optional<Certificate> cert;
    if (verify) {
      cert = absence(has_mono_convex_subset(inst.config.points(), inst.coloring, p.n, opts));
    }
    return summarize(kind, inst.config.size(), {pf, cf}, cert);
  }
  if (kind == "stepup-points") {
    const SteppingUpSet set = gen_stepup_points(p.t);
    const auto file = output_path(p, "stepup-points.points.txt");
    save_text(file, points_text(set.config.points()));
    return summarize(kind, set.size(), {file}, verify ? std::optional(verify_stepup_constraints(set)) : std::nullopt);
  }
  if (kind == "stepup-coloring") {
    const std::size_t clique = p.n ? p.n : 3;
    EdgeColoring base;
    if (!p.coloring_file.empty()) {
      base = load_coloring(p.coloring_file);
    } else {
      require(p.M >= 1, "stepup-coloring needs --M or a base --coloring");
      auto found = find_ramsey_witness(p.M, clique, {.seed = p.seed});
      if (!found) {
        throw BadBase("no 2-coloring of K_" + std::to_string(p.M) + " without a monochromatic K_" +
                      std::to_string(clique) + " was found");
      }
      base = std::move(*found);
    }
    const EdgeColoring lifted = gen_stepup_coloring(base);
    const SteppingUpSet set = gen_stepup_points(static_cast<unsigned>(base.vertex_count()));
    const auto pf = output_path(p, "stepup-coloring.points.txt");
    const auto bf = output_path(p, "stepup-coloring.base.txt");
    const auto cf = output_path(p, "stepup-coloring.coloring.txt");
    save_text(pf, points_text(set.config.points()));
    save_text(bf, coloring_text(base));
    save_text(cf, coloring_text(lifted));
    std::optional<Certificate> cert;
    if (verify) {
      cert = check_monotone_case_bound(base, lifted, clique, opts);
    }
    return summarize(kind, set.size(), {pf, bf, cf}, cert);
  }
  if (kind == "ramsey-witness") {
    require(p.m >= 1 && p.n >= 2, "ramsey-witness needs --m >= 1 and --n >= 2");
    auto found = find_ramsey_witness(p.m, p.n, {.seed = p.seed});
    if (!found) {
      std::cout << "verdict=fail property=ramsey-witness examined=0 witness=none m=" << p.m << " n=" << p.n
                << " reason=not_found\n";
      return kExitFail;
    }
    const auto file = output_path(p, "ramsey-witness.coloring.txt");
    save_text(file, coloring_text(*found));
    return summarize(kind, p.m, {file}, verify ? std::optional(clique_free_certificate(*found, p.n)) : std::nullopt);
  }
  if (kind == "random") {
    require(p.size >= 1, "random needs --size >= 1");
    const PointConfig pts = random_points(p.size, p.seed, p.bits);
    const EdgeColoring col = random_coloring(2, p.q, p.size, p.seed);
    const auto pf = output_path(p, "random.points.txt");
    const auto cf = output_path(p, "random.coloring.txt");
    save_text(pf, points_text(pts.points()));
    save_text(cf, coloring_text(col));
    std::optional<Certificate> cert;
    if (verify) {
      Certificate c;
      c.property = "general-position";
      c.examined = pts.size();
      cert = c;
    }
    return summarize(kind, pts.size(), {pf, cf}, cert);
  }
  throw BadInput("unknown kind " + kind);
}

int cmd_verify(const std::string& property, const Params& p) {
  const EnumerationOptions opts{resolve_budget(p), true};
  const std::vector<ExactPoint> pts = load_points(p.points_file);

  if (property == "mono-convex") {
    require(p.n >= 1, "mono-convex needs --n");
    const EdgeColoring col = load_coloring(p.coloring_file);
    const Certificate c = has_mono_convex_subset(std::span<const ExactPoint>(pts), col, p.n, opts);
    return report(p.expect_absent ? absence(c) : c);
  }
  if (property == "cupcap-free") {
    return report(verify_cupcap_free(pts, p.k, p.l));
  }
  if (property == "stepup") {
    const unsigned level = label_level(pts.size());
    require(pts.size() >= 2 && pts.size() == (std::size_t{1} << level),
            "a stepping-up set has a power-of-two number of points");
    return report(verify_stepup_constraints(SteppingUpSet{level, PointConfig(pts)}));
  }
  if (property == "delta-local-min") {
    return report(check_delta_local_minimum_exclusion(pts, p.m ? p.m : 6));
  }
  throw BadInput("unknown property " + property);
}

int cmd_extract(const Params& p) {
  require(p.n >= 1, "extract needs --n");
  const PointConfig config(load_points(p.points_file));
  const EdgeColoring col = load_coloring(p.coloring_file);
  const ExtractionResult r = extract_mono_convex(config, col, p.n, p.steps);
  std::cout << format_report(r);
  if (!r.found()) {
    save_text(output_path(p, "report.txt"), format_report(r));
    return kExitFail;
  }
  const auto& w = r.witness->vertices;
  save_text(output_path(p, "witness.txt"), join(w) + "\n");
  save_text(output_path(p, "witness.svg"), render_svg(config.points(), &col, w));
  std::cout << "witness=" << join(w) << "\nrecheck=pass\n";
  return kExitPass;
}

int cmd_render(const Params& p) {
  const std::vector<ExactPoint> pts = load_points(p.points_file);
  std::optional<EdgeColoring> col;
  if (!p.coloring_file.empty()) {
    col = load_coloring(p.coloring_file);
  }
  const std::vector<std::size_t> hl = parse_index_list(p.highlight);
  const fs::path file = p.svg_file.empty() ? output_path(p, "render.svg") : fs::path(p.svg_file);
  save_text(file, render_svg(pts, col ? &*col : nullptr, hl));
  std::cout << "rendered points=" << pts.size() << " file=" << file.string() << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and certificates for convex Ramsey problems"};
  app.require_subcommand(1);
  Params p;
  std::string kind;
  std::string property;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", p.n, "size of the convex subset or clique");
    sub->add_option("--q", p.q, "number of colors");
    sub->add_option("--k", p.k, "cup parameter: no (k+2)-cup");
    sub->add_option("--l", p.l, "cap parameter: no (l+2)-cap");
    sub->add_option("--m", p.m, "vertex count for ramsey-witness, subset size for delta-local-min");
    sub->add_option("--t", p.t, "stepping-up level");
    sub->add_option("--M", p.M, "base vertex count for stepup-coloring");
    sub->add_option("--seed", p.seed, "random seed");
    sub->add_option("--budget", p.budget, "enumeration budget (overrides GEO_RAMSEY_BUDGET)");
    sub->add_option("--out", p.out, "output directory");
    sub->add_option("--points", p.points_file, "point-set file");
    sub->add_option("--coloring", p.coloring_file, "coloring file");
  };

  auto* gen = app.add_subcommand("generate", "build an instance and certify it");
  gen->add_option("kind", kind, "instance kind")
      ->required()
      ->check(CLI::IsMember(
          {"cupcap-free", "no-convex", "blowup", "stepup-points", "stepup-coloring", "ramsey-witness", "random"}));
  add_common(gen);
  gen->add_option("--size", p.size, "point count for random instances");
  gen->add_option("--bits", p.bits, "coordinate bits for random instances");
  gen->add_flag("--no-verify", p.no_verify, "skip certification");

  auto* ver = app.add_subcommand("verify", "certify a property of stored files");
  ver->add_option("property", property, "property to check")
      ->required()
      ->check(CLI::IsMember({"mono-convex", "cupcap-free", "stepup", "delta-local-min"}));
  add_common(ver);
  ver->add_flag("--expect-absent", p.expect_absent, "pass when no monochromatic convex subset exists");

  auto* ext = app.add_subcommand("extract", "find a monochromatic convex subset constructively");
  add_common(ext);
  ext->add_option("--steps", p.steps, "sequence length (default q*n^2)");

  auto* ren = app.add_subcommand("render", "draw a point set as SVG");
  add_common(ren);
  ren->add_option("--highlight", p.highlight, "comma-separated vertices to emphasize");
  ren->add_option("--svg", p.svg_file, "output SVG path (default OUT/render.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(kind, p);
    }
    if (ver->parsed()) {
      return cmd_verify(property, p);
    }
    if (ext->parsed()) {
      return cmd_extract(p);
    }
    return cmd_render(p);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
