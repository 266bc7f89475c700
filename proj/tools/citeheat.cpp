// Command-line front end: `citeheat run` or one stage at a time.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "citeheat/errors.hpp"
#include "citeheat/pipeline.hpp"

namespace {

struct Flags {
  std::string config;
  std::vector<std::string> years;
  std::string renames;
  double k = 1.0;
  std::string unit;
  std::vector<std::string> exclude;
  bool keep_loops = false;
  std::uint64_t seed = 1;
  std::string out;
  std::string basemap;
  unsigned threads = 1;
};

void add_options(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config, "key = value configuration file");
  app.add_option("--year", f.years, "<label>=<path>, given three times in year order");
  app.add_option("--renames", f.renames, "TSV of old_name/new_name journal renames");
  app.add_option("--k", f.k, "threshold multiplier on the standard deviation (default 1)");
  app.add_option("--unit", f.unit, "report unit: bits, mbits or microbits (default mbits)");
  app.add_option("--exclude", f.exclude, "journal to drop before analysis (repeatable)");
  app.add_flag("--keep-loops", f.keep_loops, "keep self-citation cells among hot links");
  app.add_option("--seed", f.seed, "Louvain seed (default 1)");
  app.add_option("--out", f.out, "output directory (default $CITEHEAT_OUT)");
  app.add_option("--basemap", f.basemap, "VOSviewer base map for overlays");
  app.add_option("--threads", f.threads, "worker cap; results do not depend on it")
      ->check(CLI::PositiveNumber);
}

// Flags override the config file, which overrides CITEHEAT_OUT.
citeheat::RunConfig resolve_config(const CLI::App& app, const Flags& f) {
  citeheat::RunConfig config;
  if (!f.config.empty()) config = citeheat::read_config_file(f.config);
  if (config.out.empty()) {
    if (const char* env = std::getenv("CITEHEAT_OUT"); env && *env) config.out = env;
  }
  auto given = [&app](const char* name) { return app.count(name) > 0; };
  if (given("--year")) {
    config.years.clear();
    for (const auto& spec : f.years) config.years.push_back(citeheat::parse_year_spec(spec));
  }
  if (given("--renames")) config.renames = f.renames;
  if (given("--k")) config.k = f.k;
  if (given("--unit")) config.unit = citeheat::parse_unit(f.unit);
  if (given("--exclude")) config.exclude = f.exclude;
  if (f.keep_loops) config.drop_loops = false;
  if (given("--seed")) config.seed = f.seed;
  if (given("--out")) config.out = f.out;
  if (given("--basemap")) config.basemap = f.basemap;
  if (given("--threads")) config.threads = f.threads;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hot spots in three-year citation matrices"};
  app.require_subcommand(1);
  Flags flags;
  add_options(app, flags);

  using Stage = void (*)(const citeheat::RunConfig&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Stage>> stages = {
      {"run", "all stages in order", citeheat::run_pipeline},
      {"ingest", "parse years, apply renames, build the common set", citeheat::run_ingest},
      {"flag-journals", "journal-level indicators and flags", citeheat::run_flag_journals},
      {"flag-links", "cell-level triangle scores and hot links", citeheat::run_flag_links},
      {"graph", "hot-link graph, components and communities", citeheat::run_graph},
      {"export", "VOSviewer files, overlays and summary", citeheat::run_export},
  };
  for (const auto& [name, help, stage] : stages) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto config = resolve_config(app, flags);
    for (const auto& [name, help, stage] : stages) {
      if (app.got_subcommand(name)) stage(config, std::cout);
    }
  } catch (const citeheat::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const citeheat::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const citeheat::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
