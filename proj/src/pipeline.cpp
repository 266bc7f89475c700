#include "citeheat/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <set>

#include "citeheat/errors.hpp"
#include "citeheat/io_export.hpp"
#include "citeheat/netgraph.hpp"
#include "json.hpp"
#include "text.hpp"

namespace citeheat {

namespace fs = std::filesystem;
using nlohmann::json;

YearInput parse_year_spec(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == spec.size()) {
    throw ConfigError("--year expects <label>=<path>, got '" + std::string(spec) + "'");
  }
  return {std::string(detail::trim(spec.substr(0, eq))),
          fs::path(std::string(detail::trim(spec.substr(eq + 1))))};
}

namespace {

bool parse_bool(std::string_view v, const std::string& where) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(where + ": expected true or false, got '" + std::string(v) + "'");
}

}  // namespace

RunConfig read_config_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  const fs::path base = path.parent_path();
  auto resolve = [&base](std::string_view v) {
    fs::path p{std::string(v)};
    return p.is_absolute() ? p : base / p;
  };

  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key(detail::trim(std::string_view(line).substr(0, eq)));
    const std::string value(detail::trim(std::string_view(line).substr(eq + 1)));

    if (key == "year") {
      auto year = parse_year_spec(value);
      year.path = resolve(year.path.string());
      config.years.push_back(std::move(year));
    } else if (key == "renames") {
      config.renames = resolve(value);
    } else if (key == "k") {
      const auto k = detail::parse_double(value);
      if (!k) throw ConfigError(where + ": k must be a number");
      config.k = *k;
    } else if (key == "unit") {
      config.unit = parse_unit(value);
    } else if (key == "exclude") {
      config.exclude.push_back(value);
    } else if (key == "keep_loops") {
      config.drop_loops = !parse_bool(value, where);
    } else if (key == "seed") {
      const auto seed = detail::parse_int(value);
      if (!seed || *seed < 0) throw ConfigError(where + ": seed must be a non-negative integer");
      config.seed = static_cast<std::uint64_t>(*seed);
    } else if (key == "out") {
      config.out = resolve(value);
    } else if (key == "basemap") {
      config.basemap = resolve(value);
    } else if (key == "threads") {
      const auto threads = detail::parse_int(value);
      if (!threads || *threads < 1) throw ConfigError(where + ": threads must be positive");
      config.threads = static_cast<unsigned>(*threads);
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  return config;
}

void validate_config(const RunConfig& config, bool needs_inputs) {
  if (needs_inputs) {
    if (config.years.size() != 3) {
      throw ConfigError("--year must be given exactly 3 times (got " +
                        std::to_string(config.years.size()) + ")");
    }
    for (std::size_t i = 0; i + 1 < 3; ++i) {
      if (!year_label_less(config.years[i].label, config.years[i + 1].label)) {
        throw ConfigError("--year labels must be strictly increasing: '" + config.years[i].label +
                          "' then '" + config.years[i + 1].label + "'");
      }
    }
    for (const auto& y : config.years) {
      if (!fs::is_regular_file(y.path)) {
        throw ConfigError("--year " + y.label + "=" + y.path.string() + ": file not found");
      }
    }
    if (config.renames && !fs::is_regular_file(*config.renames)) {
      throw ConfigError("--renames " + config.renames->string() + ": file not found");
    }
  }
  if (!std::isfinite(config.k) || config.k < 0.0) {
    throw ConfigError("--k must be a non-negative number");
  }
  if (config.out.empty()) throw ConfigError("--out (or CITEHEAT_OUT) is required");
  if (config.basemap && !fs::is_regular_file(*config.basemap)) {
    throw ConfigError("--basemap " + config.basemap->string() + ": file not found");
  }
}

void write_tensor_cache(const AlignedTensor& tensor, const fs::path& path) {
  std::vector<Cell> cells;
  for (const auto& year : tensor.years()) {
    for (const auto& c : year.cells()) cells.push_back(c.cell);
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  auto out = open_output(path);
  const auto& reg = tensor.registry();
  out << "citing\tcited";
  for (const auto& year : tensor.years()) out << '\t' << year.label();
  out << '\n';
  for (const Cell& c : cells) {
    out << reg.name(c.citing) << '\t' << reg.name(c.cited);
    for (const auto& year : tensor.years()) out << '\t' << year.count(c);
    out << '\n';
  }
  finish_output(out, path);
}

AlignedTensor read_tensor_cache(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " (run the ingest stage first)");
  std::string line;
  std::size_t line_no = 0;
  std::array<std::string, 3> labels;
  bool have_header = false;
  struct Row {
    std::string citing, cited;
    std::array<std::int64_t, 3> counts;
  };
  std::vector<Row> rows;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    const auto fields = detail::split_tabs(line);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (fields.size() != 5) throw DataError(where + ": expected 5 tab-separated fields");
    if (!have_header) {
      if (fields[0] != "citing" || fields[1] != "cited") throw DataError(where + ": bad header");
      for (std::size_t y = 0; y < 3; ++y) labels[y] = std::string(fields[2 + y]);
      have_header = true;
      continue;
    }
    Row row{std::string(fields[0]), std::string(fields[1]), {}};
    for (std::size_t y = 0; y < 3; ++y) {
      const auto count = detail::parse_int(fields[2 + y]);
      if (!count || *count < 0) throw DataError(where + ": bad count");
      row.counts[y] = *count;
    }
    names.insert(row.citing);
    names.insert(row.cited);
    rows.push_back(std::move(row));
  }
  if (!have_header) throw DataError(path.string() + ": empty tensor cache");

  JournalRegistry registry(std::vector<std::string>(names.begin(), names.end()), {});
  std::array<std::vector<CellCount>, 3> cells;
  for (const auto& row : rows) {
    const Cell cell{*registry.find(row.citing), *registry.find(row.cited)};
    for (std::size_t y = 0; y < 3; ++y) {
      if (row.counts[y] > 0) cells[y].push_back({cell, row.counts[y]});
    }
  }
  std::vector<YearMatrix> years;
  for (std::size_t y = 0; y < 3; ++y) {
    years.emplace_back(labels[y], registry.names(), std::move(cells[y]));
  }
  return build_common_set(registry, years);
}

namespace {

fs::path artifact(const RunConfig& config, std::string_view name) {
  return config.out / fs::path(std::string(name));
}

void ensure_output_dirs(const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(artifact(config, artifacts::kCacheDir), ec);
  if (ec) throw IoError("cannot create output directory " + config.out.string() + ": " + ec.message());
}

void write_json(const json& doc, const fs::path& path) {
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
  finish_output(out, path);
}

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " (run the earlier stages first)");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

json threshold_json(const ThresholdSpec& t) {
  return {{"k", t.k}, {"mean", t.mean}, {"sd", t.sd}, {"upper", t.upper}, {"lower", t.lower}};
}

json names_json(const std::vector<NodeId>& ids, const JournalRegistry& registry) {
  json out = json::array();
  for (NodeId id : ids) out.push_back(registry.name(id));
  return out;
}

std::array<std::string, 3> year_labels(const AlignedTensor& tensor) {
  return {tensor.year(0).label(), tensor.year(1).label(), tensor.year(2).label()};
}

std::string transition_name(const std::array<std::string, 3>& labels, TransitionPair pair) {
  return labels[prior_year(pair)] + "->" + labels[posterior_year(pair)];
}

std::vector<YearMatrix> parse_years(const RunConfig& config) {
  std::vector<YearMatrix> years;
  if (config.threads > 1) {
    std::vector<std::future<YearMatrix>> pending;
    for (const auto& y : config.years) {
      pending.push_back(std::async(std::launch::async,
                                   [&y] { return parse_edge_list(y.path, y.label); }));
    }
    for (auto& f : pending) years.push_back(f.get());
  } else {
    for (const auto& y : config.years) years.push_back(parse_edge_list(y.path, y.label));
  }
  return years;
}

}  // namespace

void run_ingest(const RunConfig& config, std::ostream& log) {
  validate_config(config, true);
  ensure_output_dirs(config);

  const auto raw = parse_years(config);
  std::vector<RenameRecord> renames;
  if (config.renames) renames = parse_renames(*config.renames);
  const auto renamed = apply_name_changes(raw, renames);
  for (const auto& w : renamed.warnings) log << "warning: " << w << '\n';

  AlignedTensor tensor = build_common_set(renamed.registry, renamed.matrices);
  const CommonSetStats stats = tensor.stats();
  const std::size_t before_exclusion = tensor.node_count();
  if (!config.exclude.empty()) tensor = remove_outliers(tensor, config.exclude);
  write_tensor_cache(tensor, artifact(config, artifacts::kTensor));

  const auto labels = year_labels(tensor);
  json years = json::array();
  for (std::size_t y = 0; y < 3; ++y) {
    std::size_t name_changes = 0;
    for (const auto& name : raw[y].names()) {
      if (renamed.registry.resolve(name) != name) ++name_changes;
    }
    years.push_back({{"year", labels[y]},
                     {"input", config.years[y].path.string()},
                     {"journals", stats.year_nodes[y]},
                     {"cited_only", stats.cited_only_nodes[y]},
                     {"links", stats.year_links[y]},
                     {"name_changes", name_changes}});
  }
  json transitions = json::array();
  for (auto pair : kTransitionPairs) {
    transitions.push_back({{"transition", transition_name(labels, pair)},
                           {"valid_cells", tensor.pair_valid(pair).size()}});
  }
  json excluded = json::array();
  for (const auto& name : config.exclude) excluded.push_back(name);
  const json doc = {
      {"years", years},
      {"transitions", transitions},
      {"all_years_cells", tensor.tri_valid().size()},
      {"journals_combined", stats.registry_nodes},
      {"common_set", before_exclusion},
      {"excluded", excluded},
      {"analysed_journals", tensor.node_count()},
      {"renames", config.renames ? config.renames->string() : std::string()},
      {"rename_warnings", renamed.warnings},
  };
  write_json(doc, artifact(config, artifacts::kIngestJson));

  log << "year\tjournals\tcited_only\tlinks\tname_changes\n";
  for (const auto& y : years) {
    log << y["year"].get<std::string>() << '\t' << y["journals"] << '\t' << y["cited_only"] << '\t'
        << y["links"] << '\t' << y["name_changes"] << '\n';
  }
  log << "transition\tvalid_cells\n";
  for (const auto& t : transitions) {
    log << t["transition"].get<std::string>() << '\t' << t["valid_cells"] << '\n';
  }
  log << "all years\t" << tensor.tri_valid().size() << '\n';
  log << "journals combined: " << stats.registry_nodes << "; common set: " << before_exclusion
      << "; analysed after exclusions: " << tensor.node_count() << '\n';
}

void run_flag_journals(const RunConfig& config, std::ostream& log) {
  validate_config(config, false);
  ensure_output_dirs(config);
  const AlignedTensor tensor = read_tensor_cache(artifact(config, artifacts::kTensor));
  const auto& registry = tensor.registry();
  const auto triangle = triangle_evaluation(tensor, config.threads);
  const auto indicators = compute_journal_indicators(tensor, triangle, config.threads);
  const AnalysisOptions options{config.k, config.drop_loops, config.threads};
  const auto report = build_flag_report(indicators, triangle, options);

  ReportInputs inputs;
  inputs.registry = &registry;
  inputs.year_labels = year_labels(tensor);
  inputs.unit = config.unit;
  inputs.indicators = &indicators;
  inputs.flags = &report;
  write_reports(inputs, config.out);

  json grand_sums = json::object();
  for (auto pair : kTransitionPairs) {
    grand_sums[transition_name(inputs.year_labels, pair)] =
        indicators.grand_sums[static_cast<std::size_t>(pair)];
  }
  const json doc = {
      {"k", config.k},
      {"unit", unit_name(config.unit)},
      {"grand_sums_bits", grand_sums},
      {"revision_total_bits", indicators.revision_cited.total},
      {"revision_excluded_cells", indicators.revision_cited.excluded_cells},
      {"thresholds_bits",
       {{"monotonic_cited_first", threshold_json(report.monotonic_cited.first)},
        {"monotonic_cited_second", threshold_json(report.monotonic_cited.second)},
        {"monotonic_citing_first", threshold_json(report.monotonic_citing.first)},
        {"monotonic_citing_second", threshold_json(report.monotonic_citing.second)},
        {"revision_cited", threshold_json(report.revision_cited.threshold)},
        {"revision_citing", threshold_json(report.revision_citing.threshold)},
        {"triangle_cited", threshold_json(report.triangle_cited.threshold)},
        {"triangle_citing", threshold_json(report.triangle_citing.threshold)}}},
      {"flags",
       {{"monotonic_cited_up", names_json(report.monotonic_cited.up, registry)},
        {"monotonic_cited_down", names_json(report.monotonic_cited.down, registry)},
        {"monotonic_citing_up", names_json(report.monotonic_citing.up, registry)},
        {"monotonic_citing_down", names_json(report.monotonic_citing.down, registry)},
        {"revision_cited", names_json(report.revision_cited.nodes, registry)},
        {"revision_citing", names_json(report.revision_citing.nodes, registry)},
        {"triangle_cited", names_json(report.triangle_cited.nodes, registry)},
        {"triangle_citing", names_json(report.triangle_citing.nodes, registry)}}},
  };
  write_json(doc, artifact(config, artifacts::kJournalsJson));

  log << "monotonic cited: " << report.monotonic_cited.up.size() << " up, "
      << report.monotonic_cited.down.size() << " down; citing: " << report.monotonic_citing.up.size()
      << " up, " << report.monotonic_citing.down.size() << " down\n";
  log << "revision flags: " << report.revision_cited.nodes.size() << " cited, "
      << report.revision_citing.nodes.size() << " citing; triangle flags: "
      << report.triangle_cited.nodes.size() << " cited, " << report.triangle_citing.nodes.size()
      << " citing\n";
}

void run_flag_links(const RunConfig& config, std::ostream& log) {
  validate_config(config, false);
  ensure_output_dirs(config);
  const AlignedTensor tensor = read_tensor_cache(artifact(config, artifacts::kTensor));
  const auto& registry = tensor.registry();
  const auto triangle = triangle_evaluation(tensor, config.threads);
  const auto hot = flag_links(triangle, config.k, config.drop_loops);

  ReportInputs inputs;
  inputs.registry = &registry;
  inputs.year_labels = year_labels(tensor);
  inputs.unit = config.unit;
  inputs.hot_links = &hot;
  write_reports(inputs, config.out);

  const auto cache_path = artifact(config, artifacts::kLinksTsv);
  auto out = open_output(cache_path);
  out << "citing\tcited\tscore_bits\n";
  for (const auto& l : hot.links) {
    out << registry.name(l.cell.citing) << '\t' << registry.name(l.cell.cited) << '\t'
        << detail::format_exact(l.score) << '\n';
  }
  finish_output(out, cache_path);

  std::set<NodeId> involved;
  for (const auto& l : hot.links) {
    involved.insert(l.cell.citing);
    involved.insert(l.cell.cited);
  }
  const json doc = {
      {"k", config.k},
      {"drop_loops", config.drop_loops},
      {"unit", unit_name(config.unit)},
      {"threshold_bits", threshold_json(hot.threshold)},
      {"triangle_cells", triangle.values.size()},
      {"hot_links", hot.links.size()},
      {"loops_removed", hot.loops_removed},
      {"journals_involved", involved.size()},
  };
  write_json(doc, artifact(config, artifacts::kLinksJson));
  log << "hot links: " << hot.links.size() << " of " << triangle.values.size()
      << " cells (loops removed: " << hot.loops_removed << "), threshold "
      << detail::format_fixed6(to_unit(hot.threshold.lower, config.unit)) << ' '
      << unit_name(config.unit) << '\n';
}

void run_graph(const RunConfig& config, std::ostream& log) {
  validate_config(config, false);
  ensure_output_dirs(config);
  const auto cache_path = artifact(config, artifacts::kLinksTsv);
  std::ifstream in(cache_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + cache_path.string() + " (run flag-links first)");

  struct Row {
    std::string citing, cited;
    double score;
  };
  std::vector<Row> rows;
  std::set<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    if (line_no == 1) continue;  // header
    const auto fields = detail::split_tabs(line);
    const auto score = fields.size() == 3 ? detail::parse_double(fields[2]) : std::nullopt;
    if (!score) {
      throw DataError(cache_path.string() + ":" + std::to_string(line_no) + ": malformed row");
    }
    rows.push_back({std::string(fields[0]), std::string(fields[1]), *score});
    names.insert(rows.back().citing);
    names.insert(rows.back().cited);
  }
  const JournalRegistry registry(std::vector<std::string>(names.begin(), names.end()), {});
  std::vector<HotLink> links;
  links.reserve(rows.size());
  for (const auto& r : rows) {
    links.push_back({Cell{*registry.find(r.citing), *registry.find(r.cited)}, r.score});
  }

  HotLinkGraph graph;
  try {
    graph = build_graph(links, registry);
  } catch (const std::invalid_argument& e) {
    throw DataError(cache_path.string() + ": " + e.what());
  }
  const auto components = connected_components(graph);
  CommunityPartition communities;
  communities.seed = config.seed;
  if (!graph.empty()) communities = louvain(graph, config.seed);

  write_pajek_net(graph, artifact(config, artifacts::kPajekNet));
  write_pajek_clu(communities.assignment, artifact(config, artifacts::kCommunitiesClu));
  write_pajek_clu(components.assignment, artifact(config, artifacts::kComponentsClu));
  ReportInputs inputs;
  inputs.graph = &graph;
  inputs.components = &components;
  inputs.communities = &communities;
  write_reports(inputs, config.out);

  std::map<std::size_t, std::size_t> histogram;
  std::size_t outside = 0;
  for (std::size_t c = 0; c < components.count(); ++c) {
    ++histogram[components.members[c].size()];
    if (c > 0) outside += components.members[c].size();
  }
  json sizes = json::object();
  for (const auto& [size, count] : histogram) sizes[std::to_string(size)] = count;
  const json doc = {
      {"seed", config.seed},
      {"vertices", graph.vertex_count()},
      {"edges", graph.edge_count()},
      {"components", components.count()},
      {"giant_component", components.count() ? components.members[0].size() : 0},
      {"other_components", components.count() ? components.count() - 1 : 0},
      {"journals_outside_giant", outside},
      {"component_size_counts", sizes},
      {"communities", communities.community_count},
      {"modularity", communities.modularity},
      {"level_modularity", communities.level_modularity},
  };
  write_json(doc, artifact(config, artifacts::kGraphJson));
  log << "hot-link graph: " << graph.vertex_count() << " journals, " << graph.edge_count()
      << " edges, " << components.count() << " components";
  if (components.count()) log << " (largest " << components.members[0].size() << ")";
  log << ", " << communities.community_count << " communities, Q = "
      << detail::format_fixed6(communities.modularity) << '\n';
}

namespace {

std::vector<std::string> string_list(const json& doc, std::string_view key) {
  std::vector<std::string> out;
  for (const auto& v : doc.at("flags").at(std::string(key))) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace

void run_export(const RunConfig& config, std::ostream& log) {
  validate_config(config, false);
  ensure_output_dirs(config);
  const HotLinkGraph graph = read_pajek_net(artifact(config, artifacts::kPajekNet));
  const auto communities = read_pajek_clu(artifact(config, artifacts::kCommunitiesClu));
  if (communities.size() != graph.vertex_count()) {
    throw DataError("community partition does not match the hot-link graph");
  }

  std::optional<BaseMap> basemap;
  if (config.basemap) basemap = read_basemap(*config.basemap);

  const auto map_path = artifact(config, artifacts::kVosMap);
  const auto net_path = artifact(config, artifacts::kVosNetwork);
  auto map_out = open_output(map_path);
  auto net_out = open_output(net_path);
  const auto unmatched = write_vosviewer_files(graph, communities, basemap ? &*basemap : nullptr,
                                               map_out, net_out);
  finish_output(map_out, map_path);
  finish_output(net_out, net_path);

  const json ingest = read_json(artifact(config, artifacts::kIngestJson));
  const json journals = read_json(artifact(config, artifacts::kJournalsJson));
  const json links = read_json(artifact(config, artifacts::kLinksJson));
  const json graph_doc = read_json(artifact(config, artifacts::kGraphJson));

  json export_doc = {{"basemap", config.basemap ? config.basemap->string() : std::string()},
                     {"vosviewer_unmatched", unmatched.size()}};
  if (basemap) {
    const auto unmatched_path = artifact(config, artifacts::kVosUnmatched);
    auto out = open_output(unmatched_path);
    for (const auto& label : unmatched) out << label << '\n';
    finish_output(out, unmatched_path);

    const auto components = connected_components(graph);
    std::vector<std::string> giant, others;
    for (std::size_t c = 0; c < components.count(); ++c) {
      for (VertexIndex v : components.members[c]) {
        (c == 0 ? giant : others).push_back(graph.labels()[v]);
      }
    }
    constexpr std::string_view kRed = "#e41a1c";
    constexpr std::string_view kBlue = "#377eb8";
    const std::vector<std::pair<std::string, std::vector<OverlayCategory>>> overlays = {
        {"overlay_monotonic_cited.txt",
         {{"cited_up", std::string(kRed), string_list(journals, "monotonic_cited_up")},
          {"cited_down", std::string(kBlue), string_list(journals, "monotonic_cited_down")}}},
        {"overlay_monotonic_citing.txt",
         {{"citing_up", std::string(kRed), string_list(journals, "monotonic_citing_up")},
          {"citing_down", std::string(kBlue), string_list(journals, "monotonic_citing_down")}}},
        {"overlay_revision.txt",
         {{"revision_cited", std::string(kRed), string_list(journals, "revision_cited")},
          {"revision_citing", std::string(kBlue), string_list(journals, "revision_citing")}}},
        {"overlay_triangle.txt",
         {{"triangle_cited", std::string(kRed), string_list(journals, "triangle_cited")},
          {"triangle_citing", std::string(kBlue), string_list(journals, "triangle_citing")}}},
        {"overlay_hot_components.txt",
         {{"giant_component", std::string(kRed), giant},
          {"other_components", std::string(kBlue), others}}},
    };
    json overlay_doc = json::object();
    for (const auto& [name, categories] : overlays) {
      const auto path = artifact(config, name);
      auto out = open_output(path);
      const auto result = write_overlay(categories, *basemap, out);
      finish_output(out, path);
      json counts = json::object();
      for (std::size_t c = 0; c < categories.size(); ++c) {
        counts[categories[c].name] = result.colored[c];
      }
      overlay_doc[name] = {{"colored", counts}, {"unmatched", result.unmatched.size()}};
    }
    export_doc["overlays"] = overlay_doc;
  }

  const json summary = {
      {"format_version", artifacts::kFormatVersion},
      {"ingest", ingest},
      {"journals", journals},
      {"links", links},
      {"graph", graph_doc},
      {"export", export_doc},
  };
  write_json(summary, artifact(config, artifacts::kSummaryJson));
  log << "exported VOSviewer files";
  if (basemap) log << " and overlays (" << unmatched.size() << " journals not on the base map)";
  log << '\n';
}

void run_pipeline(const RunConfig& config, std::ostream& log) {
  run_ingest(config, log);
  run_flag_journals(config, log);
  run_flag_links(config, log);
  run_graph(config, log);
  run_export(config, log);
}

}  // namespace citeheat
