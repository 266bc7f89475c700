#include "doctest.h"

#include <sstream>

#include "citeheat/errors.hpp"
#include "citeheat/io_export.hpp"
#include "fixtures.hpp"
#include "graphs.hpp"

using namespace citeheat;

namespace {

std::string net_text(const HotLinkGraph& g) {
  std::ostringstream out;
  write_pajek_net(g, out);
  return out.str();
}

}  // namespace

TEST_CASE("pajek net layout") {
  const HotLinkGraph g({"Genet Med", "Pers Med"}, {{0, 1, 0.00946988}});
  CHECK(net_text(g) == "*Vertices 2\n1 \"Genet Med\"\n2 \"Pers Med\"\n*Edges\n1 2 0.00946988\n");
  CHECK(net_text(graphs::two_triangles()).find("3 4 1.00000\n") != std::string::npos);
  CHECK(net_text(HotLinkGraph{}) == "*Vertices 0\n");
}

TEST_CASE("pajek net and clu round trips") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = graphs::random_graph(rng, 15, 0.2);
    const auto text = net_text(g);
    std::istringstream in(text);
    const auto back = read_pajek_net(in);
    CHECK(back == g);
    CHECK(net_text(back) == text);

    const auto c = louvain(g, 3);
    std::ostringstream clu;
    write_pajek_clu(c.assignment, clu);
    std::istringstream clu_in(clu.str());
    CHECK(read_pajek_clu(clu_in) == c.assignment);
  }
}

TEST_CASE("pajek reader accepts common dialect variations") {
  std::istringstream in(
      "% exported elsewhere\r\n"
      "*vertices 3\r\n"
      "1 \"A\" 0.1 0.2 0.5\r\n"
      "2 \"B\"\n"
      "3 \"C\"\n"
      "*EDGES\n"
      "1 2\n"
      "3 2 2.5\n");
  const auto g = read_pajek_net(in);
  CHECK(g.labels() == std::vector<std::string>{"A", "B", "C"});
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 1.0});
  CHECK(g.edges()[1] == Edge{1, 2, 2.5});
}

TEST_CASE("pajek errors name the line") {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      (void)read_pajek_net(in, "g.net");
    } catch (const DataError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("*Vertices 2\n1 \"A\"\n2 \"B\"\n*Edges\n1 5 1\n").find("g.net:5") != std::string::npos);
  CHECK(message("*Vertices 2\n1 \"A\"\n*Edges\n1 2\n").find("fewer vertex") != std::string::npos);
  CHECK(message("*Vertices 2\n1 \"A\"\n2 \"B\"\n*Edges\n1 1\n").find("self-loop") != std::string::npos);
  CHECK(message("*Network x\n").find("g.net:1") != std::string::npos);
  std::ostringstream out;
  CHECK_THROWS_AS(write_pajek_net(HotLinkGraph({"a\"b", "c"}, {{0, 1, 1.0}}), out), DataError);
  std::istringstream short_clu("*Vertices 3\n1\n2\n");
  CHECK_THROWS_AS((void)read_pajek_clu(short_clu), DataError);
}

TEST_CASE("VOSviewer files round trip with base-map coordinates") {
  std::istringstream map_text(
      "id\tlabel\tx\ty\tcluster\tweight<Links>\n"
      "1\tv00\t0.5\t-1.25\t3\t7\n"
      "2\tv01\t1e-3\t2\t1\t1\n"
      "3\tv03\t-0.0\t4.000\t2\t2\n");
  const auto basemap = read_basemap(map_text);
  CHECK(basemap.has_cluster());
  CHECK(basemap.has_weight());
  REQUIRE(basemap.find("v03") != nullptr);
  CHECK(basemap.find("v03")->y == "4.000");

  std::mt19937_64 rng(12);
  const auto g = graphs::random_graph(rng, 6, 0.5);
  const auto c = louvain(g, 1);
  std::ostringstream map_out, net_out;
  const auto unmatched = write_vosviewer_files(g, c.assignment, &basemap, map_out, net_out);
  std::istringstream map_in(map_out.str()), net_in(net_out.str());
  const auto back = read_vosviewer_files(map_in, net_in);
  CHECK(back.graph == g);
  CHECK(back.communities == c.assignment);
  std::size_t missing = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto* row = basemap.find(g.labels()[v]);
    if (!row) {
      CHECK_FALSE(back.coordinates[v].has_value());
      ++missing;
      continue;
    }
    REQUIRE(back.coordinates[v].has_value());
    CHECK(back.coordinates[v]->first == row->x);
    CHECK(back.coordinates[v]->second == row->y);
  }
  CHECK(unmatched.size() == missing);
}

TEST_CASE("base map errors") {
  std::istringstream no_xy("label\tcluster\nA\t1\n");
  CHECK_THROWS_AS((void)read_basemap(no_xy), DataError);
  std::istringstream dup("label\tx\ty\nA\t1\t2\n A \t3\t4\n");
  CHECK_THROWS_AS((void)read_basemap(dup), DataError);
  std::istringstream bad("label\tx\ty\nA\tone\t2\n");
  CHECK_THROWS_AS((void)read_basemap(bad), DataError);
}

TEST_CASE("overlay colours flagged labels, first category wins") {
  std::istringstream map_text("label\tx\ty\nA\t0\t0\nB\t1\t1\nC\t2\t2\n");
  const auto basemap = read_basemap(map_text);
  const std::vector<OverlayCategory> cats{{"up", "#e41a1c", {"A", "Z"}}, {"down", "#377eb8", {"A", "B"}}};
  std::ostringstream out;
  const auto r = write_overlay(cats, basemap, out);
  CHECK(out.str() ==
        "label\tx\ty\tcategory\tcolor\n"
        "A\t0\t0\tup\t#e41a1c\n"
        "B\t1\t1\tdown\t#377eb8\n"
        "C\t2\t2\tnone\t#d3d3d3\n");
  CHECK(r.colored == std::vector<std::size_t>{1, 1});
  CHECK(r.unmatched == std::vector<std::string>{"Z"});
}

TEST_CASE("csv quoting and report formatting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");

  const JournalRegistry registry({"A", "B, The"}, {});
  HotLinks links;
  links.links = {{{0, 1}, -0.001}, {{1, 0}, -0.002}};
  std::ostringstream out;
  write_hot_links(links, registry, Unit::mbits, out);
  CHECK(out.str() ==
        "rank,citing,cited,score\n"
        "1,\"B, The\",A,-2.000000\n"
        "2,A,\"B, The\",-1.000000\n");
}

TEST_CASE("component and community reports") {
  const HotLinkGraph g({"a", "b", "c", "d", "e"}, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}});
  const auto comps = connected_components(g);
  std::ostringstream out;
  write_components(g, comps, out);
  CHECK(out.str() == "component,size,members\n1,3,a; b; c\n2,2,d; e\n");
  std::ostringstream deg;
  write_degree_ranking(g, comps, deg);
  CHECK(deg.str().rfind("rank,journal,degree,component\n1,b,2,1\n", 0) == 0);
}

TEST_CASE("write_reports writes into a directory and reports I/O failures") {
  const auto dir = fixtures::scratch_dir("reports");
  const HotLinkGraph g({"a", "b"}, {{0, 1, 1}});
  const auto comps = connected_components(g);
  const auto comm = louvain(g, 1);
  ReportInputs in;
  in.graph = &g;
  in.components = &comps;
  in.communities = &comm;
  const auto names = write_reports(in, dir);
  CHECK(names == std::vector<std::string>{"components.csv", "degree.csv", "communities.csv"});
  CHECK(std::filesystem::exists(dir / "communities.csv"));
  CHECK_THROWS_AS((void)write_reports(in, dir / "missing" / "deeper"), IoError);
}
