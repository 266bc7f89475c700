#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "citeheat/corpus.hpp"
#include "oracle.hpp"

namespace fixtures {

inline std::string node_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "J%03zu", i);
  return buf;
}

// Sparse random counts; the diagonal is always positive so every node stays
// in the common set.
inline oracle::Tensor random_tensor(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> count(1, 200);
  oracle::Tensor t;
  for (auto& year : t) {
    year.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i == j || u(rng) < density) year[i][j] = count(rng);
  }
  return t;
}

inline citeheat::YearMatrix year_matrix(const oracle::Dense& d, const std::string& label) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d.size(); ++i) names.push_back(node_name(i));
  std::vector<citeheat::CellCount> cells;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[i][j] > 0) {
        cells.push_back({citeheat::Cell{static_cast<citeheat::NodeId>(i),
                                        static_cast<citeheat::NodeId>(j)},
                         d[i][j]});
      }
  return citeheat::YearMatrix(label, names, std::move(cells));
}

inline citeheat::AlignedTensor aligned(const oracle::Tensor& t) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t[0].size(); ++i) names.push_back(node_name(i));
  citeheat::JournalRegistry registry(names, {});
  std::vector<citeheat::YearMatrix> years{year_matrix(t[0], "2011"), year_matrix(t[1], "2012"),
                                          year_matrix(t[2], "2013")};
  return citeheat::build_common_set(registry, years);
}

// Writes the three years as TSV edge lists into `dir`.
inline void write_years(const oracle::Tensor& t, const std::filesystem::path& dir,
                        const std::vector<std::string>& names) {
  std::filesystem::create_directories(dir);
  const char* labels[] = {"2011", "2012", "2013"};
  for (std::size_t y = 0; y < 3; ++y) {
    std::ofstream out(dir / (std::string(labels[y]) + ".tsv"), std::ios::binary);
    out << "citing\tcited\tcount\n";
    for (std::size_t i = 0; i < t[y].size(); ++i)
      for (std::size_t j = 0; j < t[y].size(); ++j)
        if (t[y][i][j] > 0) out << names[i] << '\t' << names[j] << '\t' << t[y][i][j] << '\n';
  }
}

// Twelve nodes with a stable background and one link rising 29, 54, 106
// while its reverse stays at 5, 5, 7.
inline oracle::Tensor dyad_tensor() {
  oracle::Tensor t;
  const std::int64_t injected[] = {29, 54, 106};
  const std::int64_t reverse[] = {5, 5, 7};
  for (std::size_t y = 0; y < 3; ++y) {
    t[y].assign(12, std::vector<std::int64_t>(12, 0));
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j)
        t[y][i][j] = i == j ? 60 + static_cast<std::int64_t>((i * 13) % 17)
                            : 10 + static_cast<std::int64_t>(((i * 7 + j * 3) % 11) * 4);
    t[y][1][0] = injected[y];  // node 1 cites node 0
    t[y][0][1] = reverse[y];
  }
  return t;
}

inline std::vector<std::string> dyad_names() {
  std::vector<std::string> names{"Genet Med", "Pers Med"};
  for (int i = 1; i <= 10; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "B%02d", i);
    names.emplace_back(buf);
  }
  return names;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("citeheat_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fixtures
