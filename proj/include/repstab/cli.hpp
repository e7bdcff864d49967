#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "repstab/charpoly.hpp"
#include "repstab/partition.hpp"
#include "repstab/stable.hpp"
#include "repstab/verify.hpp"

namespace repstab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRuntimeFailure = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Partition parse_partition_argument(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " (expected e.g. 2+1 or 2,1; 0 for the empty partition)");
  }
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

inline void close_output(std::ofstream& file, const std::string& path) {
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

inline void print_character_table(std::ostream& out, CharacterTable& table, int m) {
  const auto& parts = table.partitions(m);
  const auto values = table.table(m);
  std::size_t label_width = 2;
  for (const auto& p : parts) label_width = std::max(label_width, p.to_string().size());
  std::size_t cell_width = 1;
  for (const auto& row : values) {
    for (auto v : row) cell_width = std::max(cell_width, std::to_string(v).size());
  }
  cell_width = std::max(cell_width, label_width);
  out << std::setw(static_cast<int>(label_width)) << std::left << "mu" << std::right;
  for (const auto& rho : parts) out << ' ' << std::setw(static_cast<int>(cell_width)) << rho.to_string();
  out << '\n';
  for (std::size_t a = 0; a < parts.size(); ++a) {
    out << std::setw(static_cast<int>(label_width)) << std::left << parts[a].to_string() << std::right;
    for (auto v : values[a]) out << ' ' << std::setw(static_cast<int>(cell_width)) << v;
    out << '\n';
  }
}

inline void write_character_table_csv(std::ostream& out, CharacterTable& table, int m) {
  const auto& parts = table.partitions(m);
  const auto values = table.table(m);
  out << "mu";
  for (const auto& rho : parts) out << ',' << rho.to_string();
  out << '\n';
  for (std::size_t a = 0; a < parts.size(); ++a) {
    out << parts[a].to_string();
    for (auto v : values[a]) out << ',' << v;
    out << '\n';
  }
}

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 runtime or I/O failure, 2 usage error,
/// 3 verification failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable multiplicities of irreducible families in the cohomology of ordered "
               "configuration space of the plane"};
  app.require_subcommand(1);

  std::string partition_text;
  int max_degree = 0;
  std::string csv_path;
  int degree_i = 0;
  int max_size = 0;
  std::string out_path;
  int threads = 1;
  int group_size = 0;
  int max_i = 0;

  auto* series = app.add_subcommand("series", "Print the signed series sum (-1)^i d_i z^i");
  series->add_option("partition", partition_text, "Partition, e.g. 2+1 (0 = trivial)")->required();
  series->add_option("--max-degree", max_degree, "Highest power of z")
      ->check(CLI::NonNegativeNumber)
      ->required();
  series->add_option("--csv", csv_path, "Also write partition,i,d_i rows here");

  auto* cohomology = app.add_subcommand("cohomology", "Decompose the stable H^i into irreducibles");
  cohomology->add_option("i", degree_i, "Cohomological degree")->check(CLI::NonNegativeNumber)->required();
  cohomology->add_option("--csv", csv_path, "Also write partition,i,d_i rows here");
  cohomology->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Write d_i(lambda) for all |lambda| <= K as CSV");
  table->add_option("--max-size", max_size, "Largest |lambda|")->check(CLI::Range(0, CharacterTable::kMaxSize))->required();
  table->add_option("--max-degree", max_degree, "Largest i")->check(CLI::NonNegativeNumber)->required();
  table->add_option("--out", out_path, "Output CSV path")->required();
  table->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* charpoly = app.add_subcommand("charpoly", "Print the character polynomial in the binomial basis");
  charpoly->add_option("partition", partition_text, "Partition, e.g. 1+1")->required();

  auto* chartable = app.add_subcommand("chartable", "Print the character table of S_m");
  chartable->add_option("m", group_size, "Group size")->check(CLI::Range(0, CharacterTable::kMaxSize))->required();
  chartable->add_option("--csv", csv_path, "Also write the table as CSV here");

  auto* verify = app.add_subcommand("verify", "Run the dimension and vanishing checks");
  verify->add_option("--max-i", max_i, "Largest cohomological degree")->check(CLI::NonNegativeNumber)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    Engine engine;
    if (*series) {
      const Partition lambda = parse_partition_argument(partition_text);
      const StableSeries s = engine.stable_coefficients(lambda, max_degree);
      out << format_series(s) << '\n';
      if (!csv_path.empty()) {
        auto file = open_output(csv_path);
        write_csv(file, std::span<const StableSeries>(&s, 1));
        close_output(file, csv_path);
      }
    } else if (*cohomology) {
      const CohomologyDecomposition d = engine.cohomology_decomposition(degree_i, threads);
      out << format_decomposition(d) << '\n';
      if (!csv_path.empty()) {
        auto file = open_output(csv_path);
        file << "partition,i,d_i\n";
        for (const auto& [lambda, multiplicity] : d.entries) {
          file << lambda.to_string() << ',' << degree_i << ',' << multiplicity.get_str() << '\n';
        }
        close_output(file, csv_path);
      }
    } else if (*table) {
      auto file = open_output(out_path);
      const auto rows = engine.batch_table(max_size, max_degree, threads);
      write_csv(file, rows);
      close_output(file, out_path);
      out << "wrote " << rows.size() * static_cast<std::size_t>(max_degree + 1) << " rows for "
          << rows.size() << " partitions to " << out_path << '\n';
    } else if (*charpoly) {
      const Partition lambda = parse_partition_argument(partition_text);
      out << engine.charpoly(lambda).to_string() << '\n';
    } else if (*chartable) {
      print_character_table(out, engine.characters(), group_size);
      if (!csv_path.empty()) {
        auto file = open_output(csv_path);
        write_character_table_csv(file, engine.characters(), group_size);
        close_output(file, csv_path);
      }
    } else if (*verify) {
      const VerificationSummary summary = verify_all(engine, max_i);
      out << std::setw(3) << "i" << std::setw(5) << "n" << std::setw(16) << "sum d*g"
          << std::setw(16) << "dim H^i" << "  result\n";
      for (const auto& r : summary.reports) {
        out << std::setw(3) << r.i << std::setw(5) << r.n << std::setw(16) << r.lhs.get_str()
            << std::setw(16) << r.rhs.get_str() << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
      }
      out << "sweep over |lambda| <= " << 2 * max_i << " through z^" << summary.sweep_degree << ": "
          << summary.violations.size() << " violation(s)\n";
      for (const auto& f : summary.violations) {
        out << "  VIOLATION " << f.kind << " lambda=" << f.partition.to_string() << " i=" << f.degree
            << ": " << f.detail << '\n';
      }
      for (const auto& f : summary.observations) {
        out << "  note " << f.kind << " lambda=" << f.partition.to_string() << " i=" << f.degree << ": "
            << f.detail << '\n';
      }
      out << (summary.passed() ? "all checks passed" : "verification FAILED") << '\n';
      return summary.passed() ? kSuccess : kVerificationFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kSuccess;
}

}  // namespace repstab::cli
