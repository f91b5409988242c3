// ustep: command-line front end for the streaming template miner.
//
//   ustep parse  [--input FILE|-] [--sigma S] [--phi P] [--strict-sim] [--masks FILE]
//                [--snapshot-in FILE] [--snapshot-out FILE]
//   ustep bench  --input LABELED.csv [--chunk-size N] [--format json|csv] [--timing-csv FILE]
//   ustep sweep  --input LABELED.csv --grid GRID [--format json|csv]
//   ustep stats  --snapshot-in FILE
//
// Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 usage/config error, 2 I/O or dataset error, 3 bad snapshot.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ustep/ustep.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kSnapshot = 3 };

struct Options {
  std::string input = "-";
  double sigma = 0.5;
  std::size_t phi = 8;
  bool strict_sim = false;
  std::string masks;
  std::string snapshot_in;
  std::string snapshot_out;
  std::size_t chunk_size = 1000;
  std::string grid;
  std::string format = "json";
  std::string timing_csv;
  std::string name;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ustep::MinerConfig make_config(const Options& o) {
  ustep::MinerConfig cfg;
  cfg.sigma = o.sigma;
  cfg.phi = o.phi;
  cfg.strict_wildcard_sim = o.strict_sim;
  if (!o.masks.empty()) cfg.mask_rules = ustep::load_mask_rules(o.masks);
  cfg.validate();
  return cfg;
}

ustep::Miner load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ustep::IoError("cannot open snapshot: " + path);
  return ustep::read_snapshot(in);
}

void save_snapshot(const ustep::Miner& miner, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ustep::IoError("cannot write snapshot: " + path);
  ustep::write_snapshot(miner, out);
  out.close();
  if (!out) throw ustep::IoError("cannot write snapshot: " + path);
}

std::string dataset_name(const Options& o) {
  if (!o.name.empty()) return o.name;
  return std::filesystem::path(o.input).stem().string();
}

int cmd_parse(const Options& o, bool config_flags_given) {
  std::optional<ustep::Miner> miner;
  if (!o.snapshot_in.empty()) {
    if (config_flags_given) {
      throw UsageError("--sigma/--phi/--strict-sim/--masks cannot be combined with --snapshot-in; "
                       "the snapshot carries its own configuration");
    }
    miner.emplace(load_snapshot(o.snapshot_in));
  } else {
    miner.emplace(make_config(o));
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (o.input != "-") {
    file.open(o.input, std::ios::binary);
    if (!file) throw ustep::IoError("cannot open input: " + o.input);
    in = &file;
  }

  const auto start = std::chrono::steady_clock::now();
  std::size_t line_no = 0;
  std::string line;
  std::string out;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    auto result = miner->process(line);
    out = ustep::parse_result_json(line_no, result).dump();
    out.push_back('\n');
    std::cout.write(out.data(), static_cast<std::streamsize>(out.size()));
  }
  if (in->bad()) throw ustep::IoError("error while reading input");
  std::cout.flush();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto& s = miner->stats();
  std::cerr << "messages=" << line_no << " templates=" << s.template_count
            << " nodes=" << s.node_count << " seconds=" << secs << '\n';

  if (!o.snapshot_out.empty()) save_snapshot(*miner, o.snapshot_out);
  return kOk;
}

int cmd_bench(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
  auto cfg = make_config(o);
  auto records = ustep::eval::load_labeled_dataset(o.input);
  std::vector<std::string> lines;
  lines.reserve(records.size());
  for (const auto& r : records) lines.push_back(r.content);

  ustep::Miner miner(cfg);
  std::vector<ustep::TemplateId> ids;
  ids.reserve(records.size());
  auto throughput = ustep::eval::throughput_bench(
      miner, lines, o.chunk_size, dataset_name(o),
      [&](const ustep::ParseResult& r) { ids.push_back(r.template_id); });
  auto grouping = ustep::eval::grouping_accuracy(records, ids);
  grouping.dataset_name = throughput.dataset_name;

  if (!o.timing_csv.empty()) {
    std::ofstream csv(o.timing_csv);
    if (!csv) throw ustep::IoError("cannot write timing csv: " + o.timing_csv);
    ustep::eval::write_timing_csv(csv, throughput);
  }

  if (o.format == "csv") {
    ustep::eval::write_timing_csv(std::cout, throughput);
  } else {
    ustep::ojson doc{{"config",
                      {{"sigma", cfg.sigma},
                       {"phi", cfg.phi},
                       {"strict_wildcard_sim", cfg.strict_wildcard_sim},
                       {"mask_rules", cfg.mask_rules}}},
                     {"grouping", ustep::eval::grouping_report_json(grouping)},
                     {"throughput", ustep::eval::throughput_report_json(throughput)},
                     {"stats", ustep::stats_json(miner.stats())}};
    std::cout << doc.dump() << '\n';
  }
  std::cerr << grouping.dataset_name << ": PA=" << grouping.parsing_accuracy
            << " templates=" << miner.stats().template_count
            << " seconds=" << throughput.total_seconds << '\n';
  return kOk;
}

int cmd_sweep(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
  auto base = make_config(o);
  auto grid = ustep::eval::load_grid(o.grid);
  if (grid.empty()) throw UsageError("grid file lists no (sigma, phi) pairs: " + o.grid);
  auto records = ustep::eval::load_labeled_dataset(o.input);
  auto result = ustep::eval::sweep(records, base, grid);

  if (o.format == "csv") {
    ustep::eval::write_sweep_csv(std::cout, result);
  } else {
    auto doc = ustep::eval::sweep_result_json(result);
    doc["dataset"] = dataset_name(o);
    std::cout << doc.dump() << '\n';
  }
  const auto& b = result.best();
  std::cerr << dataset_name(o) << ": best sigma=" << b.point.sigma << " phi=" << b.point.phi
            << " PA=" << b.parsing_accuracy << '\n';
  return kOk;
}

int cmd_stats(const Options& o) {
  auto miner = load_snapshot(o.snapshot_in);
  ustep::ojson doc{{"stats", ustep::stats_json(miner.stats())},
                   {"templates", ustep::templates_json(miner)}};
  std::cout << doc.dump() << '\n';
  return kOk;
}

void add_config_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--sigma", o.sigma, "similarity threshold in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--phi", o.phi, "templates per leaf before splitting")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--strict-sim", o.strict_sim, "template wildcards only match masked tokens");
  cmd->add_option("--masks", o.masks, "file of masking regexes, one per line");
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"ustep: streaming log template miner"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "parse raw log lines to JSON lines");
  parse->add_option("--input", o.input, "input file, '-' for stdin");
  add_config_flags(parse, o);
  parse->add_option("--snapshot-in", o.snapshot_in, "resume from a snapshot");
  parse->add_option("--snapshot-out", o.snapshot_out, "write a snapshot on exit");

  auto* bench = app.add_subcommand("bench", "score and time a labeled dataset");
  bench->add_option("--input", o.input, "labeled CSV (LineId, Content, EventId)")->required();
  add_config_flags(bench, o);
  bench->add_option("--chunk-size", o.chunk_size, "messages per timing chunk")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bench->add_option("--timing-csv", o.timing_csv, "also write chunk timings here");
  bench->add_option("--name", o.name, "dataset name in reports");

  auto* sweep = app.add_subcommand("sweep", "grid-search sigma and phi on a labeled dataset");
  sweep->add_option("--input", o.input, "labeled CSV")->required();
  sweep->add_option("--grid", o.grid, "file of sigma,phi pairs")->required();
  sweep->add_flag("--strict-sim", o.strict_sim, "template wildcards only match masked tokens");
  sweep->add_option("--masks", o.masks, "file of masking regexes, one per line");
  sweep->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--name", o.name, "dataset name in reports");

  auto* stats = app.add_subcommand("stats", "summarise a snapshot");
  stats->add_option("--snapshot-in,snapshot", o.snapshot_in, "snapshot file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (parse->parsed()) {
      bool config_given = parse->count("--sigma") + parse->count("--phi") +
                              parse->count("--strict-sim") + parse->count("--masks") >
                          0;
      return cmd_parse(o, config_given);
    }
    if (bench->parsed()) return cmd_bench(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (stats->parsed()) return cmd_stats(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ustep::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const ustep::SnapshotError& e) {
    std::cerr << "snapshot error: " << e.what() << '\n';
    return kSnapshot;
  } catch (const ustep::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const ustep::DatasetError& e) {
    std::cerr << "dataset error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
