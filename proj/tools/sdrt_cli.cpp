#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sdrt/sdrt.hpp"

namespace {

struct CommonFlags {
  std::string corpus_path;
  bool no_normalize = false;
  bool include_structural = false;
  bool coordinating_open_constituents = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("corpus", flags.corpus_path, "newline-delimited JSON corpus file")
      ->required();
  cmd->add_flag("--no-normalize", flags.no_normalize,
                "judge decisions against raw prefix graphs (skip discourse closure)");
  cmd->add_flag("--include-structural", flags.include_structural,
                "count structural (Parallel/Contrast) decisions as compliant instead of exempt");
  cmd->add_flag("--coordinating-open-constituents", flags.coordinating_open_constituents,
                "let coordinating relations attach inside open constituents");
}

sdrt::ReplayOptions replay_options(const CommonFlags& flags) {
  sdrt::ReplayOptions opts;
  opts.normalize = !flags.no_normalize;
  opts.include_structural = flags.include_structural;
  opts.coordinating_open_constituents = flags.coordinating_open_constituents;
  return opts;
}

int run_validate(const CommonFlags& flags, const std::string& format) {
  auto docs = sdrt::parse_corpus_file(flags.corpus_path);
  auto report = sdrt::validate_corpus(docs, replay_options(flags));
  if (format == "json") {
    std::cout << sdrt::report_json(report).dump(2) << "\n";
  } else {
    std::cout << sdrt::verdicts_csv(report);
    std::cerr << sdrt::stats_json(report.stats).dump() << "\n";
  }
  long long total_violations = 0;
  for (const auto& [_, count] : report.stats.violations_per_doc) total_violations += count;
  return total_violations > 0 ? 1 : 0;
}

int run_stats(const CommonFlags& flags, const std::string& histogram_out) {
  auto docs = sdrt::parse_corpus_file(flags.corpus_path);
  auto stats = sdrt::corpus_stats(docs, replay_options(flags));
  std::cout << sdrt::stats_json(stats).dump(2) << "\n";
  std::ofstream out(histogram_out, std::ios::binary);
  if (!out)
    throw sdrt::Error(sdrt::Errc::SchemaError,
                      "cannot write histogram file: " + histogram_out);
  out << sdrt::histogram_csv(stats);
  sdrt::log_info("wrote distance histogram to " + histogram_out);
  return 0;
}

int run_frontier(const std::string& corpus_path, const std::string& doc_id, int at,
                 bool no_normalize) {
  auto docs = sdrt::parse_corpus_file(corpus_path);
  const sdrt::Document& doc = sdrt::find_document(docs, doc_id);
  sdrt::Sdrs g = sdrt::prefix_graph(doc, at, !no_normalize);
  for (const auto& node : sdrt::right_frontier_union(g).nodes)
    std::cout << node.id << "\t" << sdrt::to_string(node.provenance) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"right-frontier validation for segmented discourse structures"};
  app.require_subcommand(1);

  CommonFlags validate_flags;
  std::string format = "csv";
  auto* validate = app.add_subcommand(
      "validate", "replay every document and report an attachment verdict per decision");
  add_common(validate, validate_flags);
  validate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  CommonFlags stats_flags;
  std::string histogram_out = "distance_histogram.csv";
  auto* stats = app.add_subcommand("stats", "emit corpus-level compliance statistics");
  add_common(stats, stats_flags);
  stats->add_option("--histogram-out", histogram_out,
                    "path for the attachment distance histogram CSV")
      ->capture_default_str();

  std::string frontier_corpus, frontier_doc;
  int frontier_at = 1;
  bool frontier_no_normalize = false;
  auto* frontier = app.add_subcommand(
      "frontier", "print the right frontier of a document prefix, with provenance");
  frontier->add_option("corpus", frontier_corpus, "newline-delimited JSON corpus file")
      ->required();
  frontier->add_option("--doc", frontier_doc, "document id")->required();
  frontier->add_option("--at", frontier_at, "prefix length in discourse units (1-based)")
      ->required();
  frontier->add_flag("--no-normalize", frontier_no_normalize,
                     "inspect the raw prefix graph (skip discourse closure)");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(validate)) return run_validate(validate_flags, format);
    if (app.got_subcommand(stats)) return run_stats(stats_flags, histogram_out);
    return run_frontier(frontier_corpus, frontier_doc, frontier_at, frontier_no_normalize);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const sdrt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
