#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "escandir/bundled_data.hpp"
#include "escandir/corpus.hpp"
#include "escandir/errors.hpp"
#include "escandir/report.hpp"
#include "server.hpp"

namespace {

struct CommonFlags {
  int window = 14;
  std::string mode = "auto";
  std::vector<int> measures;
  std::string catalog;
  std::string lexicon;
  std::string tonic_lexicon;
  std::string splits;
  bool oh_atonic = false;
  bool strict_punctuation = false;
  unsigned threads = 0;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--window", flags.window, "Preceding verses used in mixed mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--mode", flags.mode, "Meter mode")
      ->check(CLI::IsMember({"auto", "fixed", "mixed"}))
      ->capture_default_str();
  cmd.add_option("--measures", flags.measures, "Declared versal tendency, e.g. 7,11,14")
      ->delimiter(',')
      ->check(CLI::Range(2, 64));
  cmd.add_option("--catalog", flags.catalog, "Catalog TSV replacing the bundled one")->check(CLI::ExistingFile);
  cmd.add_option("--lexicon", flags.lexicon, "Atonic word list replacing the bundled one")
      ->check(CLI::ExistingFile);
  cmd.add_option("--tonic-lexicon", flags.tonic_lexicon, "Words forced tonic")->check(CLI::ExistingFile);
  cmd.add_option("--splits", flags.splits, "Hemistich split table replacing the bundled one")
      ->check(CLI::ExistingFile);
  cmd.add_flag("--oh-atonic", flags.oh_atonic, "Treat \"oh\" as atonic");
  cmd.add_flag("--strict-punctuation", flags.strict_punctuation, "No synalepha across punctuation");
  cmd.add_option("--threads", flags.threads, "Worker threads (0: all cores)");
}

escandir::PoemOptions poem_options(const CommonFlags& flags) {
  escandir::PoemOptions options;
  options.window = flags.window;
  options.mode = *escandir::parse_mode(flags.mode);
  options.forced_measures.insert(flags.measures.begin(), flags.measures.end());
  options.verse.synalepha_across_punctuation = !flags.strict_punctuation;
  if (!flags.splits.empty()) options.verse.splits = escandir::SplitTable::load(flags.splits);
  options.threads = flags.threads;
  return options;
}

escandir::LexiconConfig lexicon(const CommonFlags& flags) {
  auto atonic = flags.lexicon.empty() ? escandir::parse_word_list(escandir::data::atonic_words())
                                      : escandir::load_word_list(flags.lexicon);
  auto tonic = flags.tonic_lexicon.empty() ? std::set<std::string>{} : escandir::load_word_list(flags.tonic_lexicon);
  return escandir::LexiconConfig(std::move(atonic), std::move(tonic), !flags.oh_atonic,
                                 escandir::parse_word_list(escandir::data::mente_exceptions()));
}

escandir::Catalog catalog(const CommonFlags& flags) {
  return flags.catalog.empty() ? escandir::Catalog::bundled() : escandir::Catalog::load(flags.catalog);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanish verse scansion"};
  app.require_subcommand(1);

  CommonFlags scan_flags;
  std::string input;
  std::string format = "pretty";
  auto* scan = app.add_subcommand("scan", "Scan a poem, one verse per line");
  add_common(*scan, scan_flags);
  scan->add_option("input", input, "Poem file (default: standard input)");
  scan->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}))
      ->capture_default_str();

  CommonFlags eval_flags;
  std::string corpus;
  std::string corpus_format = "dotted";
  bool eval_json = false;
  std::size_t max_failures = 20;
  auto* eval = app.add_subcommand("eval", "Measure accuracy against an annotated corpus");
  add_common(*eval, eval_flags);
  eval->add_option("--corpus", corpus, "Annotated corpus")->required()->check(CLI::ExistingFile);
  eval->add_option("--corpus-format", corpus_format, "Corpus pattern notation")
      ->check(CLI::IsMember({"dotted", "signs"}))
      ->capture_default_str();
  eval->add_flag("--json", eval_json, "Print the report as JSON");
  eval->add_option("--max-failures", max_failures, "Failures listed in the text report")->capture_default_str();

  CommonFlags serve_flags;
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve POST /analyze and GET /health");
  add_common(*serve, serve_flags);
  serve->add_option("--host", host, "Address to bind")->capture_default_str();
  serve->add_option("--port", port, "Port to bind")->check(CLI::Range(1, 65535))->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scan) {
      const auto options = poem_options(scan_flags);
      const auto analysis = escandir::analyze_text(read_input(input), options, lexicon(scan_flags), catalog(scan_flags));
      if (format == "json") {
        std::cout << escandir::analysis_to_json(analysis).dump(2) << "\n";
      } else if (format == "tsv") {
        std::cout << escandir::analysis_to_tsv(analysis);
      } else {
        std::cout << escandir::analysis_to_pretty(analysis, escandir::versal_tendency(analysis, options));
      }
    } else if (*eval) {
      const auto entries = escandir::load_corpus(corpus, *escandir::parse_corpus_format(corpus_format));
      const auto report = escandir::evaluate(entries, poem_options(eval_flags), lexicon(eval_flags), catalog(eval_flags));
      if (eval_json) {
        std::cout << escandir::eval_report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << escandir::eval_report_to_text(report, max_failures);
      }
    } else if (*serve) {
      escandir::server::ServerConfig config{poem_options(serve_flags), lexicon(serve_flags), catalog(serve_flags)};
      httplib::Server server;
      escandir::server::install_routes(server, config);
      std::cerr << "listening on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "escandir: cannot bind " << host << ":" << port << "\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "escandir: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
