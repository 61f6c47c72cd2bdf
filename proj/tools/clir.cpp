#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "clir/config.hpp"
#include "clir/error.hpp"
#include "clir/io.hpp"
#include "clir/pipeline.hpp"

namespace {

struct CommonOptions {
  std::string config;
  std::vector<std::string> sets;
  std::vector<std::pair<std::string, std::string>> flags;  // key, value
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-c,--config", opts.config, "experiment config file");
  cmd->add_option("--set", opts.sets, "override a config key (key=value)")->take_all();
  auto flag_option = [&](const std::string& name, const std::string& key,
                         const std::string& help) {
    cmd->add_option_function<std::string>(
        name, [&opts, key](const std::string& v) { opts.flags.emplace_back(key, v); }, help);
  };
  flag_option("--output-dir", "output_dir", "directory for built artifacts");
  flag_option("--corpus", "corpus", "corpus JSONL file(s), comma separated");
  flag_option("--index", "index", "index file");
  flag_option("--run", "run", "run file");
  flag_option("--report", "report", "evaluation report file");
  flag_option("--queries", "queries", "query file");
  flag_option("--qrels", "qrels", "relevance judgments");
  flag_option("--direction", "direction", "ja-en or en-ja");
  flag_option("--mode", "mode", "translate or monolingual");
  flag_option("--binarization", "binarization", "lenient or strict");
  flag_option("--k", "k", "k-best size");
  flag_option("--k-tr", "k_tr", "transliteration candidates");
  flag_option("--transliteration", "transliteration", "on or off");
}

clir::ExperimentConfig resolve_config(const CommonOptions& opts) {
  const auto cwd = std::filesystem::current_path();
  clir::ExperimentConfig cfg =
      opts.config.empty() ? clir::ExperimentConfig{} : clir::ExperimentConfig::load(opts.config);
  for (const auto& [key, value] : opts.flags) cfg.set(key, value, cwd);
  for (const auto& kv : opts.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw clir::usage_error("--set expects key=value, got '" + kv + "'");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1), cwd);
  }
  cfg.validate();
  return cfg;
}

// Runs a streaming command with optional input and output files.
template <typename Fn>
std::string run_streaming(const std::string& input, const std::string& output, Fn fn) {
  std::ifstream file_in;
  std::istream* in = &std::cin;
  if (!input.empty() && input != "-") {
    file_in.open(input);
    if (!file_in) throw clir::data_error("cannot open input: " + input);
    in = &file_in;
  }
  if (output.empty() || output == "-") return fn(*in, std::cout);
  std::ostringstream buffer;
  std::string summary = fn(*in, buffer);
  clir::io::write_file_atomic(output, buffer.str());
  return summary;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Japanese/English cross-language retrieval toolkit"};
  app.require_subcommand(1);

  CommonOptions index_opts, dicts_opts, translate_opts, translit_opts, search_opts, eval_opts;
  std::string input, output;

  auto* index_cmd = app.add_subcommand("index", "build the inverted index");
  add_common(index_cmd, index_opts);
  auto* dicts_cmd = app.add_subcommand("build-dicts", "build lexica and language models");
  add_common(dicts_cmd, dicts_opts);
  auto* translate_cmd = app.add_subcommand("translate", "k-best translation of content words");
  add_common(translate_cmd, translate_opts);
  translate_cmd->add_option("-i,--input", input, "input lines (default stdin)");
  translate_cmd->add_option("-o,--output", output, "output TSV (default stdout)");
  auto* translit_cmd = app.add_subcommand("transliterate", "transliterate words");
  add_common(translit_cmd, translit_opts);
  translit_cmd->add_option("-i,--input", input, "input words (default stdin)");
  translit_cmd->add_option("-o,--output", output, "output TSV (default stdout)");
  auto* search_cmd = app.add_subcommand("search", "translate queries and rank documents");
  add_common(search_cmd, search_opts);
  auto* eval_cmd = app.add_subcommand("eval", "score a run against judgments");
  add_common(eval_cmd, eval_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string summary;
    if (index_cmd->parsed()) {
      summary = clir::cmd_index(resolve_config(index_opts));
    } else if (dicts_cmd->parsed()) {
      summary = clir::cmd_build_dicts(resolve_config(dicts_opts));
    } else if (translate_cmd->parsed()) {
      const auto cfg = resolve_config(translate_opts);
      summary = run_streaming(input, output, [&](std::istream& in, std::ostream& out) {
        return clir::cmd_translate(cfg, in, out, std::cerr);
      });
    } else if (translit_cmd->parsed()) {
      const auto cfg = resolve_config(translit_opts);
      summary = run_streaming(input, output, [&](std::istream& in, std::ostream& out) {
        return clir::cmd_transliterate(cfg, in, out, std::cerr);
      });
    } else if (search_cmd->parsed()) {
      summary = clir::cmd_search(resolve_config(search_opts), std::cerr);
    } else if (eval_cmd->parsed()) {
      summary = clir::cmd_eval(resolve_config(eval_opts), std::cerr);
    }
    std::cerr << summary << '\n';
    return 0;
  } catch (const clir::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == clir::ErrorKind::kUsage ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
