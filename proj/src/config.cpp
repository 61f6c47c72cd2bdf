#include "clir/config.hpp"

#include <charconv>
#include <set>

#include "clir/error.hpp"
#include "clir/io.hpp"

namespace clir {

namespace {

const std::set<std::string, std::less<>> kPathKeys = {
    "corpus", "lm_corpus", "term_pairs", "translit_pairs", "stopwords_en", "romanization",
    "similar_letters", "queries", "qrels", "output_dir", "index", "run", "report"};

const std::set<std::string, std::less<>> kParamKeys = {
    "k", "k_tr", "m", "n_top", "epsilon_channel", "epsilon_lm", "epsilon_symbol",
    "p_tr", "use_boundary", "transliteration", "direction", "binarization", "mode",
    "fields"};

std::filesystem::path resolve(std::string_view value, const std::filesystem::path& base) {
  std::filesystem::path p{std::string(io::trim(value))};
  if (p.empty() || p.is_absolute()) return p;
  return (base / p).lexically_normal();
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw usage_error(std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(value), &used);
    if (used == value.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw usage_error(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
}

bool parse_flag(std::string_view key, std::string_view value) {
  if (value == "on" || value == "true" || value == "1" || value == "yes") return true;
  if (value == "off" || value == "false" || value == "0" || value == "no") return false;
  throw usage_error(std::string(key) + ": expected on/off, got '" + std::string(value) + "'");
}

}  // namespace

void ExperimentConfig::set(std::string_view key_in, std::string_view value_in,
                           const std::filesystem::path& base_dir) {
  const std::string key(io::trim(key_in));
  const std::string value(io::trim(value_in));
  if (key == "corpus" || key == "lm_corpus") {
    auto& list = key == "corpus" ? corpus : lm_corpus;
    list.clear();
    for (const auto& part : io::split(value, ',')) {
      if (!io::trim(part).empty()) list.push_back(resolve(part, base_dir));
    }
  } else if (key == "term_pairs") {
    term_pairs = resolve(value, base_dir);
  } else if (key == "translit_pairs") {
    translit_pairs = resolve(value, base_dir);
  } else if (key == "stopwords_en") {
    stopwords_en = resolve(value, base_dir);
  } else if (key == "romanization") {
    romanization = resolve(value, base_dir);
  } else if (key == "similar_letters") {
    similar_letters = resolve(value, base_dir);
  } else if (key == "queries") {
    queries = resolve(value, base_dir);
  } else if (key == "qrels") {
    qrels = resolve(value, base_dir);
  } else if (key == "output_dir") {
    output_dir = resolve(value, base_dir);
  } else if (key == "index") {
    index = resolve(value, base_dir);
  } else if (key == "run") {
    run = resolve(value, base_dir);
  } else if (key == "report") {
    report = resolve(value, base_dir);
  } else if (key == "k") {
    k = parse_count(key, value);
  } else if (key == "k_tr") {
    k_tr = parse_count(key, value);
  } else if (key == "m") {
    m = parse_count(key, value);
  } else if (key == "n_top") {
    n_top = parse_count(key, value);
  } else if (key == "epsilon_channel") {
    epsilon_channel = parse_real(key, value);
  } else if (key == "epsilon_lm") {
    epsilon_lm = parse_real(key, value);
  } else if (key == "epsilon_symbol") {
    epsilon_symbol = parse_real(key, value);
  } else if (key == "p_tr") {
    p_tr = parse_real(key, value);
  } else if (key == "use_boundary") {
    use_boundary = parse_flag(key, value);
  } else if (key == "transliteration") {
    transliteration = parse_flag(key, value);
  } else if (key == "direction") {
    direction = parse_direction(value);
  } else if (key == "binarization") {
    auto b = parse_binarization(value);
    if (!b) throw usage_error("binarization: expected lenient or strict, got '" + value + "'");
    binarization = *b;
  } else if (key == "mode") {
    if (value == "translate") {
      mode = SearchMode::kTranslate;
    } else if (value == "monolingual") {
      mode = SearchMode::kMonolingual;
    } else {
      throw usage_error("mode: expected translate or monolingual, got '" + value + "'");
    }
  } else if (key == "fields") {
    fields = parse_fields(value);
  } else {
    throw usage_error("unknown config key '" + key + "'");
  }
}

ExperimentConfig ExperimentConfig::parse(std::string_view contents,
                                         const std::filesystem::path& base_dir,
                                         const std::string& source_name) {
  ExperimentConfig cfg;
  std::string section;
  std::size_t line_no = 0;
  for (auto raw : io::split(contents, '\n')) {
    ++line_no;
    const auto line = io::trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw usage_error(where + ": malformed section header");
      section = std::string(line.substr(1, line.size() - 2));
      if (section != "paths" && section != "params") {
        throw usage_error(where + ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw usage_error(where + ": expected key = value");
    const auto key = io::trim(line.substr(0, eq));
    const auto& allowed = section == "paths" ? kPathKeys : kParamKeys;
    if (section.empty()) throw usage_error(where + ": key outside a section");
    if (!allowed.count(key)) {
      throw usage_error(where + ": unknown key '" + std::string(key) + "' in [" + section + "]");
    }
    try {
      cfg.set(key, line.substr(eq + 1), base_dir);
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw usage_error("config file not found: " + path.string());
  }
  return parse(io::read_file(path), path.parent_path(), path.string());
}

void ExperimentConfig::validate() const {
  if (k < 1) throw usage_error("k must be >= 1");
  if (k_tr < 1) throw usage_error("k_tr must be >= 1");
  if (m < 1) throw usage_error("m must be >= 1");
  if (n_top < 1) throw usage_error("n_top must be >= 1");
  if (!(epsilon_channel > 0.0)) throw usage_error("epsilon_channel must be > 0");
  if (!(epsilon_lm > 0.0)) throw usage_error("epsilon_lm must be > 0");
  if (!(epsilon_symbol > 0.0)) throw usage_error("epsilon_symbol must be > 0");
  if (!(p_tr > 0.0 && p_tr < 1.0)) throw usage_error("p_tr must be in (0, 1)");
  if (!fields.any()) throw usage_error("fields must name at least one field");
  if (output_dir.empty()) throw usage_error("output_dir must be set");
}

std::filesystem::path ExperimentConfig::index_path() const {
  return index.empty() ? output_dir / "index.txt" : index;
}

std::filesystem::path ExperimentConfig::run_path() const {
  return run.empty() ? output_dir / "run.txt" : run;
}

std::filesystem::path ExperimentConfig::report_path() const {
  return report.empty() ? output_dir / "report.tsv" : report;
}

std::filesystem::path ExperimentConfig::dict_path(std::string_view file) const {
  return output_dir / std::string(file);
}

const std::vector<std::filesystem::path>& ExperimentConfig::language_model_corpus() const {
  return lm_corpus.empty() ? corpus : lm_corpus;
}

void require_file(const std::filesystem::path& path, std::string_view what) {
  if (path.empty()) throw usage_error(std::string(what) + " path is not configured");
  if (!std::filesystem::is_regular_file(path)) {
    throw data_error(std::string(what) + " not found: " + path.string());
  }
}

}  // namespace clir
