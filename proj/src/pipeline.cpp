#include "clir/pipeline.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "clir/error.hpp"
#include "clir/io.hpp"

namespace clir {

namespace {

std::vector<Document> load_documents(const std::vector<std::filesystem::path>& paths) {
  if (paths.empty()) throw usage_error("corpus path is not configured");
  std::vector<Document> docs;
  for (const auto& p : paths) {
    require_file(p, "corpus");
    auto part = load_corpus(p);
    docs.insert(docs.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return docs;
}

std::string read_required(const std::filesystem::path& path, std::string_view what) {
  require_file(path, what);
  return io::read_file(path);
}

std::string join_candidate(const TranslationCandidate& c, Language target) {
  if (target == Language::kEnglish) return candidate_key(c);
  std::string out;
  for (const auto& w : c.words) out += w;
  return out;
}

std::vector<ContentWord> query_content_words(const std::string& text, Language language,
                                             const StopwordSet& stopwords) {
  const auto tokens = language == Language::kEnglish ? tokenize_english(text, stopwords)
                                                     : segment_japanese(text);
  return extract_content_words(tokens, language);
}

}  // namespace

std::vector<Query> load_queries(const std::filesystem::path& path) {
  const std::string contents = read_required(path, "queries");
  std::vector<Query> out;
  std::size_t line_no = 0;
  for (const auto& raw : io::split(contents, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (io::trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (tab == std::string::npos) throw data_error(where + ": expected 'query_id<TAB>text'");
    Query q{std::string(io::trim(line.substr(0, tab))),
            std::string(io::trim(line.substr(tab + 1)))};
    if (q.id.empty() || q.id.find(' ') != std::string::npos) {
      throw data_error(where + ": malformed query id");
    }
    out.push_back(std::move(q));
  }
  return out;
}

StopwordSet configured_stopwords(const ExperimentConfig& cfg) {
  if (cfg.stopwords_en.empty()) return default_english_stopwords();
  require_file(cfg.stopwords_en, "stopword list");
  return load_stopwords(cfg.stopwords_en);
}

RomanizationTable configured_romanization(const ExperimentConfig& cfg) {
  if (cfg.romanization.empty()) return RomanizationTable::default_table();
  require_file(cfg.romanization, "romanization table");
  return RomanizationTable::load(cfg.romanization);
}

LetterSimilarityTable configured_letter_table(const ExperimentConfig& cfg) {
  if (cfg.similar_letters.empty()) return LetterSimilarityTable::default_table();
  require_file(cfg.similar_letters, "similar-letter table");
  return LetterSimilarityTable::load(cfg.similar_letters);
}

std::vector<std::vector<std::string>> language_model_sequences(
    const std::vector<Document>& docs, Language language, const FieldSelection& fields,
    const StopwordSet& stopwords, const BaseWordLexicon& ja_en) {
  std::vector<std::vector<std::string>> out;
  for (const auto& doc : docs) {
    if (doc.language != language) continue;
    std::vector<const std::string*> texts;
    if (fields.title) texts.push_back(&doc.title);
    if (fields.abstract_text) texts.push_back(&doc.abstract_text);
    if (fields.keywords) texts.push_back(&doc.keywords);
    for (const auto* text : texts) {
      std::vector<std::string> seq;
      if (language == Language::kEnglish) {
        seq = index_terms(*text, language, stopwords);
      } else {
        for (const auto& word : query_content_words(*text, language, stopwords)) {
          const auto segs = segment_minimal(word, ja_en, Direction::kJaToEn);
          if (segs.empty()) continue;
          for (const auto& piece : segs.front().pieces) seq.push_back(piece.surface);
        }
      }
      if (!seq.empty()) out.push_back(std::move(seq));
    }
  }
  return out;
}

TranslationModels TranslationModels::load(const ExperimentConfig& cfg) {
  TranslationModels m;
  m.direction_ = cfg.direction;
  m.config_.k = cfg.k;
  m.config_.per_word_cap = cfg.m;
  m.config_.transliteration_k = cfg.k_tr;
  m.config_.transliteration = cfg.transliteration;
  m.config_.validate();
  m.romanization_ = configured_romanization(cfg);

  const bool ja_en = cfg.direction == Direction::kJaToEn;
  const auto lex_path = cfg.dict_path(ja_en ? files::kLexiconJaEn : files::kLexiconEnJa);
  auto lexicon = BaseWordLexicon::from_tsv(read_required(lex_path, "lexicon"), cfg.direction);
  m.channel_ = std::make_unique<ChannelModel>(std::move(lexicon), cfg.epsilon_channel, cfg.p_tr);
  const auto lm_path = cfg.dict_path(ja_en ? files::kLmEn : files::kLmJa);
  m.target_lm_ = BigramModel::from_tsv(read_required(lm_path, "language model"));

  if (cfg.transliteration) {
    auto counts = SymbolLexicon::counts_from_tsv(
        read_required(cfg.dict_path(files::kSymbols), "symbol lexicon"));
    auto en_prior = BigramModel::from_tsv(
        read_required(cfg.dict_path(files::kSymbolLmEn), "symbol language model"));
    auto ja_prior = BigramModel::from_tsv(
        read_required(cfg.dict_path(files::kSymbolLmJa), "symbol language model"));
    m.symbols_ = std::make_unique<SymbolLexicon>(std::move(counts), std::move(en_prior),
                                                 std::move(ja_prior), cfg.epsilon_symbol,
                                                 m.romanization_);
  }

  m.index_ = InvertedIndex::from_text(read_required(cfg.index_path(), "index"));
  m.vocabulary_ = script_vocabulary(m.index_, target_language(cfg.direction));
  return m;
}

TranslationContext TranslationModels::context() const {
  return TranslationContext{direction_,    *channel_,   target_lm_, symbols_.get(),
                            romanization_, vocabulary_, config_};
}

std::string cmd_index(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto stopwords = configured_stopwords(cfg);
  const auto docs = load_documents(cfg.corpus);
  const auto index = build_index(docs, cfg.fields, stopwords);
  io::write_file_atomic(cfg.index_path(), index.to_text());
  return "indexed " + std::to_string(index.document_count()) + " documents, " +
         std::to_string(index.term_count()) + " terms -> " + cfg.index_path().string();
}

std::string cmd_build_dicts(const ExperimentConfig& cfg) {
  cfg.validate();
  require_file(cfg.term_pairs, "term pairs");
  const auto stopwords = configured_stopwords(cfg);
  const auto romanization = configured_romanization(cfg);
  const auto letters = configured_letter_table(cfg);

  const auto pairs = load_term_pairs(cfg.term_pairs);
  const auto built = build_lexicon(pairs, Direction::kJaToEn);
  const BaseWordLexicon en_ja = built.lexicon.transpose();

  const auto docs = load_documents(cfg.language_model_corpus());
  BigramOptions lm_options{cfg.epsilon_lm, cfg.use_boundary};
  const auto lm_en = BigramModel::train(
      language_model_sequences(docs, Language::kEnglish, cfg.fields, stopwords, built.lexicon),
      lm_options);
  const auto lm_ja = BigramModel::train(
      language_model_sequences(docs, Language::kJapanese, cfg.fields, stopwords, built.lexicon),
      lm_options);

  std::optional<SymbolLexiconBuild> symbols;
  if (!cfg.translit_pairs.empty()) {
    require_file(cfg.translit_pairs, "transliteration pairs");
    symbols = build_symbol_lexicon(load_transliteration_pairs(cfg.translit_pairs), romanization,
                                   letters, cfg.epsilon_symbol);
  }

  io::write_file_atomic(cfg.dict_path(files::kLexiconJaEn), built.lexicon.to_tsv());
  io::write_file_atomic(cfg.dict_path(files::kLexiconEnJa), en_ja.to_tsv());
  io::write_file_atomic(cfg.dict_path(files::kSkippedPairs), skipped_report_tsv(built.skipped));
  io::write_file_atomic(cfg.dict_path(files::kLmEn), lm_en.to_tsv());
  io::write_file_atomic(cfg.dict_path(files::kLmJa), lm_ja.to_tsv());
  std::string summary = "lexicon: " + std::to_string(built.lexicon.pair_count()) +
                        " base-word pairs from " + std::to_string(pairs.size()) +
                        " term pairs (" + std::to_string(built.skipped.size()) + " skipped)";
  if (symbols) {
    io::write_file_atomic(cfg.dict_path(files::kSymbols), symbols->lexicon.to_tsv());
    io::write_file_atomic(cfg.dict_path(files::kSymbolLmEn),
                          symbols->lexicon.english_prior().to_tsv());
    io::write_file_atomic(cfg.dict_path(files::kSymbolLmJa),
                          symbols->lexicon.katakana_prior().to_tsv());
    summary += "; symbols: " + std::to_string(symbols->lexicon.counts().size()) + " pairs";
  }
  return summary;
}

std::string cmd_translate(const ExperimentConfig& cfg, std::istream& in, std::ostream& out,
                          std::ostream& log) {
  cfg.validate();
  const auto stopwords = configured_stopwords(cfg);
  const auto models = TranslationModels::load(cfg);
  const auto ctx = models.context();
  const Language target = target_language(cfg.direction);
  std::size_t words = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (io::trim(line).empty()) continue;
    for (const auto& word : query_content_words(line, models.source_language(), stopwords)) {
      ++words;
      const auto result = translate_kbest(word, ctx);
      for (const auto& w : result.warnings) log << "warning: " << w << '\n';
      std::size_t rank = 0;
      for (const auto& cand : result.candidates) {
        out << word.text() << '\t' << ++rank << '\t' << join_candidate(cand, target) << '\t'
            << io::format_fixed(cand.log_score, 6) << '\n';
      }
    }
  }
  return "translated " + std::to_string(words) + " content words";
}

std::string cmd_transliterate(const ExperimentConfig& cfg, std::istream& in, std::ostream& out,
                              std::ostream& log) {
  cfg.validate();
  ExperimentConfig with_translit = cfg;
  with_translit.transliteration = true;
  const auto models = TranslationModels::load(with_translit);
  const auto ctx = models.context();
  std::size_t words = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string word(io::trim(line));
    if (word.empty()) continue;
    ++words;
    std::string source = word;
    if (cfg.direction == Direction::kEnToJa) {
      for (auto& c : source) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    const auto cands = transliterate(source, cfg.direction, *ctx.symbols, ctx.target_vocabulary,
                                     cfg.k_tr, ctx.romanization);
    if (cands.empty()) log << "warning: no transliteration for '" << word << "'\n";
    std::size_t rank = 0;
    for (const auto& cand : cands) {
      out << word << '\t' << ++rank << '\t' << cand.word << '\t'
          << io::format_fixed(cand.log_score, 6) << '\n';
    }
  }
  return "transliterated " + std::to_string(words) + " words";
}

std::string cmd_search(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto stopwords = configured_stopwords(cfg);
  const auto queries = load_queries(cfg.queries);
  const Language source = source_language(cfg.direction);

  std::optional<TranslationModels> models;
  InvertedIndex mono_index;
  if (cfg.mode == SearchMode::kTranslate) {
    models.emplace(TranslationModels::load(cfg));
  } else {
    mono_index = InvertedIndex::from_text(read_required(cfg.index_path(), "index"));
  }
  const InvertedIndex& index = models ? models->index() : mono_index;

  std::vector<RankedRun> runs;
  std::ostringstream sidecar;
  std::size_t dropped = 0;
  for (const auto& q : queries) {
    std::vector<std::string> terms;
    if (models) {
      const auto ctx = models->context();
      try {
        auto translated = translate_query(query_content_words(q.text, source, stopwords), ctx);
        for (const auto& w : translated.warnings) sidecar << q.id << "\twarning\t" << w << '\n';
        terms = std::move(translated.terms);
      } catch (const Error& e) {
        sidecar << q.id << "\tdropped\t" << e.what() << '\n';
        log << "warning: query " << q.id << ": " << e.what() << '\n';
        ++dropped;
        runs.push_back({q.id, {}});
        continue;
      }
    } else {
      terms = index_terms(q.text, source, stopwords);
      if (terms.empty()) {
        sidecar << q.id << "\tdropped\tempty query\n";
        log << "warning: query " << q.id << ": empty query\n";
        ++dropped;
        runs.push_back({q.id, {}});
        continue;
      }
    }
    sidecar << q.id << "\tterms";
    for (const auto& t : terms) sidecar << '\t' << t;
    sidecar << '\n';
    runs.push_back({q.id, search(index, terms, cfg.n_top)});
  }
  const auto run_path = cfg.run_path();
  io::write_file_atomic(run_path, format_run(runs));
  io::write_file_atomic(run_path.string() + ".log", sidecar.str());
  return "searched " + std::to_string(queries.size()) + " queries (" + std::to_string(dropped) +
         " without terms) -> " + run_path.string();
}

std::string cmd_eval(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  require_file(cfg.qrels, "judgments");
  const auto run_path = cfg.run_path();
  const auto runs = parse_run(read_required(run_path, "run file"), run_path.string());
  const auto judgments = Judgments::load(cfg.qrels);
  const auto report = evaluate(runs, judgments, cfg.binarization);
  for (const auto& w : report.warnings) log << "warning: " << w << '\n';
  io::write_file_atomic(cfg.report_path(), report.to_tsv());
  return "11-point average precision " + io::format_fixed(report.mean_average_precision, 4) +
         " over " + std::to_string(report.queries.size()) + " queries (" +
         std::string(binarization_name(cfg.binarization)) + ") -> " +
         cfg.report_path().string();
}

}  // namespace clir
