#!/usr/bin/env python3
"""Writes the bundled synthetic bilingual collection under data/.

Every English document has a Japanese twin with the same id, so the same
judgments serve the cross-language run and the Japanese-Japanese baseline.
Output is deterministic; rerun after editing the tables below.
"""

import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

# Base words: Japanese -> English renderings. The first listed rendering is
# the dominant one in the compound pairs below.
BASE_WORDS = [
    ("情報", ["information"]),
    ("検索", ["retrieval", "search"]),
    ("システム", ["system"]),
    ("機械", ["machine"]),
    ("翻訳", ["translation"]),
    ("構文", ["syntax"]),
    ("解析", ["analysis", "parsing"]),
    ("手法", ["technique", "method"]),
    ("方法", ["method"]),
    ("次元", ["dimension"]),
    ("削減", ["reduction"]),
    ("知的", ["intelligent"]),
    ("転送", ["transfer"]),
    ("言語", ["language"]),
    ("並列", ["parallel"]),
    ("計算", ["computation", "calculation"]),
    ("音声", ["speech", "voice"]),
    ("認識", ["recognition"]),
    ("自然", ["natural"]),
    ("処理", ["processing"]),
    ("データ", ["data"]),
    ("構造", ["structure"]),
    ("クラスタリング", ["clustering"]),
    ("日本語", ["japanese"]),
    ("文書", ["document"]),
    ("分類", ["classification"]),
    ("画像", ["image"]),
    ("圧縮", ["compression"]),
    ("知識", ["knowledge"]),
    ("獲得", ["acquisition"]),
    ("表現", ["representation", "expression"]),
    ("学習", ["learning"]),
    ("モデル", ["model"]),
    ("評価", ["evaluation"]),
    ("分散", ["distributed"]),
    ("ネットワーク", ["network"]),
    ("設計", ["design"]),
    ("回路", ["circuit"]),
    ("論理", ["logic"]),
    ("合成", ["synthesis"]),
    ("アルゴリズム", ["algorithm"]),
    ("統計", ["statistical"]),
    ("辞書", ["dictionary"]),
    ("対話", ["dialogue"]),
    ("意味", ["semantic", "meaning"]),
    ("文法", ["grammar"]),
    ("探索", ["search"]),
    ("質問", ["question"]),
    ("応答", ["answering", "response"]),
    ("要約", ["summarization"]),
    ("抽出", ["extraction"]),
    ("文字", ["character"]),
    ("音響", ["acoustic"]),
    ("信号", ["signal"]),
    ("データベース", ["database"]),
    ("人工", ["artificial"]),
    ("知能", ["intelligence"]),
    ("制御", ["control"]),
    ("理解", ["understanding"]),
    ("生成", ["generation"]),
    ("抵抗", ["resistance"]),
    ("電圧", ["voltage"]),
    ("記憶", ["memory"]),
    ("管理", ["management"]),
]

# Compound term pairs; several need a cut inside a single character run.
COMPOUNDS = [
    ("information retrieval", "情報検索"),
    ("information retrieval", "情報検索"),
    ("information search", "情報検索"),
    ("information extraction", "情報抽出"),
    ("information processing", "情報処理"),
    ("retrieval system", "検索システム"),
    ("machine translation", "機械翻訳"),
    ("machine translation", "機械翻訳"),
    ("machine learning", "機械学習"),
    ("translation system", "翻訳システム"),
    ("syntax analysis", "構文解析"),
    ("syntax analysis", "構文解析"),
    ("syntax parsing", "構文解析"),
    ("semantic analysis", "意味解析"),
    ("analysis technique", "解析手法"),
    ("analysis method", "解析方法"),
    ("dimension reduction", "次元削減"),
    ("intelligent system", "知的システム"),
    ("data transfer", "データ転送"),
    ("transfer method", "転送方法"),
    ("natural language", "自然言語"),
    ("natural language", "自然言語"),
    ("language processing", "言語処理"),
    ("language model", "言語モデル"),
    ("parallel computation", "並列計算"),
    ("parallel processing", "並列処理"),
    ("computation model", "計算モデル"),
    ("speech recognition", "音声認識"),
    ("speech recognition", "音声認識"),
    ("voice recognition", "音声認識"),
    ("character recognition", "文字認識"),
    ("speech synthesis", "音声合成"),
    ("data structure", "データ構造"),
    ("data structure", "データ構造"),
    ("data processing", "データ処理"),
    ("document classification", "文書分類"),
    ("document retrieval", "文書検索"),
    ("document summarization", "文書要約"),
    ("image compression", "画像圧縮"),
    ("image processing", "画像処理"),
    ("knowledge acquisition", "知識獲得"),
    ("knowledge representation", "知識表現"),
    ("statistical model", "統計モデル"),
    ("distributed system", "分散システム"),
    ("circuit design", "回路設計"),
    ("logic synthesis", "論理合成"),
    ("logic circuit", "論理回路"),
    ("dialogue system", "対話システム"),
    ("question answering", "質問応答"),
    ("search algorithm", "探索アルゴリズム"),
    ("acoustic model", "音響モデル"),
    ("signal processing", "信号処理"),
    ("artificial intelligence", "人工知能"),
    ("language understanding", "言語理解"),
    ("language generation", "言語生成"),
    ("memory management", "記憶管理"),
    ("database management", "データベース管理"),
    ("japanese dictionary", "日本語辞書"),
    ("japanese grammar", "日本語文法"),
    ("clustering algorithm", "クラスタリングアルゴリズム"),
    ("network design", "ネットワーク設計"),
    ("evaluation method", "評価方法"),
    ("natural language processing", "自然言語処理"),
    ("machine translation system", "機械翻訳システム"),
    ("information retrieval system", "情報検索システム"),
    # Entries the builder cannot use; they land in the skipped report.
    ("very long technical term phrase", "長い用語"),
    ("parallel data transfer", "並列"),
]

# Loanwords for the symbol lexicon. Query loanwords (mining, register,
# reduction) are deliberately absent.
LOANWORDS = [
    ("computer", "コンピュータ"), ("printer", "プリンタ"), ("monitor", "モニタ"),
    ("scanner", "スキャナ"), ("server", "サーバ"), ("router", "ルータ"),
    ("transistor", "トランジスタ"), ("digital", "デジタル"), ("analog", "アナログ"),
    ("report", "レポート"), ("record", "レコード"), ("action", "アクション"),
    ("option", "オプション"), ("station", "ステーション"), ("session", "セッション"),
    ("version", "バージョン"), ("section", "セクション"), ("selection", "セレクション"),
    ("collection", "コレクション"), ("connection", "コネクション"),
    ("application", "アプリケーション"), ("location", "ロケーション"),
    ("animation", "アニメーション"), ("simulation", "シミュレーション"),
    ("operation", "オペレーション"), ("production", "プロダクション"),
    ("induction", "インダクション"), ("introduction", "イントロダクション"),
    ("deduction", "デダクション"), ("text", "テキスト"), ("system", "システム"),
    ("reset", "リセット"), ("release", "リリース"), ("relay", "リレー"),
    ("remote", "リモート"), ("repeat", "リピート"), ("request", "リクエスト"),
    ("resource", "リソース"), ("return", "リターン"), ("refresh", "リフレッシュ"),
    ("reactor", "リアクタ"), ("ribbon", "リボン"), ("risk", "リスク"),
    ("ring", "リング"), ("link", "リンク"), ("list", "リスト"), ("linear", "リニア"),
    ("literal", "リテラル"), ("library", "ライブラリ"), ("adapter", "アダプタ"),
    ("dummy", "ダミー"), ("dump", "ダンプ"), ("duct", "ダクト"), ("dam", "ダム"),
    ("dance", "ダンス"), ("panda", "パンダ"), ("lambda", "ラムダ"),
    ("leader", "リーダ"), ("reader", "リーダ"), ("header", "ヘッダ"),
    ("folder", "フォルダ"), ("border", "ボーダ"), ("decoder", "デコーダ"),
    ("encoder", "エンコーダ"), ("abduction", "アブダクション"),
    ("transaction", "トランザクション"), ("compaction", "コンパクション"),
    ("traction", "トラクション"), ("fraction", "フラクション"),
    ("interaction", "インタラクション"), ("dice", "ダイス"), ("diode", "ダイオード"),
    ("dynamic", "ダイナミック"), ("diagram", "ダイアグラム"), ("dialog", "ダイアログ"),
    ("direct", "ダイレクト"), ("network", "ネットワーク"), ("data", "データ"),
    ("cluster", "クラスタ"), ("filter", "フィルタ"), ("master", "マスタ"),
    ("monster", "モンスタ"), ("sister", "シスタ"),
    ("poster", "ポスタ"), ("booster", "ブースタ"), ("tester", "テスタ"),
    ("jester", "ジェスタ"), ("taster", "テイスタ"), ("vista", "ビスタ"),
    ("pasta", "パスタ"), ("resist", "レジスト"), ("regime", "レジーム"),
    ("reggae", "レゲエ"), ("legend", "レジェンド"), ("gesture", "ジェスチャ"),
    ("manager", "マネージャ"), ("major", "メジャー"), ("page", "ページ"),
    ("image", "イメージ"), ("message", "メッセージ"), ("package", "パッケージ"),
    ("storage", "ストレージ"), ("gene", "ジーン"), ("giga", "ギガ"),
    ("engine", "エンジン"), ("magic", "マジック"), ("logic", "ロジック"),
    ("energy", "エネルギー"), ("mini", "ミニ"), ("minus", "マイナス"),
    ("mail", "メイル"), ("main", "メイン"), ("mine", "マイン"), ("mind", "マインド"),
    ("mike", "マイク"), ("mile", "マイル"), ("micro", "マイクロ"), ("mild", "マイルド"),
    ("line", "ライン"), ("nine", "ナイン"), ("dining", "ダイニング"),
    ("timing", "タイミング"), ("lining", "ライニング"), ("training", "トレーニング"),
    ("tuning", "チューニング"), ("morning", "モーニング"), ("running", "ランニング"),
    ("planning", "プランニング"), ("scanning", "スキャニング"),
    ("learning", "ラーニング"), ("meaning", "ミーニング"), ("king", "キング"),
    ("wing", "ウイング"), ("string", "ストリング"), ("spring", "スプリング"),
    ("swing", "スイング"), ("ping", "ピング"), ("coding", "コーディング"),
    ("modeling", "モデリング"), ("parsing", "パージング"), ("mapping", "マッピング"),
    ("shopping", "ショッピング"), ("spinning", "スピニング"), ("pinning", "ピニング"),
    ("imaging", "イメージング"), ("printing", "プリンティング"),
    ("transfer", "トランスファ"), ("language", "ランゲージ"), ("test", "テスト"),
    ("table", "テーブル"), ("model", "モデル"), ("media", "メディア"),
    ("memory", "メモリ"), ("menu", "メニュー"), ("mode", "モード"),
    ("module", "モジュール"), ("motor", "モータ"), ("sensor", "センサ"),
    ("tractor", "トラクタ"), ("elevator", "エレベータ"), ("operator", "オペレータ"),
    ("generator", "ジェネレータ"), ("simulator", "シミュレータ"),
    ("indicator", "インジケータ"), ("capacitor", "キャパシタ"),
    ("conductor", "コンダクタ"), ("inductor", "インダクタ"), ("editor", "エディタ"),
    ("visitor", "ビジタ"), ("motion", "モーション"), ("notion", "ノーション"),
    ("potion", "ポーション"), ("lotion", "ローション"), ("auction", "オークション"),
    ("fiction", "フィクション"), ("friction", "フリクション"),
    ("diction", "ディクション"), ("edition", "エディション"),
    ("condition", "コンディション"), ("position", "ポジション"),
    ("petition", "ペティション"), ("addition", "アディション"),
    ("rendition", "レンディション"), ("ration", "レーション"),
    ("radiation", "ラジエーション"), ("rotation", "ローテーション"),
    ("relation", "リレーション"), ("reaction", "リアクション"),
    ("recreation", "リクリエーション"), ("redo", "リドゥ"), ("ready", "レディ"),
    ("radar", "レーダ"), ("video", "ビデオ"), ("audio", "オーディオ"),
    ("radio", "ラジオ"), ("studio", "スタジオ"), ("index", "インデックス"),
    ("address", "アドレス"), ("code", "コード"), ("node", "ノード"),
    ("download", "ダウンロード"), ("double", "ダブル"), ("dark", "ダーク"),
    ("module", "モジュール"),
]

STOPWORDS = """a about above after again against all also am an and any are as at be
because been before being below between both but by can could did do does doing
down during each few for from further had has have having he her here hers him his
how i if in into is it its itself just me more most my no nor not now of off on
once only or other our out over own same she should so some such than that the
their them then there these they this those through to too under until up very
was we were what when where which while who whom why will with would you your
using use used based new paper""".split()

# Documents: id -> (title, abstract, keywords) in English and Japanese.
DOCS = [
    # q01 information retrieval system
    ("d01",
     ("An information retrieval system for technical abstracts",
      "We built an information retrieval system which indexes technical abstracts. "
      "The retrieval system ranks abstracts by vector similarity.",
      ["information retrieval", "retrieval system"]),
     ("技術抄録のための情報検索システム",
      "技術抄録を索引付けする情報検索システムを構築した。検索システムはベクトル類似度で抄録を順位付けする。",
      ["情報検索", "検索システム"])),
    ("d02",
     ("Information extraction from newspaper articles",
      "We extract information from newspaper articles with pattern rules. "
      "Extraction accuracy is reported per article type.",
      ["information extraction"]),
     ("新聞記事からの情報抽出",
      "パタン規則を用いて新聞記事から情報を抽出する。抽出精度を記事の種類ごとに報告する。",
      ["情報抽出"])),
    ("d03",
     ("A document retrieval system for patents",
      "A document retrieval system for patent documents is described. "
      "Patent claims improve document retrieval.",
      ["document retrieval", "patent"]),
     ("特許のための文書検索システム",
      "特許文書のための文書検索システムについて述べる。特許請求項は文書検索を改善する。",
      ["文書検索", "特許"])),
    ("d04",
     ("Search engine logs and user behaviour",
      "Search engine query logs reveal user behaviour. Users reformulate short queries.",
      ["search engine", "query log"]),
     ("検索エンジンのログと利用者行動",
      "検索エンジンの問合せログは利用者の行動を示す。利用者は短い問合せを言い換える。",
      ["検索エンジン", "問合せログ"])),
    # q02 machine translation system
    ("d05",
     ("A machine translation system for technical manuals",
      "We describe a machine translation system which translates technical manuals. "
      "The translation system uses transfer rules and a large dictionary.",
      ["machine translation", "translation system"]),
     ("技術マニュアルのための機械翻訳システム",
      "技術マニュアルを翻訳する機械翻訳システムについて述べる。翻訳システムは変換規則と大規模な辞書を用いる。",
      ["機械翻訳", "翻訳システム"])),
    ("d06",
     ("Machine learning for text categorization",
      "Machine learning methods assign categories to texts. Support vector machines perform well.",
      ["machine learning", "categorization"]),
     ("テキスト分類のための機械学習",
      "機械学習手法はテキストに分類を割り当てる。サポートベクトルマシンは良好に動作する。",
      ["機械学習", "テキスト分類"])),
    ("d07",
     ("Evaluation of translation quality",
      "Human judges rated translation quality of several systems. Fluency and adequacy were scored.",
      ["translation", "evaluation"]),
     ("翻訳品質の評価",
      "人手の評価者が複数の翻訳システムの品質を判定した。流暢さと妥当性を採点した。",
      ["翻訳", "評価"])),
    # q03 syntax analysis technique for japanese
    ("d08",
     ("A syntax analysis technique for Japanese sentences",
      "We present a syntax analysis technique for Japanese which resolves dependency ambiguity. "
      "The Japanese syntax analysis technique is robust on long sentences.",
      ["syntax analysis", "japanese", "analysis technique"]),
     ("日本語文の構文解析手法",
      "係り受けの曖昧性を解消する日本語の構文解析手法を示す。この日本語の構文解析手法は長文に対して頑健である。",
      ["構文解析", "日本語", "解析手法"])),
    ("d09",
     ("Syntax analysis of programming languages",
      "Parser generators perform syntax analysis of programming languages. "
      "Error recovery in syntax analysis is discussed.",
      ["syntax analysis", "programming language"]),
     ("プログラミング言語の構文解析",
      "パーザ生成系はプログラミング言語の構文解析を行う。構文解析における誤り回復を議論する。",
      ["構文解析", "プログラミング言語"])),
    ("d10",
     ("A Japanese dictionary for morphological analysis",
      "A Japanese dictionary supports morphological analysis of Japanese text.",
      ["japanese dictionary", "morphological analysis"]),
     ("形態素解析のための日本語辞書",
      "日本語辞書は日本語テキストの形態素解析を支援する。",
      ["日本語辞書", "形態素解析"])),
    ("d11",
     ("Semantic analysis with case frames",
      "Semantic analysis uses case frames to pick word senses.",
      ["semantic analysis", "case frame"]),
     ("格フレームを用いた意味解析",
      "意味解析は格フレームを用いて語義を選択する。",
      ["意味解析", "格フレーム"])),
    # q04 dimension reduction for clustering
    ("d12",
     ("Dimension reduction for document clustering",
      "We apply dimension reduction before clustering documents. "
      "Dimension reduction speeds up clustering and improves cluster quality.",
      ["dimension reduction", "clustering"]),
     ("文書クラスタリングのための次元削減",
      "文書をクラスタリングする前に次元削減を適用する。次元削減はクラスタリングを高速化しクラスタの品質を改善する。",
      ["次元削減", "クラスタリング"])),
    ("d13",
     ("A clustering algorithm for large networks",
      "A clustering algorithm partitions large networks into communities.",
      ["clustering algorithm", "network"]),
     ("大規模ネットワークのためのクラスタリングアルゴリズム",
      "クラスタリングアルゴリズムは大規模ネットワークをコミュニティに分割する。",
      ["クラスタリングアルゴリズム", "ネットワーク"])),
    ("d14",
     ("Noise reduction in speech signals",
      "Noise reduction filters clean speech signals before recognition.",
      ["noise reduction", "speech signal"]),
     ("音声信号の雑音削減",
      "雑音削減フィルタは認識の前に音声信号を浄化する。",
      ["雑音削減", "音声信号"])),
    # q05 intelligent information retrieval
    ("d15",
     ("Intelligent information retrieval with user models",
      "Intelligent information retrieval adapts to user models. "
      "An intelligent agent learns interests for information retrieval.",
      ["intelligent information retrieval", "user model"]),
     ("利用者モデルを用いた知的情報検索",
      "知的情報検索は利用者モデルに適応する。知的エージェントは情報検索のために関心を学習する。",
      ["知的情報検索", "利用者モデル"])),
    ("d16",
     ("Intelligent tutoring systems",
      "Intelligent tutoring systems model student knowledge.",
      ["intelligent system", "tutoring"]),
     ("知的個別指導システム",
      "知的個別指導システムは学習者の知識をモデル化する。",
      ["知的システム", "個別指導"])),
    # q06 data mining technique (needs transliteration of mining)
    ("d17",
     ("Data mining techniques for sales records",
      "Data mining techniques discover patterns in sales records. "
      "We compare data mining techniques on retail data.",
      ["data mining", "data mining technique"]),
     ("販売記録のためのデータマイニング手法",
      "データマイニング手法は販売記録のパタンを発見する。小売データ上でデータマイニング手法を比較する。",
      ["データマイニング", "データマイニング手法"])),
    ("d18",
     ("Data analysis techniques for sensor data",
      "Data analysis techniques summarize sensor data. Data technique choice depends on data volume.",
      ["data analysis", "data technique"]),
     ("センサデータのためのデータ解析手法",
      "データ解析手法はセンサデータを要約する。データ手法の選択はデータ量に依存する。",
      ["データ解析", "データ手法"])),
    ("d19",
     ("A data compression technique for data logs",
      "A data compression technique shrinks data logs. The technique keeps data access fast.",
      ["data compression", "technique"]),
     ("データログのためのデータ圧縮手法",
      "データ圧縮手法はデータログを縮小する。この手法はデータアクセスを高速に保つ。",
      ["データ圧縮", "手法"])),
    ("d20",
     ("Mining frequent patterns",
      "Frequent pattern mining scales to large transaction databases.",
      ["pattern mining", "transaction"]),
     ("頻出パタンのマイニング",
      "頻出パタンマイニングは大規模トランザクションデータベースに拡張できる。",
      ["パタンマイニング", "トランザクション"])),
    # q07 register transfer language (needs transliteration of register)
    ("d21",
     ("A register transfer language for hardware description",
      "We define a register transfer language for describing processors. "
      "Designs in the register transfer language are synthesized to gates.",
      ["register transfer language", "hardware description"]),
     ("ハードウェア記述のためのレジスタ転送言語",
      "プロセッサを記述するためのレジスタ転送言語を定義する。レジスタ転送言語による設計はゲートに合成される。",
      ["レジスタ転送言語", "ハードウェア記述"])),
    ("d22",
     ("Language transfer in second language learning",
      "Language transfer affects second language learning. "
      "Transfer from the first language is measured. Transfer language errors are frequent.",
      ["language transfer", "transfer", "language learning"]),
     ("第二言語習得における言語転移",
      "言語転移は第二言語の習得に影響する。第一言語からの転移を測定する。転移言語の誤りは頻繁である。",
      ["言語転移", "転移", "言語習得"])),
    ("d23",
     ("Knowledge transfer between language tasks",
      "Knowledge transfer between language tasks reduces training data. "
      "Transfer language models are compared.",
      ["knowledge transfer", "transfer language"]),
     ("言語タスク間の知識転送",
      "言語タスク間の知識転送は訓練データを削減する。転送言語モデルを比較する。",
      ["知識転送", "転送言語"])),
    ("d24",
     ("Data transfer protocols for networks",
      "Data transfer protocols move data across networks. A transfer language describes protocols.",
      ["data transfer", "protocol"]),
     ("ネットワークのためのデータ転送プロトコル",
      "データ転送プロトコルはネットワーク上でデータを移動する。転送言語でプロトコルを記述する。",
      ["データ転送", "プロトコル"])),
    ("d25",
     ("Resistor networks for voltage division",
      "A resistor network divides voltage. Each resistor tolerance is measured.",
      ["resistor", "voltage"]),
     ("分圧のための抵抗器ネットワーク",
      "抵抗器ネットワークは電圧を分割する。各抵抗器の許容差を測定する。",
      ["抵抗器", "電圧"])),
    ("d26",
     ("A resister model for social networks",
      "A resister model explains opinion dynamics in social networks.",
      ["resister", "social network"]),
     ("社会ネットワークのための抵抗者モデル",
      "抵抗者モデルは社会ネットワークにおける意見の動態を説明する。",
      ["抵抗者", "社会ネットワーク"])),
    # q08 data reduction (needs transliteration of reduction)
    ("d27",
     ("Data reduction for astronomical surveys",
      "Data reduction turns raw telescope frames into catalogues. "
      "Our data reduction pipeline is fully automatic. Data reduction errors are flagged.",
      ["data reduction", "astronomy"]),
     ("天文サーベイのためのデータリダクション",
      "データリダクションは望遠鏡の生画像を天体カタログに変換する。我々のデータリダクション処理系は完全に自動である。データリダクションの誤りには印を付ける。",
      ["データリダクション", "天文学"])),
    ("d28",
     ("Fast processing of spectra",
      "A fast data riduction method for spectra is presented. Wavelength calibration "
      "and sky subtraction run on graphics hardware. Throughput is compared with "
      "older spectrograph software on archival nights.",
      ["spectra", "wavelength calibration"]),
     ("スペクトルの高速処理",
      "スペクトルのための高速なデータリダクション手法を示す。波長較正と夜光除去をグラフィックスハードウェア上で実行する。処理速度を過去の夜の観測記録を用いて従来の分光器ソフトウェアと比較する。",
      ["スペクトル", "波長較正"])),
    ("d29",
     ("Automatic redaction of private records",
      "Automatic redaction hides names in private records.",
      ["redaction", "privacy"]),
     ("個人記録の自動墨消し",
      "自動墨消しは個人記録の氏名を隠す。",
      ["墨消し", "プライバシ"])),
    ("d30",
     ("Stages of survey pipelines",
      "Data redction steps in survey pipelines are compared. Photometric calibration, "
      "flat fielding and source detection are timed on three telescopes. Failure "
      "modes of each stage are listed.",
      ["survey", "pipeline"]),
     ("サーベイ処理系の段階",
      "サーベイ処理系におけるデータリダクションの段階を比較する。測光較正とフラット補正と天体検出の時間を三台の望遠鏡で計測する。各段階の失敗様式を列挙する。",
      ["サーベイ", "処理系"])),
    ("d31",
     ("Data structures for sparse data",
      "Compact data structures store sparse data. Data access patterns guide the data layout.",
      ["data structure", "sparse data"]),
     ("疎データのためのデータ構造",
      "コンパクトなデータ構造は疎データを格納する。データアクセスのパタンがデータ配置を導く。",
      ["データ構造", "疎データ"])),
    ("d32",
     ("Data quality in data warehouses",
      "Data quality problems in data warehouses are catalogued. Data cleaning fixes many data errors.",
      ["data quality", "data warehouse"]),
     ("データウェアハウスにおけるデータ品質",
      "データウェアハウスにおけるデータ品質の問題を分類する。データクリーニングは多くのデータ誤りを修正する。",
      ["データ品質", "データウェアハウス"])),
    # q09 parallel computation
    ("d33",
     ("Parallel computation of matrix products",
      "We study parallel computation of matrix products on clusters. "
      "Parallel computation reduces wall clock time.",
      ["parallel computation", "matrix"]),
     ("行列積の並列計算",
      "クラスタ上での行列積の並列計算を研究する。並列計算は実行時間を短縮する。",
      ["並列計算", "行列"])),
    ("d34",
     ("Parallel processing of database queries",
      "Parallel processing speeds up database queries on many cores.",
      ["parallel processing", "database"]),
     ("データベース問合せの並列処理",
      "並列処理は多数のコア上でデータベース問合せを高速化する。",
      ["並列処理", "データベース"])),
    ("d35",
     ("A computation model for distributed systems",
      "A computation model for distributed systems captures message delays.",
      ["computation model", "distributed system"]),
     ("分散システムのための計算モデル",
      "分散システムのための計算モデルはメッセージ遅延を表現する。",
      ["計算モデル", "分散システム"])),
    # q10 speech recognition
    ("d36",
     ("Speech recognition with acoustic models",
      "Speech recognition combines acoustic models and language models. "
      "We improve speech recognition in noisy rooms.",
      ["speech recognition", "acoustic model"]),
     ("音響モデルを用いた音声認識",
      "音声認識は音響モデルと言語モデルを組み合わせる。雑音のある部屋での音声認識を改善する。",
      ["音声認識", "音響モデル"])),
    ("d37",
     ("Character recognition of handwritten forms",
      "Character recognition reads handwritten forms.",
      ["character recognition", "handwriting"]),
     ("手書き帳票の文字認識",
      "文字認識は手書きの帳票を読み取る。",
      ["文字認識", "手書き"])),
    ("d38",
     ("Speech synthesis for reading machines",
      "Speech synthesis produces natural speech for reading machines.",
      ["speech synthesis", "reading machine"]),
     ("読み上げ機械のための音声合成",
      "音声合成は読み上げ機械のための自然な音声を生成する。",
      ["音声合成", "読み上げ機械"])),
    # q11 natural language processing
    ("d39",
     ("Natural language processing for clinical notes",
      "Natural language processing extracts findings from clinical notes. "
      "Language processing of notes needs domain dictionaries.",
      ["natural language processing", "clinical notes"]),
     ("臨床記録のための自然言語処理",
      "自然言語処理は臨床記録から所見を抽出する。記録の言語処理には分野辞書が必要である。",
      ["自然言語処理", "臨床記録"])),
    ("d40",
     ("Natural language understanding in dialogue systems",
      "A dialogue system needs natural language understanding.",
      ["language understanding", "dialogue system"]),
     ("対話システムにおける自然言語理解",
      "対話システムは自然言語理解を必要とする。",
      ["言語理解", "対話システム"])),
    ("d41",
     ("Image processing on graphics hardware",
      "Image processing kernels run on graphics hardware.",
      ["image processing", "graphics hardware"]),
     ("グラフィックスハードウェア上の画像処理",
      "画像処理カーネルはグラフィックスハードウェア上で動作する。",
      ["画像処理", "グラフィックスハードウェア"])),
    # general background
    ("d42",
     ("Document classification with statistical models",
      "Statistical models assign documents to classes. Document classification is evaluated.",
      ["document classification", "statistical model"]),
     ("統計モデルによる文書分類",
      "統計モデルは文書をクラスに割り当てる。文書分類を評価する。",
      ["文書分類", "統計モデル"])),
    ("d43",
     ("Image compression with wavelets",
      "Wavelet transforms give efficient image compression.",
      ["image compression", "wavelet"]),
     ("ウェーブレットによる画像圧縮",
      "ウェーブレット変換は効率的な画像圧縮を与える。",
      ["画像圧縮", "ウェーブレット"])),
    ("d44",
     ("Knowledge acquisition from experts",
      "Knowledge acquisition interviews elicit expert rules. Knowledge representation uses frames.",
      ["knowledge acquisition", "knowledge representation"]),
     ("専門家からの知識獲得",
      "知識獲得の面接は専門家の規則を引き出す。知識表現にはフレームを用いる。",
      ["知識獲得", "知識表現"])),
    ("d45",
     ("Logic synthesis for circuit design",
      "Logic synthesis maps circuit design descriptions to gates.",
      ["logic synthesis", "circuit design"]),
     ("回路設計のための論理合成",
      "論理合成は回路設計の記述をゲートに写像する。",
      ["論理合成", "回路設計"])),
    ("d46",
     ("Question answering over encyclopedias",
      "Question answering systems find short answers in encyclopedias.",
      ["question answering", "encyclopedia"]),
     ("百科事典を対象とした質問応答",
      "質問応答システムは百科事典から短い回答を見つける。",
      ["質問応答", "百科事典"])),
    ("d47",
     ("Document summarization by sentence extraction",
      "Document summarization selects salient sentences.",
      ["document summarization", "sentence extraction"]),
     ("文抽出による文書要約",
      "文書要約は重要な文を選択する。",
      ["文書要約", "文抽出"])),
    ("d48",
     ("Signal processing for radar",
      "Signal processing filters radar echoes.",
      ["signal processing", "radar"]),
     ("レーダのための信号処理",
      "信号処理はレーダのエコーを濾波する。",
      ["信号処理", "レーダ"])),
    ("d49",
     ("Artificial intelligence planning",
      "Artificial intelligence planners build action sequences.",
      ["artificial intelligence", "planning"]),
     ("人工知能におけるプランニング",
      "人工知能のプランナは行動系列を構築する。",
      ["人工知能", "プランニング"])),
    ("d50",
     ("Memory management in operating systems",
      "Memory management allocates pages to processes.",
      ["memory management", "operating system"]),
     ("オペレーティングシステムにおける記憶管理",
      "記憶管理はプロセスにページを割り当てる。",
      ["記憶管理", "オペレーティングシステム"])),
    ("d51",
     ("Database management for scientific data",
      "Database management systems hold scientific data.",
      ["database management", "scientific data"]),
     ("科学データのためのデータベース管理",
      "データベース管理システムは科学データを保持する。",
      ["データベース管理", "科学データ"])),
    ("d52",
     ("Search algorithms for game trees",
      "Search algorithms prune game trees.",
      ["search algorithm", "game tree"]),
     ("ゲーム木のための探索アルゴリズム",
      "探索アルゴリズムはゲーム木を枝刈りする。",
      ["探索アルゴリズム", "ゲーム木"])),
    ("d53",
     ("Network design under budget limits",
      "Network design chooses links under budget limits.",
      ["network design", "budget"]),
     ("予算制約下のネットワーク設計",
      "ネットワーク設計は予算の制約の下でリンクを選ぶ。",
      ["ネットワーク設計", "予算"])),
    ("d54",
     ("Language generation from tables",
      "Language generation verbalizes table records.",
      ["language generation", "table"]),
     ("表からの言語生成",
      "言語生成は表の記録を言語化する。",
      ["言語生成", "表"])),
    ("d55",
     ("Japanese grammar for learners",
      "A Japanese grammar for learners explains particles.",
      ["japanese grammar", "learner"]),
     ("学習者のための日本語文法",
      "学習者のための日本語文法は助詞を説明する。",
      ["日本語文法", "学習者"])),
    ("d56",
     ("Evaluation methods for retrieval experiments",
      "Evaluation methods for retrieval experiments use pooled judgments.",
      ["evaluation method", "retrieval experiment"]),
     ("検索実験のための評価方法",
      "検索実験のための評価方法はプールされた判定を用いる。",
      ["評価方法", "検索実験"])),
    ("d57",
     ("Transistor level circuit simulation",
      "Transistor models drive circuit simulation.",
      ["transistor", "circuit simulation"]),
     ("トランジスタレベルの回路シミュレーション",
      "トランジスタモデルは回路シミュレーションを駆動する。",
      ["トランジスタ", "回路シミュレーション"])),
    ("d58",
     ("Printer drivers for network printers",
      "Printer drivers talk to network printers.",
      ["printer", "driver"]),
     ("ネットワークプリンタのためのプリンタドライバ",
      "プリンタドライバはネットワークプリンタと通信する。",
      ["プリンタ", "ドライバ"])),
    ("d59",
     ("Digital libraries and collections",
      "Digital libraries manage collections of documents.",
      ["digital library", "collection"]),
     ("電子図書館とコレクション",
      "電子図書館は文書のコレクションを管理する。",
      ["電子図書館", "コレクション"])),
    ("d60",
     ("Statistical machine learning theory",
      "Statistical learning theory bounds generalization error.",
      ["statistical learning", "theory"]),
     ("統計的機械学習理論",
      "統計的学習理論は汎化誤差を抑える。",
      ["統計的学習", "理論"])),
]

QUERIES = [
    ("q01", "情報検索システム", "d01", ["d03"]),
    ("q02", "機械翻訳システム", "d05", ["d07"]),
    ("q03", "日本語の構文解析手法", "d08", ["d09", "d10"]),
    ("q04", "クラスタリングのための次元削減", "d12", ["d13"]),
    ("q05", "知的情報検索", "d15", ["d01"]),
    ("q06", "データマイニング手法", "d17", ["d20"]),
    ("q07", "レジスタ転送言語", "d21", []),
    ("q08", "データリダクション", "d27", ["d28", "d30"]),
    ("q09", "並列計算", "d33", ["d34"]),
    ("q10", "音声認識", "d36", []),
    ("q11", "自然言語処理", "d39", ["d40"]),
]

# Queries whose answer depends on transliterating an out-of-lexicon word.
TRANSLITERATION_QUERIES = ["q06", "q07", "q08"]

SIMILAR_LETTERS = ["l r", "b v", "c k", "c s", "f h", "j z", "q k", "x z", "g j",
                   "d t", "p b", "s z", "m n", "w u", "y i", "f p", "v w", "t c",
                   "k g", "h w"]

CONFIG = """# Cross-language run: Japanese queries against English documents.
[paths]
corpus = corpus_en.jsonl
lm_corpus = corpus_en.jsonl
term_pairs = term_pairs.tsv
translit_pairs = translit_pairs.tsv
stopwords_en = stopwords_en.txt
similar_letters = similar_letters.txt
queries = queries.tsv
qrels = qrels.txt
output_dir = ../out

[params]
direction = ja-en
k = 3
k_tr = 10
m = 16
epsilon_channel = 0.01
epsilon_lm = 0.01
epsilon_symbol = 0.01
p_tr = 0.001
n_top = 1000
binarization = lenient
transliteration = on
fields = title,abstract,keywords
"""

CONFIG_JJ = """# Monolingual baseline: Japanese queries against the Japanese twins.
[paths]
corpus = corpus_ja.jsonl
stopwords_en = stopwords_en.txt
queries = queries.tsv
qrels = qrels.txt
output_dir = ../out/jj

[params]
direction = ja-en
mode = monolingual
binarization = lenient
fields = title,abstract,keywords
"""


def write(name, text):
    path = DATA / name
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)}")


def main():
    DATA.mkdir(exist_ok=True)
    known = {ja for ja, _ in BASE_WORDS}
    rows = []
    for ja, ens in BASE_WORDS:
        for en in ens:
            rows.append(f"{en}\t{ja}")
    for en, ja in COMPOUNDS:
        rows.append(f"{en}\t{ja}")
    for banned in ("マイニング", "レジスタ", "リダクション"):
        assert banned not in known and all(banned not in r for r in rows), banned
    write("term_pairs.tsv", "\n".join(rows) + "\n")

    loan_rows = []
    seen = set()
    for en, ja in LOANWORDS:
        if (en, ja) in seen:
            continue
        assert en not in ("mining", "register", "reduction"), en
        seen.add((en, ja))
        loan_rows.append(f"{en}\t{ja}")
    write("translit_pairs.tsv", "\n".join(loan_rows) + "\n")

    write("stopwords_en.txt", "# English stopwords\n" + "\n".join(sorted(set(STOPWORDS))) + "\n")
    write("similar_letters.txt", "# phonetically similar letter pairs\n" +
          "\n".join(SIMILAR_LETTERS) + "\n")

    ids = [d[0] for d in DOCS]
    assert len(ids) == len(set(ids))
    en_lines, ja_lines = [], []
    for doc_id, en, ja in DOCS:
        for lang, (title, abstract, keywords), out in (("en", en, en_lines), ("ja", ja, ja_lines)):
            out.append(json.dumps({"id": doc_id, "lang": lang, "title": title,
                                   "abstract": abstract, "keywords": keywords},
                                  ensure_ascii=False))
    write("corpus_en.jsonl", "\n".join(en_lines) + "\n")
    write("corpus_ja.jsonl", "\n".join(ja_lines) + "\n")

    write("queries.tsv", "".join(f"{q}\t{text}\n" for q, text, _, _ in QUERIES))
    qrels = []
    for q, _, planted, partial in QUERIES:
        qrels.append(f"{q} {planted} 2")
        for d in partial:
            qrels.append(f"{q} {d} 1")
    write("qrels.txt", "\n".join(qrels) + "\n")
    write("planted.tsv", "".join(
        f"{q}\t{planted}\t{'transliteration' if q in TRANSLITERATION_QUERIES else 'lexicon'}\n"
        for q, _, planted, _ in QUERIES))

    write("experiment.conf", CONFIG)
    write("experiment_jj.conf", CONFIG_JJ)
    return 0


if __name__ == "__main__":
    sys.exit(main())
