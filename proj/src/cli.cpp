#include "lcscount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcscount/oracle.hpp"

namespace lcscount::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Tokenization> kTokenizations{
    {"bytes", Tokenization::Bytes},
    {"codepoints", Tokenization::Codepoints},
    {"lines", Tokenization::Lines},
};
const std::map<std::string, Algorithm> kAlgorithms{
    {"full", Algorithm::Full},
    {"linear", Algorithm::Linear},
};
const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain},
    {"json", Format::Json},
};

struct ComparisonFlags {
  std::vector<std::string> texts;
  std::vector<std::string> files;
  std::vector<std::string> modes;
  Tokenization tokenization = Tokenization::Bytes;
  Algorithm algorithm = Algorithm::Linear;
  Format format = Format::Plain;
  CLI::Option* text_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* mode_opt = nullptr;
};

void add_comparison_flags(CLI::App& app, ComparisonFlags& f, bool with_algorithm) {
  f.text_opt = app.add_option("--text", f.texts, "Inline input (give two, or combine with --file)")
                   ->allow_extra_args(false);
  f.file_opt = app.add_option("--file", f.files, "Input file; '-' reads standard input")
                   ->allow_extra_args(false);
  f.mode_opt = app.add_option("--mode", f.modes, "length, distinct, embeddings, or all")
                   ->delimiter(',')
                   ->allow_extra_args(false);
  app.add_option("--tokenize", f.tokenization, "bytes, codepoints, or lines")
      ->transform(CLI::CheckedTransformer(kTokenizations, CLI::ignore_case));
  if (with_algorithm) {
    app.add_option("--algorithm", f.algorithm, "full or linear (default)")
        ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
  }
  app.add_option("--format", f.format, "plain (default) or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

ComparisonRequest build_request(const CLI::App& app, const ComparisonFlags& f) {
  ComparisonRequest req;
  req.tokenization = f.tokenization;
  req.algorithm = f.algorithm;
  req.format = f.format;

  // Sources keep their command-line order, whichever flag introduced them.
  std::vector<InputSource> sources;
  std::size_t next_text = 0;
  std::size_t next_file = 0;
  for (const CLI::Option* opt : app.parse_order()) {
    if (opt == f.text_opt) {
      sources.push_back({InputSource::Kind::Literal, f.texts.at(next_text++)});
    } else if (opt == f.file_opt) {
      const std::string& path = f.files.at(next_file++);
      sources.push_back(
          {path == "-" ? InputSource::Kind::Stdin : InputSource::Kind::File, path});
    }
  }
  if (sources.size() != 2) {
    throw UsageError("expected exactly two inputs (--text/--file), got " +
                     std::to_string(sources.size()));
  }
  if (sources[0].kind == InputSource::Kind::Stdin && sources[1].kind == InputSource::Kind::Stdin) {
    throw UsageError("at most one input may come from standard input");
  }
  req.input_a = sources[0];
  req.input_b = sources[1];

  if (f.mode_opt->count() > 0) {
    req.want_length = req.want_distinct = req.want_embeddings = false;
    for (const auto& mode : f.modes) {
      if (mode == "all") {
        req.want_length = req.want_distinct = req.want_embeddings = true;
      } else if (mode == "length") {
        req.want_length = true;
      } else if (mode == "distinct") {
        req.want_distinct = true;
      } else if (mode == "embeddings") {
        req.want_embeddings = true;
      } else {
        throw UsageError("unknown mode '" + mode + "'");
      }
    }
    if (!req.want_length && !req.want_distinct && !req.want_embeddings) {
      throw UsageError("--mode must name at least one of length, distinct, embeddings, all");
    }
  }
  return req;
}

std::string load(const InputSource& source, std::istream& in) {
  switch (source.kind) {
    case InputSource::Kind::Literal:
      return source.value;
    case InputSource::Kind::Stdin:
      return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    case InputSource::Kind::File: {
      std::ifstream file(source.value, std::ios::binary);
      if (!file) throw IoError("cannot open '" + source.value + "'");
      std::ostringstream buf;
      buf << file.rdbuf();
      if (file.bad()) throw IoError("error reading '" + source.value + "'");
      return buf.str();
    }
  }
  return {};
}

void emit(const ComparisonRequest& req, std::size_t m, std::size_t n, const LcsSummary& summary,
          const std::string& algorithm_label, std::ostream& out) {
  if (req.format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["m"] = m;
    doc["n"] = n;
    doc["lcs_length"] = summary.lcs_length;
    if (req.want_distinct) doc["distinct_lcs_count"] = summary.distinct_count->str();
    if (req.want_embeddings) doc["embedding_count"] = summary.embedding_count->str();
    doc["algorithm"] = algorithm_label;
    doc["tokenization"] = to_string(req.tokenization);
    out << doc.dump() << '\n';
    return;
  }
  if (req.want_length) out << "length: " << summary.lcs_length << '\n';
  if (req.want_distinct) out << "distinct: " << summary.distinct_count->str() << '\n';
  if (req.want_embeddings) out << "embeddings: " << summary.embedding_count->str() << '\n';
}

LcsSummary run_oracle(SequenceView a, SequenceView b, const ComparisonRequest& req) {
  LcsSummary s;
  if (req.want_distinct || !req.want_embeddings) {
    auto r = oracle::oracle_distinct(a, b);
    s.lcs_length = r.length;
    if (req.want_distinct) s.distinct_count = std::move(r.count);
  }
  if (req.want_embeddings) {
    auto r = oracle::oracle_embeddings(a, b);
    s.lcs_length = r.length;
    s.embedding_count = std::move(r.count);
  }
  return s;
}

int compare(const CLI::App& app, const ComparisonFlags& flags, bool use_oracle, std::ostream& out,
            std::ostream& err, std::istream& in) {
  ComparisonRequest req;
  try {
    req = build_request(app, flags);
  } catch (const UsageError& e) {
    err << "lcscount: " << e.what() << '\n';
    return kUsage;
  }

  std::string text_a;
  std::string text_b;
  try {
    text_a = load(req.input_a, in);
    text_b = load(req.input_b, in);
  } catch (const IoError& e) {
    err << "lcscount: " << e.what() << '\n';
    return kIo;
  }

  Tokenizer tokenize(req.tokenization);
  Sequence a;
  Sequence b;
  try {
    a = tokenize(text_a);
    b = tokenize(text_b);
  } catch (const InvalidUtf8& e) {
    err << "lcscount: " << e.what() << '\n';
    return kUsage;
  }

  LcsSummary summary;
  if (use_oracle) {
    try {
      summary = run_oracle(a, b, req);
    } catch (const oracle::InputTooLarge& e) {
      err << "lcscount: " << e.what() << '\n';
      return kOracleGuard;
    }
  } else {
    summary = summarize(a, b, {req.want_distinct, req.want_embeddings, req.algorithm});
  }
  emit(req, a.size(), b.size(), summary, use_oracle ? "oracle" : to_string(req.algorithm), out);
  return kOk;
}

struct BenchFlags {
  std::size_t length = 1000;
  std::uint32_t alphabet = 4;
  std::uint64_t seed = 1;
  std::size_t max_full_cells = 8'000'000;
  Format format = Format::Plain;
};

Sequence random_sequence(std::mt19937_64& rng, std::size_t length, std::uint32_t alphabet) {
  std::uniform_int_distribution<Symbol> pick(0, alphabet - 1);
  Sequence s(length);
  for (auto& x : s) x = pick(rng);
  return s;
}

int bench(const BenchFlags& f, std::ostream& out) {
  std::mt19937_64 rng(f.seed);
  const Sequence a = random_sequence(rng, f.length, f.alphabet);
  const Sequence b = random_sequence(rng, f.length, f.alphabet);
  const std::size_t full_cells = (a.size() + 1) * (b.size() + 1);
  const std::size_t rolling_cells = std::min(a.size(), b.size()) + 1;

  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (Algorithm algorithm : {Algorithm::Linear, Algorithm::Full}) {
    for (CountKind kind : {CountKind::Distinct, CountKind::Embeddings}) {
      nlohmann::ordered_json run;
      run["algorithm"] = to_string(algorithm);
      run["kind"] = to_string(kind);
      if (algorithm == Algorithm::Full && full_cells > f.max_full_cells) {
        run["skipped"] = true;
        runs.push_back(std::move(run));
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const CountResult r = algorithm == Algorithm::Full ? count_full(a, b, kind)
                                                         : count_linear_space(a, b, kind);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      const std::size_t cells = algorithm == Algorithm::Full ? full_cells : rolling_cells;
      run["lcs_length"] = r.length;
      run["count_bits"] = r.count == 0 ? 0u : msb(r.count) + 1;
      run["time_ms"] = elapsed.count();
      run["length_cells"] = cells;
      run["count_cells"] = cells;
      runs.push_back(std::move(run));
    }
  }

  if (f.format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["m"] = a.size();
    doc["n"] = b.size();
    doc["alphabet"] = f.alphabet;
    doc["seed"] = f.seed;
    doc["runs"] = std::move(runs);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "m=" << a.size() << " n=" << b.size() << " alphabet=" << f.alphabet
      << " seed=" << f.seed << '\n';
  for (const auto& run : runs) {
    out << run["algorithm"].get<std::string>() << ' ' << run["kind"].get<std::string>() << ": ";
    if (run.contains("skipped")) {
      out << "skipped (table exceeds --max-full-cells)\n";
      continue;
    }
    out << "length=" << run["lcs_length"] << " count_bits=" << run["count_bits"]
        << " time_ms=" << run["time_ms"].get<double>() << " length_cells=" << run["length_cells"]
        << " count_cells=" << run["count_cells"] << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Length and exact counts of longest common subsequences", "lcscount"};
  ComparisonFlags main_flags;
  add_comparison_flags(app, main_flags, true);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Same comparison via brute-force enumeration");
  ComparisonFlags oracle_flags;
  add_comparison_flags(*oracle_cmd, oracle_flags, false);

  CLI::App* bench_cmd = app.add_subcommand("bench", "Time both algorithms on seeded random input");
  BenchFlags bench_flags;
  bench_cmd->add_option("--len", bench_flags.length, "Length of each sequence");
  bench_cmd->add_option("--alphabet", bench_flags.alphabet, "Alphabet size")
      ->check(CLI::Range(std::uint32_t{1}, std::numeric_limits<std::uint32_t>::max()));
  bench_cmd->add_option("--seed", bench_flags.seed, "PRNG seed");
  bench_cmd->add_option("--max-full-cells", bench_flags.max_full_cells,
                        "Skip the full-table runs above this many cells");
  bench_cmd->add_option("--format", bench_flags.format, "plain (default) or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  app.require_subcommand(0, 1);

  // CLI11 consumes a vector back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (bench_cmd->parsed()) return bench(bench_flags, out);
  if (oracle_cmd->parsed()) return compare(*oracle_cmd, oracle_flags, true, out, err, in);
  return compare(app, main_flags, false, out, err, in);
}

}  // namespace lcscount::cli
