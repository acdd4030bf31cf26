// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rislink/graph.hpp"
#include "rislink/metrics.hpp"
#include "rislink/scene.hpp"
#include "rislink/seed.hpp"
#include "rislink/sixbit.hpp"

namespace rislink {

double TextRunStats::ber() const {
  return bits_sent == 0 ? 0.0 : static_cast<double>(bit_errors) / static_cast<double>(bits_sent);
}

double TextRunStats::char_error() const {
  return chars_sent == 0 ? 0.0 : static_cast<double>(char_edits) / static_cast<double>(chars_sent);
}

TextCoder TextCoder::huffman(HuffmanCode code) {
  TextCoder c;
  c.method_ = Method::kHuffman;
  c.huffman_ = std::move(code);
  return c;
}

TextCoder TextCoder::sixbit() { return TextCoder{}; }

BitStream TextCoder::encode(std::string_view text) const {
  return huffman_ ? huffman_->encode(text) : sixbit_encode(text);
}

std::string TextCoder::decode(const BitStream& bits) const {
  return huffman_ ? huffman_->decode(bits) : sixbit_decode(bits);
}

HuffmanCode train_huffman(const std::vector<std::string>& training_texts) {
  FrequencyTable freqs;
  for (char ch : kSixbitAlphabet) freqs[static_cast<unsigned char>(ch)] = 1;
  for (const auto& t : training_texts) {
    for (char ch : fold_to_sixbit_alphabet(t)) ++freqs[static_cast<unsigned char>(ch)];
  }
  return HuffmanCode::build(freqs);
}

TextRunStats run_text_link(const std::vector<std::string>& texts, const TextCoder& coder, const Modulation& modulation,
                           const EndToEndGain& gain, const LinkBudget& budget, std::uint64_t seed) {
  TextRunStats stats;
  const bool outage = gain.value == std::complex<double>{};
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const BitStream sent = coder.encode(texts[i]);
    const ModulatedFrame frame = modulation.modulate(sent);
    SymbolMatrix rx = transmit(frame.symbols, gain, budget, derive_seed(seed, {i}));
    if (!outage) rx = equalize(rx, gain, budget.tx_power);
    const BitStream received = modulation.demodulate(rx, frame);
    std::string decoded = coder.decode(received);
    stats.bits_sent += sent.size();
    stats.bit_errors += bit_errors(sent, received);
    stats.chars_sent += texts[i].size();
    stats.char_edits += levenshtein(texts[i], decoded);
    stats.decoded.push_back(std::move(decoded));
  }
  return stats;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::string point_name(double ratio, const Quantization& bits) {
  return "r" + format_double(ratio) + "_b" + quantization_label(bits);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

namespace {

std::vector<Tokens> tokenize_all(const std::vector<std::string>& texts) {
  std::vector<Tokens> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(tokenize(t));
  return out;
}

void write_text(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& l : lines) out << l << '\n';
}

// Inputs shared by every sweep point, loaded once.
struct SweepInputs {
  std::vector<std::string> texts;
  std::vector<KnowledgeGraph> graphs;
  std::vector<std::string> linearized_graphs;
  std::optional<HuffmanCode> huffman;
  std::optional<SymbolMatrix> symbols;
  std::optional<KnowledgeGraph> reference_graph;
  std::vector<std::string> reference_text;
  std::vector<EmbeddingVector> reference_embeddings;
};

SweepInputs load_inputs(const ExperimentConfig& cfg) {
  SweepInputs in;
  const auto& files = cfg.input;
  if (files.corpus) {
    for (const auto& line : read_lines(*files.corpus)) in.texts.push_back(fold_to_sixbit_alphabet(line));
  }
  if (files.graphs) {
    in.graphs = load_graphs(*files.graphs);
    for (const auto& g : in.graphs) in.linearized_graphs.push_back(fold_to_sixbit_alphabet(linearize_graph(g)));
  }
  if (std::find(cfg.methods.begin(), cfg.methods.end(), Method::kHuffman) != cfg.methods.end()) {
    std::vector<std::string> training = files.train_corpus ? read_lines(*files.train_corpus) : in.texts;
    training.insert(training.end(), in.linearized_graphs.begin(), in.linearized_graphs.end());
    in.huffman = train_huffman(training);
  }
  if (files.symbols) {
    SymbolMatrix m = load_symbol_matrix(*files.symbols);
    in.symbols = m.normalized ? m : normalize_rows(m);
  }
  if (files.reference_graph) in.reference_graph = load_graph(*files.reference_graph);
  if (files.reference_text) in.reference_text = read_lines(*files.reference_text);
  if (files.reference_embeddings) in.reference_embeddings = load_embeddings(*files.reference_embeddings);
  return in;
}

std::optional<double> similarity_from(const std::optional<std::filesystem::path>& decoded_dir,
                                      const std::string& stem, const SweepInputs& in) {
  if (!decoded_dir || in.reference_embeddings.empty()) return std::nullopt;
  const auto path = *decoded_dir / (stem + ".embeddings.json");
  if (!std::filesystem::exists(path)) return std::nullopt;
  return mean_cosine_similarity(load_embeddings(path), in.reference_embeddings);
}

struct PointContext {
  const ExperimentConfig& cfg;
  const LinkScene& scene;
  const SweepInputs& inputs;
  const Modulation& modulation;
  std::optional<std::filesystem::path> points_dir;
};

SweepRecord run_method(const PointContext& ctx, const PointLink& link, std::size_t ri, std::size_t qi, std::size_t mi) {
  const auto& cfg = ctx.cfg;
  const Method method = cfg.methods[mi];
  SweepRecord rec;
  rec.ratio = cfg.ratios[ri];
  rec.bits = cfg.quantizations[qi];
  rec.codeword = link.codeword;
  rec.snr_db = link.snr.db();
  rec.method = method;
  rec.seed = derive_seed(cfg.seed, {ri, qi, mi});

  LinkBudget budget = ctx.scene.budget;
  if (cfg.noiseless) budget.noise_power = 0.0;
  const std::string stem = point_name(rec.ratio, rec.bits) + "." + to_string(method);

  if (method == Method::kSemantic) {
    const SymbolMatrix rx = transmit(*ctx.inputs.symbols, link.gain, budget, rec.seed);
    if (ctx.points_dir) {
      const bool outage = link.gain.value == std::complex<double>{};
      store_symbol_matrix(outage ? rx : equalize(rx, link.gain, budget.tx_power),
                          *ctx.points_dir / (stem + ".symbols.json"));
    }
    const auto& dir = cfg.input.decoded_dir;
    if (dir && ctx.inputs.reference_graph && std::filesystem::exists(*dir / (stem + ".graph.json"))) {
      rec.f1 = triplet_f1(*ctx.inputs.reference_graph, load_graph(*dir / (stem + ".graph.json"))).f1;
    }
    if (dir && !ctx.inputs.reference_text.empty() && std::filesystem::exists(*dir / (stem + ".txt"))) {
      const auto hyp = read_lines(*dir / (stem + ".txt"));
      if (hyp.size() == ctx.inputs.reference_text.size()) {
        rec.bleu = corpus_bleu(tokenize_all(hyp), tokenize_all(ctx.inputs.reference_text));
        rec.rel_bleu = relative_bleu(*rec.bleu, cfg.max_bleu);
      }
    }
    rec.similarity = similarity_from(dir, stem, ctx.inputs);
    return rec;
  }

  const TextCoder coder =
      method == Method::kHuffman ? TextCoder::huffman(*ctx.inputs.huffman) : TextCoder::sixbit();
  const TextRunStats text = run_text_link(ctx.inputs.texts, coder, ctx.modulation, link.gain, budget,
                                          derive_seed(rec.seed, {0}));
  rec.ber = text.ber();
  rec.char_err = text.char_error();
  rec.bleu = corpus_bleu(tokenize_all(text.decoded), tokenize_all(ctx.inputs.texts));
  rec.rel_bleu = relative_bleu(*rec.bleu, cfg.max_bleu);
  if (!ctx.inputs.graphs.empty()) {
    const TextRunStats graph_run = run_text_link(ctx.inputs.linearized_graphs, coder, ctx.modulation, link.gain, budget,
                                                 derive_seed(rec.seed, {1}));
    std::vector<KnowledgeGraph> decoded;
    for (const auto& s : graph_run.decoded) decoded.push_back(parse_linearized_graph(s));
    rec.f1 = triplet_f1(ctx.inputs.graphs, decoded).f1;
  }
  rec.similarity = similarity_from(cfg.input.decoded_dir, stem, ctx.inputs);
  if (ctx.points_dir) write_text(*ctx.points_dir / (stem + ".txt"), text.decoded);
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const ExperimentConfig& cfg, int jobs) {
  cfg.validate();
  cfg.validate_inputs();
  const LinkScene scene = build_scene(cfg);
  const SweepInputs inputs = load_inputs(cfg);
  const auto modulation = make_modulation(cfg.modulation);
  std::optional<std::filesystem::path> points_dir;
  if (cfg.output) {
    points_dir = cfg.output->string() + ".points";
    std::filesystem::create_directories(*points_dir);
  }
  const PointContext ctx{cfg, scene, inputs, *modulation, points_dir};

  const std::size_t n_q = cfg.quantizations.size();
  const std::size_t n_m = cfg.methods.size();
  const std::size_t n_points = cfg.ratios.size() * n_q;
  std::vector<SweepRecord> records(n_points * n_m);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t p = next++; p < n_points; p = next++) {
      try {
        const std::size_t ri = p / n_q;
        const std::size_t qi = p % n_q;
        const PointLink link = configure_point(scene, cfg, cfg.ratios[ri], cfg.quantizations[qi], ri);
        for (std::size_t mi = 0; mi < n_m; ++mi) records[p * n_m + mi] = run_method(ctx, link, ri, qi, mi);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n_threads, n_points); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

std::vector<SweepRecord> run_sweep_to_file(ExperimentConfig cfg, const std::filesystem::path& csv, int jobs) {
  cfg.output = csv;
  auto records = run_sweep(cfg, jobs);
  nlohmann::json tables = {{"sixbit", sixbit_alphabet_json()}};
  if (std::find(cfg.methods.begin(), cfg.methods.end(), Method::kHuffman) != cfg.methods.end()) {
    const SweepInputs inputs = load_inputs(cfg);
    tables["huffman"] = inputs.huffman->to_json();
  }
  {
    std::ofstream out(csv.string() + ".tables.json");
    if (!out) throw std::runtime_error("cannot write tables next to " + csv.string());
    out << tables.dump(2) << '\n';
  }
  write_csv_atomic(records, csv);
  return records;
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::optional<double> opt_from(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string records_to_csv(const std::vector<SweepRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += format_double(r.ratio) + ',' + quantization_label(r.bits) + ',' + std::to_string(r.codeword) + ',' +
           format_double(r.snr_db) + ',' + to_string(r.method) + ',' + opt(r.ber) + ',' + opt(r.char_err) + ',' +
           opt(r.bleu) + ',' + opt(r.rel_bleu) + ',' + opt(r.f1) + ',' + opt(r.similarity) + ',' +
           std::to_string(r.seed) + '\n';
  }
  return out;
}

std::vector<SweepRecord> records_from_csv(std::string_view csv) {
  std::vector<SweepRecord> out;
  bool header = true;
  for (auto line : split(csv, '\n')) {
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header");
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 12) throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields, expected 12");
    SweepRecord r;
    r.ratio = parse_double(f[0]);
    r.bits = quantization_from_label(std::string(f[1]));
    r.codeword = static_cast<std::size_t>(std::stoull(std::string(f[2])));
    r.snr_db = parse_double(f[3]);
    r.method = method_from_string(std::string(f[4]));
    r.ber = opt_from(f[5]);
    r.char_err = opt_from(f[6]);
    r.bleu = opt_from(f[7]);
    r.rel_bleu = opt_from(f[8]);
    r.f1 = opt_from(f[9]);
    r.similarity = opt_from(f[10]);
    r.seed = std::stoull(std::string(f[11]));
    out.push_back(r);
  }
  if (header) throw std::runtime_error("empty CSV");
  return out;
}

void write_csv_atomic(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << records_to_csv(records);
    if (!out.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<SweepRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return records_from_csv(ss.str());
}

}  // namespace rislink
