// wavembed command line: wavelet word-embedding compression, DWT-DCT
// sentence encoding, and the intrinsic evaluation suite.
//
// Exit codes: 0 success, 1 usage error, 2 file/data error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavembed/wavembed.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wavembed::ParseError("cannot open '" + path + "'");
    return in;
}

wavembed::LoadResult load_table(const std::string& path, const wavembed::LoadOptions& options) {
    std::ifstream in = open_input(path);
    wavembed::LoadResult result = wavembed::load_embeddings(in, options);
    if (result.skipped_lines > 0) {
        std::cerr << "warning: skipped " << result.skipped_lines << " malformed line(s) in '"
                  << path << "'\n";
    }
    if (result.duplicate_tokens > 0) {
        std::cerr << "warning: dropped " << result.duplicate_tokens << " duplicate token(s) in '"
                  << path << "'\n";
    }
    return result;
}

void write_report(const wavembed::EvalReport& report, const std::string& dataset_name) {
    std::printf("dataset      %s\n", dataset_name.c_str());
    std::printf("metric       %s\n", report.metric.c_str());
    std::printf("value        %.6f\n", report.value);
    std::printf("evaluated    %zu\n", report.n_evaluated);
    std::printf("skipped_oov  %zu\n", report.n_skipped_oov);
    std::printf("metric=%s value=%.6f n_evaluated=%zu n_skipped_oov=%zu\n", report.metric.c_str(),
                report.value, report.n_evaluated, report.n_skipped_oov);
}

int cmd_filters() {
    std::printf("%-7s %5s %14s %14s %14s  %s\n", "name", "taps", "sum_h_err", "sum_g_err",
                "ortho_err", "status");
    for (const auto& name : wavembed::filter_names()) {
        const wavembed::WaveletFilter f = wavembed::make_filter(name);
        double sum_h = 0.0;
        double sum_g = 0.0;
        for (std::size_t k = 0; k < f.length(); ++k) {
            sum_h += f.lowpass[k];
            sum_g += f.highpass[k];
        }
        double ortho = 0.0;
        for (std::size_t m = 0; m < f.length() / 2; ++m) {
            double corr = 0.0;
            for (std::size_t k = 0; k + 2 * m < f.length(); ++k) {
                corr += f.lowpass[k] * f.lowpass[k + 2 * m];
            }
            ortho = std::max(ortho, std::fabs(corr - (m == 0 ? 1.0 : 0.0)));
        }
        const double sum_h_err = std::fabs(sum_h - std::numbers::sqrt2);
        const double sum_g_err = std::fabs(sum_g);
        const bool ok = sum_h_err < 1e-10 && sum_g_err < 1e-10 && ortho < 1e-10;
        std::printf("%-7s %5zu %14.2e %14.2e %14.2e  %s\n", name.c_str(), f.length(), sum_h_err,
                    sum_g_err, ortho, ok ? "ok" : "FAIL");
    }
    return 0;
}

struct OutSink {
    std::ofstream file;
    std::ostream* stream = nullptr;

    explicit OutSink(const std::string& path) {
        if (path == "-") {
            stream = &std::cout;
        } else {
            file.open(path);
            if (!file) throw wavembed::ParseError("cannot open '" + path + "' for writing");
            stream = &file;
        }
    }
};

int cmd_compress(const std::string& emb, const std::string& filter, const std::string& paths_csv,
                 const std::string& out_path, const wavembed::LoadOptions& options,
                 int precision) {
    const wavembed::LoadResult loaded = load_table(emb, options);
    wavembed::CompressionSpec spec{filter, wavembed::parse_path_list(paths_csv), ""};
    const wavembed::EmbeddingTable compressed = wavembed::compress_table(loaded.table, spec);
    OutSink sink(out_path);
    wavembed::save_embeddings(compressed, *sink.stream, precision);
    std::cerr << "compressed " << compressed.size() << " vectors: dim " << loaded.table.dim()
              << " -> " << compressed.dim() << "\n";
    return 0;
}

int cmd_encode(const std::string& emb, const std::string& corpus, wavembed::SentenceEncoderConfig cfg,
               const std::string& out_path, const wavembed::LoadOptions& options, int precision) {
    const wavembed::LoadResult loaded = load_table(emb, options);
    std::ifstream in = open_input(corpus);
    OutSink sink(out_path);

    char buf[512];
    std::string line;
    std::size_t line_index = 0;
    std::size_t oov_tokens = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tokens;
        for (auto field : wavembed::detail::split_whitespace(line)) {
            tokens.emplace_back(field);
            std::string key = cfg.lowercase ? wavembed::detail::to_lower_ascii(field)
                                            : std::string(field);
            if (!loaded.table.lookup(key)) ++oov_tokens;
        }
        const wavembed::SentenceVector enc = wavembed::encode_tokens(tokens, loaded.table, cfg);
        *sink.stream << line_index;
        for (double v : enc.values) {
            std::snprintf(buf, sizeof(buf), " %.*f", precision, v);
            *sink.stream << buf;
        }
        *sink.stream << '\n';
        ++line_index;
    }
    std::cerr << "encoded " << line_index << " sentence(s), " << oov_tokens
              << " OOV token occurrence(s)\n";
    return 0;
}

int cmd_eval_wordsim(const std::string& emb, const std::string& dataset,
                     const wavembed::LoadOptions& options) {
    const wavembed::LoadResult loaded = load_table(emb, options);
    std::ifstream in = open_input(dataset);
    const wavembed::WordSimDataset ds = wavembed::load_word_sim(in, dataset);
    write_report(wavembed::eval_word_similarity(loaded.table, ds), ds.name);
    return 0;
}

int cmd_eval_cat(const std::string& emb, const std::string& dataset, std::uint64_t seed,
                 const wavembed::LoadOptions& options) {
    const wavembed::LoadResult loaded = load_table(emb, options);
    std::ifstream in = open_input(dataset);
    const wavembed::CategorizationDataset ds = wavembed::load_categorization(in, dataset);
    write_report(wavembed::eval_categorization(loaded.table, ds, seed), ds.name);
    return 0;
}

int cmd_knn(const std::string& emb, const std::string& word, std::size_t k,
            const wavembed::LoadOptions& options) {
    const wavembed::LoadResult loaded = load_table(emb, options);
    for (const auto& [neighbour, score] : wavembed::knn(loaded.table, word, k)) {
        std::printf("%s %.6f\n", neighbour.c_str(), score);
    }
    return 0;
}

int cmd_eval_sts(const std::string& emb, const std::string& pairs, bool use_avg,
                 const wavembed::SentenceEncoderConfig& cfg,
                 const wavembed::LoadOptions& options) {
    const wavembed::LoadResult loaded = load_table(emb, options);
    std::ifstream in = open_input(pairs);
    const wavembed::StsDataset ds = wavembed::load_sts(in, pairs);
    const wavembed::EvalReport report =
        use_avg ? wavembed::eval_sts_avg(ds, loaded.table, cfg.lowercase)
                : wavembed::eval_sts(ds, loaded.table, cfg);
    write_report(report, ds.name);
    return 0;
}

int cmd_dims(std::size_t dim, const std::string& paths_csv) {
    wavembed::CompressionSpec spec{"haar", wavembed::parse_path_list(paths_csv), ""};
    std::printf("%zu\n", wavembed::output_dim(spec, dim));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavelet word-embedding compression and DWT-DCT sentence encoding"};
    app.require_subcommand(1);

    wavembed::LoadOptions load_options;
    std::string emb;
    std::string dataset;
    std::string corpus;
    std::string out_path = "-";
    std::string filter = "coif2";
    std::string paths_csv = "D";
    std::string word;
    std::size_t k_neighbours = 5;
    std::size_t dim = 300;
    int level = 1;
    int k_coeffs = 1;
    std::uint64_t seed = kDefaultSeed;
    int precision = 6;
    bool use_avg = false;
    std::string oov_policy = "skip";
    std::string empty_policy = "zero";
    std::optional<std::size_t> expected_dim;
    std::optional<std::size_t> max_vocab;
    bool lowercase = false;

    auto add_table_options = [&](CLI::App* cmd) {
        cmd->add_option("--emb", emb, "embedding file (text .vec/GloVe format)")->required();
        cmd->add_flag("--lowercase", lowercase, "lowercase tokens on load and lookup");
        cmd->add_option("--expected-dim", expected_dim, "enforce this embedding dimension");
        cmd->add_option("--max-vocab", max_vocab, "load at most this many vectors");
    };

    CLI::App* filters_cmd = app.add_subcommand("filters", "list wavelet families and tap checks");

    CLI::App* compress_cmd =
        app.add_subcommand("compress", "compress a word-embedding table by packet subbands");
    add_table_options(compress_cmd);
    compress_cmd->add_option("--filter", filter, "wavelet family (default coif2)");
    compress_cmd->add_option("--paths", paths_csv, "comma-separated packet paths, e.g. D,AD,AAD");
    compress_cmd->add_option("--out", out_path, "output file ('-' for stdout)")->required();
    compress_cmd->add_option("--precision", precision, "decimal digits (default 6)")->check(CLI::Range(0, 100));

    CLI::App* encode_cmd =
        app.add_subcommand("encode", "encode a one-sentence-per-line corpus to fixed-size vectors");
    add_table_options(encode_cmd);
    encode_cmd->add_option("--corpus", corpus, "input corpus, one sentence per line")->required();
    encode_cmd->add_option("--filter", filter, "wavelet family (default coif2)");
    encode_cmd->add_option("--level", level, "wavelet levels L >= 0 (0 = plain DCT)");
    encode_cmd->add_option("--k", k_coeffs, "DCT coefficients to keep (1 or 2)");
    encode_cmd->add_option("--out", out_path, "output file ('-' for stdout)")->required();
    encode_cmd->add_option("--oov", oov_policy, "OOV policy: skip | zero (default skip)");
    encode_cmd->add_option("--empty", empty_policy,
                           "empty sentence policy: zero | error (default zero)");
    encode_cmd->add_option("--precision", precision, "decimal digits (default 6)")->check(CLI::Range(0, 100));

    CLI::App* wordsim_cmd =
        app.add_subcommand("eval-wordsim", "Spearman word-similarity evaluation");
    add_table_options(wordsim_cmd);
    wordsim_cmd->add_option("--dataset", dataset, "word1 word2 score per line")->required();

    CLI::App* cat_cmd =
        app.add_subcommand("eval-cat", "concept categorization by k-means purity");
    add_table_options(cat_cmd);
    cat_cmd->add_option("--dataset", dataset, "word<TAB>category per line")->required();
    cat_cmd->add_option("--seed", seed, "clustering seed (default 42)");

    CLI::App* knn_cmd = app.add_subcommand("knn", "nearest neighbours by cosine");
    add_table_options(knn_cmd);
    knn_cmd->add_option("--word", word, "query word")->required();
    knn_cmd->add_option("--k", k_neighbours, "neighbour count (default 5)");

    CLI::App* sts_cmd =
        app.add_subcommand("eval-sts", "sentence-pair Pearson evaluation (unsupervised)");
    add_table_options(sts_cmd);
    sts_cmd->add_option("--pairs", dataset, "sent1<TAB>sent2<TAB>score per line")->required();
    sts_cmd->add_option("--filter", filter, "wavelet family (default coif2)");
    sts_cmd->add_option("--level", level, "wavelet levels L >= 0 (0 = plain DCT)");
    sts_cmd->add_option("--k", k_coeffs, "DCT coefficients to keep (1 or 2)");
    sts_cmd->add_flag("--avg", use_avg, "use the word-averaging baseline encoder");

    CLI::App* dims_cmd =
        app.add_subcommand("dims", "print the output dimension of a path selection");
    dims_cmd->add_option("--dim", dim, "input dimension (default 300)");
    dims_cmd->add_option("--paths", paths_csv, "comma-separated packet paths")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    load_options.lowercase = lowercase;
    load_options.expected_dim = expected_dim;
    load_options.max_vocab = max_vocab;

    wavembed::SentenceEncoderConfig cfg;
    cfg.filter = filter;
    cfg.levels = level;
    cfg.coefficients = k_coeffs;
    cfg.lowercase = lowercase;
    cfg.oov_policy =
        oov_policy == "zero" ? wavembed::OovPolicy::ZeroVector : wavembed::OovPolicy::Skip;
    cfg.empty_policy = empty_policy == "error" ? wavembed::EmptySentencePolicy::Error
                                               : wavembed::EmptySentencePolicy::ZeroVector;

    try {
        if (filters_cmd->parsed()) return cmd_filters();
        if (compress_cmd->parsed()) {
            return cmd_compress(emb, filter, paths_csv, out_path, load_options, precision);
        }
        if (encode_cmd->parsed()) {
            if (oov_policy != "skip" && oov_policy != "zero") {
                throw std::invalid_argument("--oov must be 'skip' or 'zero'");
            }
            if (empty_policy != "zero" && empty_policy != "error") {
                throw std::invalid_argument("--empty must be 'zero' or 'error'");
            }
            return cmd_encode(emb, corpus, cfg, out_path, load_options, precision);
        }
        if (wordsim_cmd->parsed()) return cmd_eval_wordsim(emb, dataset, load_options);
        if (cat_cmd->parsed()) return cmd_eval_cat(emb, dataset, seed, load_options);
        if (knn_cmd->parsed()) return cmd_knn(emb, word, k_neighbours, load_options);
        if (sts_cmd->parsed()) return cmd_eval_sts(emb, dataset, use_avg, cfg, load_options);
        if (dims_cmd->parsed()) return cmd_dims(dim, paths_csv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
