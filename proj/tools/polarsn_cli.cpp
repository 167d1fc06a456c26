// Command line front end: construct / classify / encode / latency / fer-sim.
// Machine readable CSV goes to stdout (or --out), human notes to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polarsn/channel.hpp"
#include "polarsn/fast_decoder.hpp"
#include "polarsn/harness.hpp"
#include "polarsn/latency_model.hpp"
#include "polarsn/node_classifier.hpp"
#include "polarsn/polar_code.hpp"
#include "polarsn/sc_decoder.hpp"

namespace {

struct CodeArgs {
  std::string code_file;
  int n = -1;
  int k = -1;
  std::string construction = "5g";
  double design_snr_db = 0.0;
  std::string frozen_override; // comma separated 0-based indices
};

void add_code_options(CLI::App* cmd, CodeArgs& args) {
  cmd->add_option("--code", args.code_file, "code descriptor file (key=value)");
  cmd->add_option("--n", args.n, "log2 of the code length");
  cmd->add_option("--k", args.k, "information length K");
  cmd->add_option("--construction", args.construction, "5g or ga")
      ->check(CLI::IsMember({"5g", "ga"}));
  cmd->add_option("--design-snr", args.design_snr_db, "GA design Eb/N0 in dB");
  cmd->add_option("--frozen-override", args.frozen_override,
                  "explicit frozen set, comma separated 0-based indices");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

polar::PolarCode build_code(const CodeArgs& args) {
  if (!args.code_file.empty()) return polar::load_descriptor(args.code_file);
  if (!args.frozen_override.empty()) {
    if (args.n < 0) throw std::invalid_argument("--frozen-override needs --n");
    return polar::construct_frozen(args.n, parse_int_list(args.frozen_override));
  }
  if (args.n < 0 || args.k < 0)
    throw std::invalid_argument("need --code or both --n and --k");
  const auto method = args.construction == "ga" ? polar::Construction::GaussianApprox
                                                : polar::Construction::FiveG;
  return polar::construct(args.n, args.k, method, args.design_snr_db);
}

polar::FeatureSet parse_features(const std::string& name) {
  if (name == "sc" || name == "plain") return polar::FeatureSet::PlainSc;
  if (name == "fssc") return polar::FeatureSet::Fssc;
  if (name == "snfsc") return polar::FeatureSet::SnFsc;
  throw std::invalid_argument("unknown decoder/feature set: " + name);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  return out;
}

// Flat key=value simulation config; unknown keys are an error so typos fail
// loudly.  Every key has a CLI flag of the same meaning that wins over it.
struct FerArgs {
  CodeArgs code;
  std::string config_file;
  std::string grid_text;
  std::string decoders_text;
  long max_frames = -1;
  long min_errors = -1;
  std::uint64_t seed = 1;
  bool seed_set = false;
  int threads = -1;
};

void apply_config_file(FerArgs& a) {
  std::ifstream in(a.config_file);
  if (!in) throw std::invalid_argument("cannot open config " + a.config_file);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "n") { if (a.code.n < 0) a.code.n = std::stoi(val); }
    else if (key == "k") { if (a.code.k < 0) a.code.k = std::stoi(val); }
    else if (key == "construction") { a.code.construction = val; }
    else if (key == "design_snr_db") { a.code.design_snr_db = std::stod(val); }
    else if (key == "code") { if (a.code.code_file.empty()) a.code.code_file = val; }
    else if (key == "ebn0_grid") { if (a.grid_text.empty()) a.grid_text = val; }
    else if (key == "decoders") { if (a.decoders_text.empty()) a.decoders_text = val; }
    else if (key == "max_frames") { if (a.max_frames < 0) a.max_frames = std::stol(val); }
    else if (key == "min_frame_errors") { if (a.min_errors < 0) a.min_errors = std::stol(val); }
    else if (key == "seed") { if (!a.seed_set) { a.seed = std::stoull(val); a.seed_set = true; } }
    else if (key == "threads") { if (a.threads < 0) a.threads = std::stoi(val); }
    else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key " + key);
  }
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  return file;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar code toolkit: construction, pruned-tree decoding, latency and FER simulation"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write CSV here instead of stdout")->configurable(false);

  // construct --------------------------------------------------------------
  auto* c_construct = app.add_subcommand("construct", "build a code and print its descriptor");
  CodeArgs construct_args;
  add_code_options(c_construct, construct_args);

  // classify ---------------------------------------------------------------
  auto* c_classify = app.add_subcommand("classify", "print the pruned decode plan and node histogram");
  CodeArgs classify_args;
  std::string classify_features = "snfsc";
  add_code_options(c_classify, classify_args);
  c_classify->add_option("--features", classify_features, "sc, fssc or snfsc");

  // encode -----------------------------------------------------------------
  auto* c_encode = app.add_subcommand("encode", "encode a message to a codeword");
  CodeArgs encode_args;
  std::string message_bits;
  std::uint64_t encode_seed = 1;
  add_code_options(c_encode, encode_args);
  c_encode->add_option("--bits", message_bits, "message as a 01 string of length K (default: random)");
  c_encode->add_option("--seed", encode_seed, "seed for the random message");

  // latency ----------------------------------------------------------------
  auto* c_latency = app.add_subcommand("latency", "time-step bounds, optionally mean steps at Eb/N0 points");
  CodeArgs latency_args;
  std::string latency_features = "snfsc";
  std::string latency_grid;
  long latency_frames = 100000;
  std::uint64_t latency_seed = 1;
  add_code_options(c_latency, latency_args);
  c_latency->add_option("--features", latency_features, "sc, fssc or snfsc");
  c_latency->add_option("--ebn0", latency_grid, "comma separated Eb/N0 grid for mean steps");
  c_latency->add_option("--frames", latency_frames, "frames per grid point");
  c_latency->add_option("--seed", latency_seed, "simulation seed");

  // fer-sim ----------------------------------------------------------------
  auto* c_fer = app.add_subcommand("fer-sim", "paired Monte-Carlo FER and latency simulation");
  FerArgs fer;
  add_code_options(c_fer, fer.code);
  c_fer->add_option("--config", fer.config_file, "key=value config file; flags override");
  c_fer->add_option("--ebn0", fer.grid_text, "comma separated Eb/N0 grid in dB");
  c_fer->add_option("--decoders", fer.decoders_text, "comma separated: sc,fssc,snfsc");
  c_fer->add_option("--max-frames", fer.max_frames, "frame cap per grid point");
  c_fer->add_option("--min-errors", fer.min_errors, "stop once every decoder has this many frame errors");
  auto* seed_opt = c_fer->add_option("--seed", fer.seed, "base RNG seed");
  c_fer->add_option("--threads", fer.threads, "worker threads (0 = auto)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream out_file;
    std::ostream& out = open_out(out_file, out_path);

    if (*c_construct) {
      const auto code = build_code(construct_args);
      std::optional<std::vector<int>> frozen;
      if (!construct_args.frozen_override.empty())
        frozen = parse_int_list(construct_args.frozen_override);
      out << polar::descriptor_to_string(code, frozen);
      std::cerr << "P(" << code.N << "," << code.K << ") rate " << code.rate() << "\n";
    } else if (*c_classify) {
      const auto code = build_code(classify_args);
      const auto plan = polar::classify(code, parse_features(classify_features));
      std::cerr << polar::plan_to_string(plan);
      out << "length,count\n";
      for (const auto& [len, count] : polar::count_sr1spc(plan))
        out << len << "," << count << "\n";
    } else if (*c_encode) {
      const auto code = build_code(encode_args);
      std::vector<std::uint8_t> msg;
      if (!message_bits.empty()) {
        if ((int)message_bits.size() != code.K)
          throw std::invalid_argument("--bits length must equal K");
        for (char ch : message_bits) {
          if (ch != '0' && ch != '1') throw std::invalid_argument("--bits must be a 01 string");
          msg.push_back(ch == '1');
        }
      } else {
        polar::FrameRng rng(encode_seed, 0);
        msg.resize(code.K);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng.next_bit());
      }
      const auto cw = polar::encode(code, msg);
      out << "message,codeword\n";
      for (auto b : msg) out << int(b);
      out << ",";
      for (auto b : cw) out << int(b);
      out << "\n";
    } else if (*c_latency) {
      const auto code = build_code(latency_args);
      const auto features = parse_features(latency_features);
      const auto plan = polar::classify(code, features);
      const auto bounds = features == polar::FeatureSet::PlainSc
                              ? polar::LatencyBounds{polar::plain_sc_steps(code.n),
                                                     polar::plain_sc_steps(code.n)}
                              : polar::code_bounds(plan);
      out << "n,k,feature_set,ebn0_db,mean_steps,lb,ub\n";
      if (latency_grid.empty()) {
        out << code.N << "," << code.K << "," << polar::to_string(features)
            << ",,," << bounds.lb << "," << bounds.ub << "\n";
      } else {
        polar::SimConfig cfg;
        cfg.seed = latency_seed;
        cfg.max_frames = latency_frames;
        cfg.min_frame_errors = 0; // latency wants the full frame count
        for (double ebn0 : parse_grid(latency_grid)) {
          cfg.ebn0_db = ebn0;
          const auto results = polar::run_fer(code, {features}, cfg);
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.4f", results[0].mean_steps());
          out << code.N << "," << code.K << "," << polar::to_string(features) << ","
              << ebn0 << "," << buf << "," << bounds.lb << "," << bounds.ub << "\n";
        }
      }
    } else if (*c_fer) {
      if (!fer.config_file.empty()) {
        fer.seed_set = seed_opt->count() > 0;
        apply_config_file(fer);
      }
      const auto code = build_code(fer.code);
      if (code.K == 0) throw std::invalid_argument("fer-sim needs a code with K >= 1");
      std::vector<polar::FeatureSet> decoders;
      std::stringstream ss(fer.decoders_text.empty() ? "sc,snfsc" : fer.decoders_text);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) decoders.push_back(parse_features(item));
      polar::SimConfig cfg;
      cfg.seed = fer.seed;
      if (fer.max_frames > 0) cfg.max_frames = fer.max_frames;
      if (fer.min_errors >= 0) cfg.min_frame_errors = fer.min_errors;
      if (fer.threads >= 0) cfg.threads = fer.threads;
      const auto grid = parse_grid(fer.grid_text.empty() ? "1.0,2.0,3.0" : fer.grid_text);
      if (grid.empty()) throw std::invalid_argument("empty Eb/N0 grid");
      out << polar::csv_header() << "\n";
      for (double ebn0 : grid) {
        cfg.ebn0_db = ebn0;
        const auto results = polar::run_fer(code, decoders, cfg);
        for (const auto& r : results) {
          out << polar::csv_row(code, ebn0, r) << "\n";
          std::cerr << polar::to_string(r.decoder) << " @ " << ebn0 << " dB: fer "
                    << r.fer() << " (" << r.frame_errors << "/" << r.frames
                    << "), mean steps " << r.mean_steps() << "\n";
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
