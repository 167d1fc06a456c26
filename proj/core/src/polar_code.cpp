#include "polarsn/polar_code.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "polarsn/nr_sequence.hpp"

namespace polar {

namespace {

// Two-segment approximation of phi(x) = 1 - E[tanh(L/2)] for L ~ N(x, 2x).
double phi(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 10.0) return std::exp(0.0218 - 0.4527 * std::pow(x, 0.86));
  return std::sqrt(M_PI / x) * std::exp(-x / 4.0) * (1.0 - 10.0 / (7.0 * x));
}

double phi_inv(double y) {
  if (y >= 1.0) return 0.0;
  const double y10 = phi(10.0);
  if (y > y10)
    return std::pow((0.0218 - std::log(y)) / 0.4527, 1.0 / 0.86);
  // invert the large-x branch by bisection; phi is strictly decreasing
  double lo = 10.0, hi = 10.0;
  while (phi(hi) > y) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (phi(mid) > y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

PolarCode from_info_set(int n, std::vector<int> info, Construction method,
                        double design_snr_db) {
  PolarCode code;
  code.n = n;
  code.N = 1 << n;
  code.K = static_cast<int>(info.size());
  code.construction = method;
  code.design_snr_db = design_snr_db;
  std::sort(info.begin(), info.end());
  code.info_set = std::move(info);
  code.indicator.assign(code.N, 0);
  for (int i : code.info_set) code.indicator[i] = 1;
  return code;
}

} // namespace

std::vector<double> ga_reliability(int n, double design_snr_db, double rate) {
  if (n < 0 || n > 20) throw std::invalid_argument("ga_reliability: bad n");
  if (!(rate > 0.0) || rate > 1.0)
    throw std::invalid_argument("ga_reliability: rate must be in (0, 1]");
  const double mean0 = 4.0 * rate * std::pow(10.0, design_snr_db / 10.0);
  std::vector<double> m{mean0};
  for (int level = 0; level < n; ++level) {
    std::vector<double> next(m.size() * 2);
    for (std::size_t k = 0; k < m.size(); ++k) {
      const double p = phi(m[k]);
      next[2 * k] = phi_inv(1.0 - (1.0 - p) * (1.0 - p));
      next[2 * k + 1] = 2.0 * m[k];
    }
    m = std::move(next);
  }
  return m;
}

PolarCode construct(int n, int K, Construction method, double design_snr_db) {
  if (n < 0) throw std::invalid_argument("construct: n must be non-negative");
  const long N = 1L << n;
  if (K < 0 || K > N) throw std::invalid_argument("construct: K out of range");

  std::vector<int> info;
  info.reserve(K);
  if (method == Construction::FiveG) {
    if (n > 10)
      throw std::invalid_argument("construct: 5G sequence covers n <= 10 only");
    const std::vector<int> seq = nr_reliability_sequence(n);
    info.assign(seq.end() - K, seq.end());
  } else {
    const std::vector<double> rel =
        ga_reliability(n, design_snr_db, K > 0 ? double(K) / N : 0.5);
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (rel[a] != rel[b]) return rel[a] > rel[b];
      return a < b; // deterministic tie-break: lower index wins
    });
    info.assign(order.begin(), order.begin() + K);
  }
  return from_info_set(n, std::move(info), method, design_snr_db);
}

PolarCode construct_frozen(int n, const std::vector<int>& frozen_set) {
  if (n < 0) throw std::invalid_argument("construct_frozen: bad n");
  const long N = 1L << n;
  std::vector<std::uint8_t> frozen(N, 0);
  for (int f : frozen_set) {
    if (f < 0 || f >= N)
      throw std::invalid_argument("construct_frozen: index out of range");
    if (frozen[f])
      throw std::invalid_argument("construct_frozen: duplicate index");
    frozen[f] = 1;
  }
  std::vector<int> info;
  info.reserve(N - frozen_set.size());
  for (int i = 0; i < N; ++i)
    if (!frozen[i]) info.push_back(i);
  return from_info_set(n, std::move(info), Construction::FiveG, 0.0);
}

void polar_transform(std::span<std::uint8_t> bits) {
  const std::size_t N = bits.size();
  if (N == 0 || (N & (N - 1)) != 0)
    throw std::invalid_argument("polar_transform: size must be a power of two");
  for (std::size_t len = 1; len < N; len <<= 1)
    for (std::size_t i = 0; i < N; i += 2 * len)
      for (std::size_t j = 0; j < len; ++j) bits[i + j] ^= bits[i + len + j];
}

std::vector<std::uint8_t> encode(const PolarCode& code,
                                 std::span<const std::uint8_t> msg) {
  if (static_cast<int>(msg.size()) != code.K)
    throw std::invalid_argument("encode: message length != K");
  std::vector<std::uint8_t> u(code.N, 0);
  for (int k = 0; k < code.K; ++k) u[code.info_set[k]] = msg[k] & 1;
  polar_transform(u);
  return u;
}

// ---- descriptor files ------------------------------------------------------

std::string descriptor_to_string(const PolarCode& code,
                                 const std::optional<std::vector<int>>& frozen_override) {
  std::ostringstream os;
  os << "n=" << code.n << "\n";
  os << "k=" << code.K << "\n";
  os << "construction="
     << (code.construction == Construction::FiveG ? "5g" : "ga") << "\n";
  if (code.construction == Construction::GaussianApprox)
    os << "design_snr_db=" << code.design_snr_db << "\n";
  if (frozen_override) {
    os << "frozen_override=";
    for (std::size_t i = 0; i < frozen_override->size(); ++i)
      os << (i ? "," : "") << (*frozen_override)[i];
    os << "\n";
  }
  return os.str();
}

PolarCode parse_descriptor(std::istream& in) {
  int n = -1, k = -1;
  std::string construction = "5g";
  double design_snr_db = 0.0;
  bool have_snr = false;
  std::optional<std::vector<int>> frozen_override;

  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const char* ws = " \t\r\n";
      s.erase(0, s.find_first_not_of(ws));
      const auto last = s.find_last_not_of(ws);
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "n")
        n = std::stoi(val);
      else if (key == "k")
        k = std::stoi(val);
      else if (key == "construction")
        construction = val;
      else if (key == "design_snr_db") {
        design_snr_db = std::stod(val);
        have_snr = true;
      } else if (key == "frozen_override") {
        std::vector<int> fs;
        std::stringstream ss(val);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!trim(tok).empty()) fs.push_back(std::stoi(trim(tok)));
        frozen_override = std::move(fs);
      } else {
        throw std::invalid_argument("descriptor: unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("descriptor: bad value for key '" + key + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("descriptor: missing n");

  if (frozen_override) {
    PolarCode code = construct_frozen(n, *frozen_override);
    if (k >= 0 && k != code.K)
      throw std::invalid_argument(
          "descriptor: k inconsistent with frozen_override");
    return code;
  }
  if (k < 0) throw std::invalid_argument("descriptor: missing k");
  if (construction == "5g")
    return construct(n, k, Construction::FiveG);
  if (construction == "ga") {
    if (!have_snr)
      throw std::invalid_argument("descriptor: ga requires design_snr_db");
    return construct(n, k, Construction::GaussianApprox, design_snr_db);
  }
  throw std::invalid_argument("descriptor: construction must be 5g or ga");
}

PolarCode load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open descriptor: " + path);
  return parse_descriptor(in);
}

void save_descriptor(const PolarCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write descriptor: " + path);
  out << descriptor_to_string(code);
}

} // namespace polar
