#include "arb/network.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "arb/errors.hpp"
#include "arb/rng.hpp"

namespace arb {

namespace {

constexpr std::array<const char*, 16> kCodes = {
    "USD", "EUR", "GBP", "JPY", "CHF", "CAD", "AUD", "NZD",
    "SEK", "NOK", "DKK", "SGD", "HKD", "KRW", "CNY", "INR"};

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& tok, std::size_t line_no) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("expected a number, got '" + tok + "'", line_no);
  }
  return v;
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("expected an unsigned integer, got '" + tok + "'", line_no);
  }
  return v;
}

// Reads lines and tracks the 1-based line number for error reporting.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::string expect(const std::string& key) {
    std::string line;
    if (!next(line)) throw ParseError("unexpected end of file, wanted '" + key + "'", line_no_ + 1);
    if (line.rfind(key + " ", 0) != 0) {
      throw ParseError("expected '" + key + " ...', got '" + line + "'", line_no_);
    }
    return line.substr(key.size() + 1);
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

void ExchangeNetwork::validate() const {
  const std::size_t n = currencies.size();
  if (n < 2) throw ValidationError("currencies: need at least 2, have " + std::to_string(n));
  if (rates.rows() != n || rates.cols() != n) {
    throw ValidationError("rates: expected " + std::to_string(n) + "x" + std::to_string(n) +
                          ", have " + std::to_string(rates.rows()) + "x" +
                          std::to_string(rates.cols()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double r = rates(i, j);
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw ValidationError("rates[" + std::to_string(i) + "][" + std::to_string(j) +
                              "]: must be positive and finite, is " + format_double(r));
      }
    }
    if (rates(i, i) != 1.0) {
      throw ValidationError("rates[" + std::to_string(i) + "][" + std::to_string(i) +
                            "]: diagonal must equal 1, is " + format_double(rates(i, i)));
    }
  }
}

void GeneratorConfig::validate() const {
  if (n < 2) throw ConfigError("generator: n must be >= 2");
  if (!(value_lo > 0.0) || !(value_hi >= value_lo) || !std::isfinite(value_hi)) {
    throw ConfigError("generator: need 0 < value_lo <= value_hi, got [" +
                      format_double(value_lo) + ", " + format_double(value_hi) + "]");
  }
  if (!(noise >= 0.0) || !std::isfinite(noise)) {
    throw ConfigError("generator: noise must be finite and >= 0");
  }
}

std::string currency_code(std::size_t i) {
  if (i < kCodes.size()) return kCodes[i];
  return "C" + std::to_string(i);
}

ExchangeNetwork generate_network(const GeneratorConfig& config, std::size_t index) {
  config.validate();
  const std::size_t n = config.n;

  SplitMix64 rng = SplitMix64::derive(config.seed, index);

  std::vector<double> value(n);
  for (std::size_t i = 0; i < n; ++i) {
    value[i] = rng.uniform(config.value_lo, config.value_hi);
  }

  ExchangeNetwork net;
  net.currencies.reserve(n);
  for (std::size_t i = 0; i < n; ++i) net.currencies.push_back(currency_code(i));
  net.rates = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        net.rates(i, j) = 1.0;
        continue;
      }
      const double jitter = rng.uniform(-config.noise, config.noise);
      net.rates(i, j) = value[i] / value[j] * std::exp(jitter);
    }
  }
  return net;
}

NetworkDataset generate_dataset(const GeneratorConfig& config, ExecPolicy policy) {
  config.validate();
  NetworkDataset ds;
  ds.config = config;
  ds.provenance = {config.seed, kGeneratorVersion};
  ds.networks.resize(config.count);
  parallel_for(config.count, policy, [&](std::size_t k) {
    ds.networks[k] = generate_network(config, k);
  });
  return ds;
}

double triangle_discrepancy(const ExchangeNetwork& net) {
  const std::size_t n = net.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double prod = net.rates(i, j) * net.rates(j, k) * net.rates(k, i);
        worst = std::max(worst, std::abs(std::log(prod)));
      }
    }
  }
  return worst;
}

void save_dataset(const NetworkDataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");

  out << "arbnet-dataset v1\n";
  out << "generator " << ds.provenance.generator << "\n";
  out << "n " << ds.config.n << "\n";
  out << "count " << ds.networks.size() << "\n";
  out << "seed " << ds.config.seed << "\n";
  out << "value-range " << format_double(ds.config.value_lo) << " "
      << format_double(ds.config.value_hi) << "\n";
  out << "noise " << format_double(ds.config.noise) << "\n";

  for (std::size_t k = 0; k < ds.networks.size(); ++k) {
    const ExchangeNetwork& net = ds.networks[k];
    out << "network " << k << "\n";
    out << "currencies";
    for (const auto& c : net.currencies) out << " " << c;
    out << "\n";
    for (std::size_t i = 0; i < net.size(); ++i) {
      out << "row";
      for (std::size_t j = 0; j < net.size(); ++j) {
        out << " " << format_double(net.rates(i, j));
      }
      out << "\n";
    }
  }
  if (!out.good()) throw std::runtime_error("write to '" + path + "' failed");
}

NetworkDataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  LineReader rd(in);

  std::string line;
  if (!rd.next(line)) throw ParseError("empty file", 1);
  if (line != "arbnet-dataset v1") {
    throw ParseError("bad magic, expected 'arbnet-dataset v1'", rd.line_no());
  }

  NetworkDataset ds;
  ds.provenance.generator = rd.expect("generator");
  ds.config.n = static_cast<std::size_t>(parse_u64(rd.expect("n"), rd.line_no()));
  ds.config.count = static_cast<std::size_t>(parse_u64(rd.expect("count"), rd.line_no()));
  ds.config.seed = parse_u64(rd.expect("seed"), rd.line_no());
  ds.provenance.seed = ds.config.seed;
  {
    auto toks = split_ws(rd.expect("value-range"));
    if (toks.size() != 2) throw ParseError("value-range needs two numbers", rd.line_no());
    ds.config.value_lo = parse_double(toks[0], rd.line_no());
    ds.config.value_hi = parse_double(toks[1], rd.line_no());
  }
  ds.config.noise = parse_double(rd.expect("noise"), rd.line_no());

  const std::size_t n = ds.config.n;
  ds.networks.reserve(ds.config.count);
  for (std::size_t k = 0; k < ds.config.count; ++k) {
    auto idx_str = rd.expect("network");
    if (parse_u64(idx_str, rd.line_no()) != k) {
      throw ParseError("expected network " + std::to_string(k), rd.line_no());
    }
    ExchangeNetwork net;
    auto codes = split_ws(rd.expect("currencies"));
    if (codes.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " currency codes, got " +
                       std::to_string(codes.size()), rd.line_no());
    }
    net.currencies = std::move(codes);
    net.rates = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto vals = split_ws(rd.expect("row"));
      if (vals.size() != n) {
        throw ParseError("expected " + std::to_string(n) + " rates in row, got " +
                         std::to_string(vals.size()), rd.line_no());
      }
      for (std::size_t j = 0; j < n; ++j) {
        net.rates(i, j) = parse_double(vals[j], rd.line_no());
      }
    }
    net.validate();
    ds.networks.push_back(std::move(net));
  }
  if (rd.next(line) && !line.empty()) {
    throw ParseError("trailing content after last network", rd.line_no());
  }
  return ds;
}

}  // namespace arb
