#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arb/matrix.hpp"
#include "arb/parallel.hpp"

namespace arb {

// Generator identity string written into dataset files. Bump only when the
// output of generate_network changes for some (seed, index).
inline constexpr const char* kGeneratorVersion = "latent-splitmix64/1";

// n currencies plus an n x n positive rate matrix. rates(i, j) is the amount
// of currency j received per unit of currency i sold. Diagonal is fixed at 1
// and never traded.
struct ExchangeNetwork {
  std::vector<std::string> currencies;
  Matrix rates;

  std::size_t size() const { return currencies.size(); }

  // Throws ValidationError naming the offending field.
  void validate() const;
};

// Synthetic model: per currency a latent value v_i ~ Uniform(lo, hi); each
// off-diagonal rate is (v_i / v_j) * exp(u_ij) with u_ij ~ Uniform(-noise,
// +noise) drawn independently per ordered pair. noise = 0 gives an exactly
// consistent (arbitrage-free) market.
struct GeneratorConfig {
  std::size_t n = 4;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  double value_lo = 0.5;
  double value_hi = 2.0;
  double noise = 0.05;

  void validate() const;  // throws ConfigError
};

struct DatasetProvenance {
  std::uint64_t seed = 0;
  std::string generator = kGeneratorVersion;
};

struct NetworkDataset {
  GeneratorConfig config;
  std::vector<ExchangeNetwork> networks;
  DatasetProvenance provenance;
};

// Currency code for column/row index i (USD, EUR, ... then C16, C17, ...).
std::string currency_code(std::size_t i);

// Deterministic in (config.seed, index); independent random stream per index.
// Draw order: v_0..v_{n-1}, then u_ij row-major skipping the diagonal.
ExchangeNetwork generate_network(const GeneratorConfig& config, std::size_t index);

NetworkDataset generate_dataset(const GeneratorConfig& config,
                                ExecPolicy policy = ExecPolicy::Parallel);

// max over all ordered triples (i,j,k) of |ln(r_ij * r_jk * r_ki)|. Zero iff
// log-rates form an exact potential, i.e. no cycle of any length is
// profitable. Repeated indices are allowed, which folds 2-cycles in.
double triangle_discrepancy(const ExchangeNetwork& net);

// Plain-text dataset format, one value per line in the header, then one block
// per network. Doubles are written in shortest round-trip form, so
// load(save(ds)) reproduces every rate bit for bit.
void save_dataset(const NetworkDataset& ds, const std::string& path);
NetworkDataset load_dataset(const std::string& path);

}  // namespace arb
