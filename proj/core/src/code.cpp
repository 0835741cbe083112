#include "polar/code.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polar {

std::string to_string(ConstructionMethod m) {
  return m == ConstructionMethod::GaussianApprox ? "gaussian_approx" : "bhattacharyya_bec";
}

ConstructionMethod construction_from_string(const std::string& s) {
  if (s == "gaussian_approx" || s == "ga") return ConstructionMethod::GaussianApprox;
  if (s == "bhattacharyya_bec" || s == "bec") return ConstructionMethod::BhattacharyyaBec;
  throw std::invalid_argument("unknown construction method '" + s + "'");
}

std::vector<double> bec_bhattacharyya(int block_length, double eps) {
  const int n = log2_exact(static_cast<std::size_t>(block_length));
  std::vector<double> z(static_cast<std::size_t>(block_length), 0.0);
  z[0] = eps;
  for (int level = 0; level < n; ++level) {
    const int half = 1 << level;
    for (int i = half - 1; i >= 0; --i) {
      const double zi = z[static_cast<std::size_t>(i)];
      z[static_cast<std::size_t>(2 * i)] = 2.0 * zi - zi * zi;
      z[static_cast<std::size_t>(2 * i + 1)] = zi * zi;
    }
  }
  return z;
}

namespace {

// Two-piece approximation of phi(x) = 1 - E[tanh(u/2)], u ~ N(x, 2x),
// evaluated in log domain for stability at large means.
double ln_phi(double m) {
  if (m <= 0.0) return 0.0;
  if (m < 10.0) return 0.0218 - 0.4527 * std::pow(m, 0.86);
  return 0.5 * std::log(M_PI / m) - 0.25 * m + std::log1p(-10.0 / (7.0 * m));
}

// Inverse of ln_phi by bisection; ln_phi is strictly decreasing on (0, inf).
double inv_ln_phi(double target) {
  double lo = 1e-12, hi = 1e12;
  if (target >= ln_phi(lo)) return lo;
  if (target <= ln_phi(hi)) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ln_phi(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Check-node update: m_out = phi^-1(1 - (1 - phi(m))^2).
double ga_check(double m) {
  const double lp = ln_phi(m);
  double ln_target;
  if (lp < -30.0) {
    ln_target = M_LN2 + lp;  // 1 - (1-p)^2 = 2p - p^2 ~ 2p for tiny p
  } else {
    const double p = std::exp(lp);
    ln_target = std::log(p * (2.0 - p));
  }
  return inv_ln_phi(ln_target);
}

}  // namespace

std::vector<double> awgn_ga_means(int block_length, double design_snr_db, double rate) {
  const int n = log2_exact(static_cast<std::size_t>(block_length));
  if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("rate must be in (0,1]");
  const double ebn0 = std::pow(10.0, design_snr_db / 10.0);
  const double sigma_sq = 1.0 / (2.0 * rate * ebn0);
  std::vector<double> m(static_cast<std::size_t>(block_length), 0.0);
  m[0] = 2.0 / sigma_sq;
  for (int level = 0; level < n; ++level) {
    const int half = 1 << level;
    for (int i = half - 1; i >= 0; --i) {
      const double mi = m[static_cast<std::size_t>(i)];
      m[static_cast<std::size_t>(2 * i)] = ga_check(mi);
      m[static_cast<std::size_t>(2 * i + 1)] = 2.0 * mi;
    }
  }
  return m;
}

namespace {

// Freeze the N-k least reliable indices. `reliability` is higher-is-better.
// On ties the smaller index freezes first, so the information set stays an
// upper set of the bitwise-domination order.
BitVec freeze_least_reliable(const std::vector<double>& reliability, int info_length) {
  const int N = static_cast<int>(reliability.size());
  if (info_length <= 0 || info_length > N) {
    throw std::invalid_argument("info length must be in [1, N]");
  }
  std::vector<int> order(reliability.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (reliability[static_cast<std::size_t>(a)] != reliability[static_cast<std::size_t>(b)])
      return reliability[static_cast<std::size_t>(a)] < reliability[static_cast<std::size_t>(b)];
    return a < b;
  });
  BitVec frozen(reliability.size(), 0);
  for (int i = 0; i < N - info_length; ++i) {
    frozen[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
  }
  return frozen;
}

}  // namespace

BitVec construct_frozen_set(int block_length, int info_length, double design_snr_db,
                            ConstructionMethod method) {
  if (method == ConstructionMethod::BhattacharyyaBec) {
    // BEC surrogate: erasure probability = Bhattacharyya parameter of the
    // BPSK/AWGN channel at the design point.
    const double rate = static_cast<double>(info_length) / block_length;
    const double eps = std::exp(-rate * std::pow(10.0, design_snr_db / 10.0));
    return construct_frozen_set_bec(block_length, info_length, eps);
  }
  const double rate = static_cast<double>(info_length) / block_length;
  const std::vector<double> means = awgn_ga_means(block_length, design_snr_db, rate);
  return freeze_least_reliable(means, info_length);
}

BitVec construct_frozen_set_bec(int block_length, int info_length, double eps) {
  std::vector<double> z = bec_bhattacharyya(block_length, eps);
  for (double& v : z) v = -v;  // smaller z = more reliable
  return freeze_least_reliable(z, info_length);
}

PolarCode PolarCode::construct(int N, int k, double design_snr_db, int crc_len,
                               ConstructionMethod method) {
  PolarCode code;
  code.n = log2_exact(static_cast<std::size_t>(N));
  code.N = N;
  code.k = k;
  code.crc_len = crc_len;
  code.design_snr_db = design_snr_db;
  code.method = method;
  code.frozen = construct_frozen_set(N, k, design_snr_db, method);
  code.validate();
  return code;
}

PolarCode PolarCode::from_mask(BitVec frozen_mask, int crc_len) {
  PolarCode code;
  code.N = static_cast<int>(frozen_mask.size());
  code.n = log2_exact(frozen_mask.size());
  code.k = code.N - static_cast<int>(std::count(frozen_mask.begin(), frozen_mask.end(), 1));
  code.crc_len = crc_len;
  code.frozen = std::move(frozen_mask);
  code.validate();
  return code;
}

void PolarCode::validate() const {
  if (N != (1 << n)) throw std::invalid_argument("N must equal 2^n");
  if (k <= 0 || k > N) throw std::invalid_argument("k must be in [1, N]");
  if (static_cast<int>(frozen.size()) != N) throw std::invalid_argument("frozen mask size != N");
  const int frozen_count = static_cast<int>(std::count(frozen.begin(), frozen.end(), 1));
  if (frozen_count != N - k) throw std::invalid_argument("frozen mask popcount != N - k");
  if (crc_len < 0 || (crc_len > 0 && crc_len >= k)) {
    throw std::invalid_argument("crc_len must satisfy 0 <= crc_len < k");
  }
}

std::vector<int> PolarCode::unfrozen_positions() const {
  std::vector<int> pos;
  pos.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < N; ++i) {
    if (!frozen[static_cast<std::size_t>(i)]) pos.push_back(i);
  }
  return pos;
}

BitVec PolarCode::extract_info(const BitVec& codeword) const {
  if (static_cast<int>(codeword.size()) != N) {
    throw std::invalid_argument("codeword length != N");
  }
  BitVec info;
  info.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < N; ++i) {
    if (!frozen[static_cast<std::size_t>(i)]) info.push_back(codeword[static_cast<std::size_t>(i)]);
  }
  return info;
}

BitVec PolarCode::encode_systematic(const BitVec& info) const {
  if (static_cast<int>(info.size()) != k) {
    throw std::invalid_argument("info length != k (append the CRC first if configured)");
  }
  BitVec word(static_cast<std::size_t>(N), 0);
  int j = 0;
  for (int i = 0; i < N; ++i) {
    if (!frozen[static_cast<std::size_t>(i)]) word[static_cast<std::size_t>(i)] = info[static_cast<std::size_t>(j++)];
  }
  polar_transform_inplace(word);
  for (int i = 0; i < N; ++i) {
    if (frozen[static_cast<std::size_t>(i)]) word[static_cast<std::size_t>(i)] = 0;
  }
  polar_transform_inplace(word);
  return word;
}

std::string frozen_mask_to_json(const PolarCode& code) {
  nlohmann::json j;
  j["N"] = code.N;
  j["k"] = code.k;
  j["design_snr_db"] = code.design_snr_db;
  j["method"] = to_string(code.method);
  nlohmann::json positions = nlohmann::json::array();
  for (int i = 0; i < code.N; ++i) {
    if (code.frozen[static_cast<std::size_t>(i)]) positions.push_back(i);
  }
  j["frozen_positions"] = std::move(positions);
  return j.dump(2);
}

PolarCode frozen_mask_from_json(const std::string& text, int crc_len) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int N = j.at("N").get<int>();
  const int k = j.at("k").get<int>();
  BitVec frozen(static_cast<std::size_t>(N), 0);
  for (const auto& p : j.at("frozen_positions")) {
    frozen.at(p.get<std::size_t>()) = 1;
  }
  PolarCode code = PolarCode::from_mask(std::move(frozen), crc_len);
  if (code.k != k) throw std::invalid_argument("frozen mask fixture inconsistent with k");
  code.design_snr_db = j.at("design_snr_db").get<double>();
  code.method = construction_from_string(j.at("method").get<std::string>());
  return code;
}

void save_frozen_json(const PolarCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << frozen_mask_to_json(code) << '\n';
}

PolarCode load_frozen_json(const std::string& path, int crc_len) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return frozen_mask_from_json(buf.str(), crc_len);
}

}  // namespace polar
