#include "shrq/cdf_tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "shrq/parallel.hpp"

namespace shrq {

namespace {

constexpr std::size_t kChunkSize = 1u << 14;
constexpr char kMagic[8] = {'S', 'H', 'R', 'Q', 'C', 'D', 'F', '1'};

}  // namespace

CdfTables::CdfTables(Protocol protocol, const SystemParams& params,
                     std::size_t sample_count, std::uint64_t seed,
                     std::vector<std::vector<double>> main_columns,
                     std::vector<std::vector<double>> eve_columns)
    : protocol_(protocol),
      max_tx_(params.max_tx),
      sample_count_(sample_count),
      seed_(seed),
      mean_main_(params.main.mean_snr_linear),
      mean_eve_(params.eve.mean_snr_linear),
      main_(std::move(main_columns)),
      eve_(std::move(eve_columns)) {
  validate(params);
  if (main_.size() != static_cast<std::size_t>(max_tx_) ||
      eve_.size() != static_cast<std::size_t>(max_tx_))
    throw std::invalid_argument("CdfTables: need one column per transmission");
  for (const auto& cols : {std::cref(main_), std::cref(eve_)})
    for (const auto& col : cols.get())
      if (col.size() != sample_count_)
        throw std::invalid_argument("CdfTables: column length != sample_count");
}

const std::vector<double>& CdfTables::column(Link link, int m) const {
  if (m < 1 || m > max_tx_)
    throw std::out_of_range("CdfTables::column: m out of [1, max_tx]");
  return (link == Link::Main ? main_ : eve_)[static_cast<std::size_t>(m - 1)];
}

CdfTables build_cdf_tables(const SystemParams& params, Protocol protocol,
                           std::size_t sample_count, std::uint64_t seed,
                           std::size_t max_bytes) {
  validate(params);
  if (sample_count < 1)
    throw std::invalid_argument("build_cdf_tables: sample_count must be >= 1");
  const std::size_t m_count = static_cast<std::size_t>(params.max_tx);
  if (2 * m_count * sample_count > max_bytes / sizeof(double))
    throw std::length_error("build_cdf_tables: table exceeds memory budget");

  std::vector<std::vector<double>> main_cols(m_count),
      eve_cols(m_count);
  for (std::size_t m = 0; m < m_count; ++m) {
    main_cols[m].resize(sample_count);
    eve_cols[m].resize(sample_count);
  }

  const double mean_main = params.main.mean_snr_linear;
  const double mean_eve = params.eve.mean_snr_linear;
  const std::size_t chunk_count = (sample_count + kChunkSize - 1) / kChunkSize;

  parallel_chunks(chunk_count, [&](std::size_t chunk) {
    RngStream stream = RngStream::substream(seed, chunk);
    const std::size_t begin = chunk * kChunkSize;
    const std::size_t end = std::min(begin + kChunkSize, sample_count);
    for (std::size_t row = begin; row < end; ++row) {
      double acc_main = 0.0, acc_eve = 0.0;
      for (std::size_t m = 0; m < m_count; ++m) {
        const double snr_main = stream.exponential(mean_main);
        const double snr_eve = stream.exponential(mean_eve);
        if (protocol == Protocol::Inr) {
          acc_main += std::log2(1.0 + snr_main);
          acc_eve += std::log2(1.0 + snr_eve);
          main_cols[m][row] = acc_main / (2.0 * m_count);
          eve_cols[m][row] = acc_eve / (2.0 * m_count);
        } else {
          acc_main += snr_main;
          acc_eve += snr_eve;
          main_cols[m][row] = std::log2(1.0 + acc_main) / (2.0 * m_count);
          eve_cols[m][row] = std::log2(1.0 + acc_eve) / (2.0 * m_count);
        }
      }
    }
  });

  parallel_chunks(2 * m_count, [&](std::size_t idx) {
    auto& col = idx < m_count ? main_cols[idx] : eve_cols[idx - m_count];
    std::sort(col.begin(), col.end());
  });

  return CdfTables(protocol, params, sample_count, seed, std::move(main_cols),
                   std::move(eve_cols));
}

CdfEstimate cdf_eval(const CdfTables& tables, Link link, int m, double r) {
  const auto& col = tables.column(link, m);
  const auto n = static_cast<double>(col.size());
  const auto below = static_cast<double>(
      std::lower_bound(col.begin(), col.end(), r) - col.begin());
  const double p = below / n;
  return CdfEstimate{p, 1.96 * std::sqrt(p * (1.0 - p) / n)};
}

void save_cdf_tables(const CdfTables& tables, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("save_cdf_tables: cannot open " + path.string());
  auto put_u64 = [&out](std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(buf, 8);
  };
  auto put_f64 = [&put_u64](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(bits);
  };
  out.write(kMagic, 8);
  put_u64(tables.protocol() == Protocol::Inr ? 1 : 0);
  put_u64(static_cast<std::uint64_t>(tables.max_tx()));
  put_u64(tables.sample_count());
  put_u64(tables.seed());
  put_f64(tables.mean_snr(Link::Main));
  put_f64(tables.mean_snr(Link::Eve));
  for (Link link : {Link::Main, Link::Eve})
    for (int m = 1; m <= tables.max_tx(); ++m)
      for (double v : tables.column(link, m)) put_f64(v);
  if (!out)
    throw std::runtime_error("save_cdf_tables: write failed: " + path.string());
}

CdfTables load_cdf_tables(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("load_cdf_tables: cannot open " + path.string());
  auto get_u64 = [&in, &path]() {
    char buf[8];
    in.read(buf, 8);
    if (!in)
      throw std::runtime_error("load_cdf_tables: truncated file: " + path.string());
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return v;
  };
  auto get_f64 = [&get_u64]() {
    std::uint64_t bits = get_u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  };
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("load_cdf_tables: bad magic in " + path.string());
  const std::uint64_t proto_tag = get_u64();
  if (proto_tag > 1)
    throw std::runtime_error("load_cdf_tables: bad protocol tag in " + path.string());
  const Protocol protocol = proto_tag == 1 ? Protocol::Inr : Protocol::Rtd;
  const auto max_tx = static_cast<int>(get_u64());
  const std::size_t sample_count = get_u64();
  const std::uint64_t seed = get_u64();
  const double mean_main = get_f64();
  const double mean_eve = get_f64();
  if (max_tx < 1 || max_tx > kMaxTxCeiling || sample_count < 1 ||
      !(mean_main > 0.0) || !(mean_eve > 0.0))
    throw std::runtime_error("load_cdf_tables: invalid header in " + path.string());

  const auto m_count = static_cast<std::size_t>(max_tx);
  std::vector<std::vector<double>> main_cols(m_count), eve_cols(m_count);
  for (auto* cols : {&main_cols, &eve_cols}) {
    for (auto& col : *cols) {
      col.resize(sample_count);
      double prev = -1.0;
      for (auto& v : col) {
        v = get_f64();
        if (!(v >= prev))
          throw std::runtime_error("load_cdf_tables: unsorted column in " +
                                   path.string());
        prev = v;
      }
    }
  }
  const SystemParams params{max_tx, FadingSpec{mean_main}, FadingSpec{mean_eve}};
  return CdfTables(protocol, params, sample_count, seed, std::move(main_cols),
                   std::move(eve_cols));
}

}  // namespace shrq
