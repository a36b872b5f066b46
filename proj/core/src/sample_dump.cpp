#include "qcones/sample_dump.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "json.hpp"
#include "qcones/eigen.hpp"
#include "qcones/matrix_io.hpp"

namespace qcones {

namespace {

constexpr char kMagic[8] = {'Q', 'C', 'S', 'A', 'M', 'P', '1', '\n'};

static_assert(std::endian::native == std::endian::little,
              "sample dumps assume a little-endian host");

}  // namespace

void write_sample_dump(const std::filesystem::path& path, const SampleHeader& header,
                       const std::vector<HermMat>& samples) {
  nlohmann::json h{{"body", header.body},
                   {"seed", header.seed},
                   {"dim", header.dim},
                   {"count", samples.size()},
                   {"steps", header.steps}};
  const std::string text = h.dump();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(kMagic, sizeof kMagic);
  const std::uint64_t len = text.size();
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const auto& s : samples) {
    require_same_dim(s.dim(), header.dim, "write_sample_dump");
    const auto data = s.matrix().data();
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size() * sizeof(cplx)));
  }
}

SampleDump read_sample_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw FormatError("not a sample dump: " + path.string());
  std::uint64_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof len);
  if (!in || len > (1u << 24)) throw FormatError("bad sample dump header length");
  std::string text(len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(len));
  const auto h = nlohmann::json::parse(text);
  SampleDump dump;
  dump.header.body = h.at("body").get<std::string>();
  dump.header.seed = h.at("seed").get<std::uint64_t>();
  dump.header.dim = h.at("dim").get<std::size_t>();
  dump.header.count = h.at("count").get<std::size_t>();
  dump.header.steps = h.value("steps", std::uint64_t{0});
  const std::size_t d = dump.header.dim;
  for (std::size_t k = 0; k < dump.header.count; ++k) {
    std::vector<cplx> buf(d * d);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(cplx)));
    if (!in) throw FormatError("truncated sample dump");
    dump.samples.push_back(HermMat(CMatrix(d, d, std::move(buf))));
  }
  return dump;
}

void write_sample_observables(const std::filesystem::path& path, const HermMat& center,
                              const std::vector<HermMat>& samples) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << "index,trace,distance,lambda_min\r\n";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    out << k << ',' << format_double(samples[k].trace()) << ','
        << format_double(hs_distance(samples[k], center)) << ','
        << format_double(min_eigenvalue(samples[k])) << "\r\n";
  }
}

}  // namespace qcones
