#include "twoterm/io.h"

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "twoterm/errors.h"

namespace twoterm {

namespace {

using nlohmann::json;

std::string IdFromJson(const json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw InputError(std::string("graph JSON: ") + what +
                   " must be a string or an integer");
}

std::string FormatDouble(double x) {
  std::array<char, 32> buffer;
  std::snprintf(buffer.data(), buffer.size(), "%.17g", x);
  return buffer.data();
}

std::string FormatResidual(double x) {
  std::array<char, 32> buffer;
  std::snprintf(buffer.data(), buffer.size(), "%.3e", x);
  return buffer.data();
}

}  // namespace

Network ParseGraphJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph JSON: expected an object");
  for (const char* key : {"vertices", "edges", "s", "t"}) {
    if (!doc.contains(key)) {
      throw InputError(std::string("graph JSON: missing \"") + key + "\"");
    }
  }
  if (!doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw InputError("graph JSON: vertices and edges must be arrays");
  }
  std::vector<VertexId> vertices;
  for (const auto& v : doc["vertices"]) vertices.push_back(IdFromJson(v, "vertex"));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw InputError("graph JSON: each edge must be a pair [u, v]");
    }
    edges.emplace_back(IdFromJson(e[0], "edge endpoint"),
                       IdFromJson(e[1], "edge endpoint"));
  }
  return FromEdgeList(vertices, edges, IdFromJson(doc["s"], "s"),
                      IdFromJson(doc["t"], "t"));
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
  if (!out) throw InputError("failed writing " + path.string());
}

Network ReadGraphJson(const std::filesystem::path& path) {
  return ParseGraphJson(ReadFile(path));
}

std::string WriteGraphJson(const Network& network) {
  json doc;
  doc["vertices"] = network.graph.Vertices();
  json edges = json::array();
  for (const auto& e : network.graph.Edges()) edges.push_back({e.u, e.v});
  doc["edges"] = edges;
  doc["s"] = network.terminals.s;
  doc["t"] = network.terminals.t;
  return doc.dump(2) + "\n";
}

SimpleGraph ParseGraph6(const std::string& raw) {
  std::string line = raw;
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.pop_back();
  }
  const std::string header = ">>graph6<<";
  if (line.compare(0, header.size(), header) == 0) line.erase(0, header.size());
  if (line.empty()) throw InputError("graph6: empty line");
  for (char c : line) {
    if (c < 63 || c > 126) throw InputError("graph6: byte out of range");
  }
  std::size_t pos = 0;
  long n;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
    pos = 4;
  } else {
    throw InputError("graph6: orders above 258047 are not supported");
  }
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) +
                     " bytes, got " + std::to_string(line.size()));
  }
  SimpleGraph graph;
  graph.n = static_cast<int>(n);
  long k = 0;
  for (int j = 1; j < graph.n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) graph.edges.emplace_back(i, j);
    }
  }
  for (long r = bits; r < static_cast<long>(expected - pos) * 6; ++r) {
    int byte = line[pos + r / 6] - 63;
    if (byte & (1 << (5 - r % 6))) throw InputError("graph6: nonzero padding");
  }
  return graph;
}

std::string EncodeGraph6(const SimpleGraph& graph) {
  const long n = graph.n;
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (auto [a, b] : graph.edges) adjacent[a][b] = adjacent[b][a] = true;
  int byte = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      byte = (byte << 1) | (adjacent[i][j] ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(byte + 63));
        byte = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((byte << (6 - filled)) + 63));
  return out;
}

Network ToNetwork(const SimpleGraph& graph, int s, int t) {
  std::vector<VertexId> vertices;
  for (int v = 0; v < graph.n; ++v) vertices.push_back(std::to_string(v));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [a, b] : graph.edges) {
    edges.emplace_back(std::to_string(a), std::to_string(b));
  }
  return FromEdgeList(vertices, edges, std::to_string(s), std::to_string(t));
}

std::string RootsCsvHeader() {
  return "graph_id,s,t,re,im,residual,zero_mult\n";
}

std::string RootsCsvRows(const std::string& graph_id, const std::string& s,
                         const std::string& t, const RootSet& roots) {
  std::string out;
  const std::string prefix = graph_id + "," + s + "," + t + ",";
  for (const auto& r : roots.roots) {
    const std::string row = prefix + FormatDouble(r.value.real()) + "," +
                            FormatDouble(r.value.imag()) + "," +
                            FormatResidual(r.residual) + ",0\n";
    for (int i = 0; i < r.multiplicity; ++i) out += row;
  }
  if (roots.zero_multiplicity > 0) {
    out += prefix + "0,0,0," + std::to_string(roots.zero_multiplicity) + "\n";
  }
  return out;
}

void WritePointCloudCsv(std::ostream& out, const PointCloud& cloud) {
  out << "re,im,depth\n";
  for (const auto& p : cloud.points) {
    out << FormatDouble(p.z.real()) << "," << FormatDouble(p.z.imag()) << ","
        << p.depth << "\n";
  }
}

std::string RenderSvg(const std::vector<std::complex<double>>& points,
                      const std::string& title) {
  constexpr double kExtent = 2.2;
  constexpr int kSize = 800;
  const double scale = kSize / (2 * kExtent);
  auto x = [&](double re) { return (re + kExtent) * scale; };
  auto y = [&](double im) { return (kExtent - im) * scale; };
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << " "
      << kSize << "\">\n";
  std::string escaped;
  for (char c : title) {
    switch (c) {
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      case '&': escaped += "&amp;"; break;
      default: escaped += c;
    }
  }
  svg << "<title>" << escaped << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"0\" y1=\"" << y(0) << "\" x2=\"" << kSize << "\" y2=\""
      << y(0) << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n"
      << "<line x1=\"" << x(0) << "\" y1=\"0\" x2=\"" << x(0) << "\" y2=\""
      << kSize << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  // |z| = 1 and |z - 1| = 1.
  for (double cx : {0.0, 1.0}) {
    svg << "<circle cx=\"" << x(cx) << "\" cy=\"" << y(0) << "\" r=\"" << scale
        << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"0.5\"/>\n";
  }
  svg << "<g fill=\"black\">\n";
  char buffer[96];
  for (const auto& z : points) {
    if (std::abs(z.real()) > kExtent || std::abs(z.imag()) > kExtent) continue;
    std::snprintf(buffer, sizeof buffer, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"0.5\"/>\n",
                  x(z.real()), y(z.imag()));
    svg << buffer;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

namespace {

constexpr char kMagic[] = "TTMEMO";
constexpr std::uint32_t kVersion = 1;

void PutU32(std::string& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void PutU64(std::string& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void PutString(std::string& out, const std::string& s) {
  PutU32(out, static_cast<std::uint32_t>(s.size()));
  out += s;
}

class Reader {
 public:
  explicit Reader(const std::string& data) : data_(data) {}

  std::uint64_t Get(int bytes) {
    Need(bytes);
    std::uint64_t x = 0;
    for (int i = 0; i < bytes; ++i) {
      x |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i]))
           << (8 * i);
    }
    pos_ += bytes;
    return x;
  }
  std::string GetString() {
    std::size_t n = Get(4);
    Need(n);
    std::string s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::string Raw(std::size_t n) {
    Need(n);
    std::string s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool AtEnd() const { return pos_ == data_.size(); }

 private:
  void Need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw InputError("memo cache: truncated file");
  }

  const std::string& data_;
  std::size_t pos_ = 0;
};

}  // namespace

void SaveMemoCache(const ReliabilitySolver& solver,
                   const std::filesystem::path& path) {
  auto entries = solver.Snapshot();
  std::string out(kMagic, sizeof kMagic - 1);
  PutU32(out, kVersion);
  PutU64(out, entries.size());
  for (const auto& [key, value] : entries) {
    PutString(out, key);
    auto coefficients = value.CoefficientStrings();
    PutU32(out, static_cast<std::uint32_t>(coefficients.size()));
    for (const auto& c : coefficients) PutString(out, c);
  }
  WriteFile(path, out);
}

std::size_t LoadMemoCache(ReliabilitySolver& solver,
                          const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return 0;
  const std::string data = ReadFile(path);
  Reader reader(data);
  if (reader.Raw(sizeof kMagic - 1) != kMagic) {
    throw InputError("memo cache: bad magic in " + path.string());
  }
  if (reader.Get(4) != kVersion) {
    throw InputError("memo cache: unsupported version in " + path.string());
  }
  const std::uint64_t count = reader.Get(8);
  std::vector<std::pair<std::string, Polynomial>> entries;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string key = reader.GetString();
    std::uint32_t n = reader.Get(4);
    std::vector<std::string> coefficients;
    for (std::uint32_t j = 0; j < n; ++j) coefficients.push_back(reader.GetString());
    try {
      entries.emplace_back(std::move(key),
                           Polynomial::FromCoefficientStrings(coefficients));
    } catch (const DomainError&) {
      throw InputError("memo cache: bad coefficient in " + path.string());
    }
  }
  if (!reader.AtEnd()) throw InputError("memo cache: trailing bytes");
  for (const auto& [key, value] : entries) solver.Insert(key, value);
  return entries.size();
}

}  // namespace twoterm
