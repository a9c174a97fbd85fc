#include "dualbent/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace dualbent {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& msg)
    : PreconditionError("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
      line(l),
      column(c) {}

namespace {

struct Lines {
  std::vector<std::string_view> rows;
  explicit Lines(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      auto row = text.substr(pos, end - pos);
      if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
      rows.push_back(row);
      pos = end + 1;
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
  }
};

unsigned read_key(std::string_view row, std::size_t line, std::string_view key) {
  auto at = row.find(std::string(key) + "=");
  if (at == std::string_view::npos || (at > 0 && row[at - 1] != ' '))
    throw ParseError(line, 1, "missing '" + std::string(key) + "='");
  std::size_t start = at + key.size() + 1;
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(row.data() + start, row.data() + row.size(), v);
  if (ec != std::errc() || ptr == row.data() + start)
    throw ParseError(line, start + 1, "expected an unsigned integer after '" + std::string(key) + "='");
  return v;
}

struct Header {
  unsigned p, n, m;
  SpacePtr domain, codomain;
  std::size_t body;  // first data row
};

SpacePtr parse_space(std::string_view row, std::size_t line) {
  try {
    return SpaceDesc::parse_header(row);
  } catch (const Error& e) {
    throw ParseError(line, 1, std::string("bad space header: ") + e.what());
  }
}

Header parse_header(const Lines& L) {
  if (L.rows.size() < 2) throw ParseError(L.rows.size() + 1, 1, "missing header lines");
  Header h{};
  h.p = read_key(L.rows[0], 1, "p");
  h.n = read_key(L.rows[0], 1, "n");
  h.m = read_key(L.rows[0], 1, "m");
  h.domain = parse_space(L.rows[1], 2);
  if (h.domain->p() != h.p || h.domain->dimension() != h.n)
    throw ParseError(2, 1, "domain header does not match p and n of line 1");
  h.body = 2;
  if (L.rows.size() > 2 && L.rows[2].starts_with("p=")) {
    h.codomain = parse_space(L.rows[2], 3);
    h.body = 3;
  } else {
    if (h.m == 0) throw ParseError(1, 1, "m must be positive");
    h.codomain = SpaceDesc::standard(h.p, {h.m});
  }
  if (h.codomain->p() != h.p || h.codomain->dimension() != h.m)
    throw ParseError(3, 1, "codomain header does not match p and m of line 1");
  enforce_guard(Guard::FastWalsh, h.domain->size(), "function file");
  const std::size_t rows = L.rows.size() - h.body;
  if (rows != h.domain->size())
    throw ParseError(L.rows.size() + 1, 1,
                     "expected " + std::to_string(h.domain->size()) + " data lines, found " + std::to_string(rows));
  return h;
}

std::string header_text(const VFunc& F) {
  std::ostringstream os;
  os << "p=" << F.p() << " n=" << F.n() << " m=" << F.m() << "\n" << F.domain->header() << "\n";
  if (F.codomain->header() != SpaceDesc::standard(F.p(), {F.m()})->header()) os << F.codomain->header() << "\n";
  return os.str();
}

}  // namespace

VFunc parse_function(std::string_view text) {
  Lines L(text);
  auto h = parse_header(L);
  std::vector<std::uint32_t> vals(h.domain->size());
  std::vector<unsigned> digits(h.m);
  for (Index x = 0; x < vals.size(); ++x) {
    const std::size_t line = h.body + x + 1;
    auto row = L.rows[h.body + x];
    if (row.size() != h.m) throw ParseError(line, 1, "expected " + std::to_string(h.m) + " digits");
    for (unsigned j = 0; j < h.m; ++j) {
      const char c = row[j];
      if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= h.p)
        throw ParseError(line, j + 1, std::string("'") + c + "' is not a base-" + std::to_string(h.p) + " digit");
      digits[j] = static_cast<unsigned>(c - '0');
    }
    vals[x] = static_cast<std::uint32_t>(h.codomain->from_digits(digits));
  }
  return VFunc(h.domain, h.codomain, std::move(vals));
}

std::string format_function(const VFunc& F) {
  std::string out = header_text(F);
  out.reserve(out.size() + F.values.size() * (F.m() + 1));
  for (auto v : F.values) {
    for (auto d : F.codomain->digits(v)) out.push_back(static_cast<char>('0' + d));
    out.push_back('\n');
  }
  return out;
}

PartitionSpec parse_partition(std::string_view text) {
  Lines L(text);
  auto h = parse_header(L);
  std::vector<std::uint32_t> vals(h.domain->size());
  for (Index x = 0; x < vals.size(); ++x) {
    const std::size_t line = h.body + x + 1;
    auto row = L.rows[h.body + x];
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(row.data(), row.data() + row.size(), v);
    if (ec != std::errc() || row.empty()) throw ParseError(line, 1, "expected a part index");
    if (ptr != row.data() + row.size())
      throw ParseError(line, static_cast<std::size_t>(ptr - row.data()) + 1, "trailing characters");
    if (v >= h.codomain->size())
      throw ParseError(line, 1, "part index " + std::to_string(v) + " exceeds p^m - 1");
    vals[x] = static_cast<std::uint32_t>(v);
  }
  return PartitionSpec::from_function(VFunc(h.domain, h.codomain, std::move(vals)));
}

std::string format_partition(const PartitionSpec& G) {
  std::string out = header_text(G.induced);
  for (auto v : G.induced.values) out += std::to_string(v) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw Error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned i = 0; i < len; ++i) {
    s.push_back(hex[md[i] >> 4]);
    s.push_back(hex[md[i] & 15]);
  }
  return s;
}

}  // namespace dualbent
