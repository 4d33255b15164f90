#include "motifkit/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace motifkit {

namespace {

std::vector<int> parse_int_list(std::string_view body, char const *what)
{
  std::vector<int> out;
  while (!body.empty()) {
    auto const comma = body.find(',');
    auto const tok = body.substr(0, comma);
    int v = 0;
    auto const [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument(std::string("cannot parse ") + what);
    }
    out.push_back(v);
    if (comma == std::string_view::npos) { break; }
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view strip_delims(std::string_view text, char open, char close, char const *what)
{
  if (text.size() < 2 || text.front() != open || text.back() != close) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " + std::string(text));
  }
  return text.substr(1, text.size() - 2);
}

} // namespace

Partition::Partition(std::vector<int> parts)
  : parts_(std::move(parts))
{
  while (!parts_.empty() && parts_.back() == 0) { parts_.pop_back(); }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("Partition: parts must be positive and weakly decreasing");
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(Partition const &inner) const
{
  if (inner.length() > length()) { return false; }
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > (*this)[i]) { return false; }
  }
  return true;
}

std::string Partition::to_string() const
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) { os << (i ? "," : "") << parts_[i]; }
  os << "]";
  return os.str();
}

std::string Partition::to_power_string() const
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) { ++j; }
    os << (i ? "," : "") << parts_[i];
    if (j - i > 1) { os << "^" << (j - i); }
    i = j;
  }
  os << "]";
  return os.str();
}

Partition Partition::parse(std::string_view text)
{
  // Parts may carry exponents, as in "[2,1^2]".
  std::string_view body = strip_delims(text, '[', ']', "partition");
  std::vector<int> parts;
  while (!body.empty()) {
    auto const comma = body.find(',');
    auto const tok = body.substr(0, comma);
    auto const caret = tok.find('^');
    int const  part = parse_int_list(tok.substr(0, caret), "partition").at(0);
    int const  times = caret == std::string_view::npos ? 1 : parse_int_list(tok.substr(caret + 1), "partition").at(0);
    if (times < 0) { throw std::invalid_argument("cannot parse partition"); }
    parts.insert(parts.end(), times, part);
    if (comma == std::string_view::npos) { break; }
    body.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition conjugate(Partition const &p)
{
  std::vector<int> out(p.empty() ? 0 : p.parts().front());
  for (int part : p.parts()) {
    for (int i = 0; i < part; ++i) { ++out[i]; }
  }
  return Partition(std::move(out));
}

std::vector<Partition> partitions_of(int weight)
{
  std::vector<Partition> out;
  std::vector<int>       cur;
  auto rec = [&](auto &self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

int BorderStrip::boxes() const { return std::accumulate(cols.begin(), cols.end(), 0); }

std::string BorderStrip::to_string() const
{
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < cols.size(); ++i) { os << (i ? "," : "") << cols[i]; }
  os << ">";
  return os.str();
}

BorderStrip BorderStrip::parse(std::string_view text)
{
  BorderStrip s{parse_int_list(strip_delims(text, '<', '>', "border strip"), "border strip")};
  if (s.cols.empty()) { throw std::invalid_argument("border strip needs at least one column"); }
  for (int c : s.cols) {
    if (c < 1) { throw std::invalid_argument("border strip columns must be positive"); }
  }
  return s;
}

std::string Motif::to_string() const
{
  std::string s = "(";
  for (auto b : bits) { s += b ? '1' : '0'; }
  return s + ")";
}

Motif Motif::parse(std::string_view text)
{
  auto const body = strip_delims(text, '(', ')', "motif");
  Motif d;
  if (body == "~") { return d; }
  for (char c : body) {
    if (c != '0' && c != '1') { throw std::invalid_argument("motif digits must be 0 or 1"); }
    d.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return d;
}

BorderStrip motif_to_strip(Motif const &d)
{
  BorderStrip s{{1}};
  for (auto b : d.bits) {
    if (b) {
      ++s.cols.back();
    } else {
      s.cols.push_back(1);
    }
  }
  return s;
}

Motif strip_to_motif(BorderStrip const &s)
{
  if (s.cols.empty()) { throw std::invalid_argument("strip_to_motif: empty strip"); }
  Motif d;
  for (std::size_t i = 0; i < s.cols.size(); ++i) {
    if (s.cols[i] < 1) { throw std::invalid_argument("strip_to_motif: nonpositive column"); }
    if (i > 0) { d.bits.push_back(0); }
    for (int k = 1; k < s.cols[i]; ++k) { d.bits.push_back(1); }
  }
  return d;
}

std::pair<Partition, Partition> strip_to_skew(BorderStrip const &s)
{
  int const r = s.columns();
  // Column i (0-based, top-right first) sits at x = r - i and spans rows
  // [top_i, top_i + cols[i] - 1]; the next column starts on the bottom row of
  // this one.
  int rows = 1;
  for (int c : s.cols) { rows += c - 1; }
  std::vector<int> outer(rows, 0), inner(rows, 0);
  std::vector<int> minx(rows, r + 1);
  int top = 0;
  for (int i = 0; i < r; ++i) {
    int const x = r - i;
    for (int row = top; row < top + s.cols[i]; ++row) {
      outer[row] = std::max(outer[row], x);
      minx[row] = std::min(minx[row], x);
    }
    top += s.cols[i] - 1;
  }
  for (int row = 0; row < rows; ++row) { inner[row] = minx[row] - 1; }
  return {Partition(outer), Partition(inner)};
}

std::vector<Motif> enumerate_motifs(int N)
{
  if (N < 0) { throw std::invalid_argument("enumerate_motifs: N >= 0"); }
  std::vector<Motif> out;
  out.reserve(std::size_t{1} << N);
  for (unsigned long long code = 0; code < (1ull << N); ++code) {
    Motif d;
    d.bits.resize(N);
    for (int j = 0; j < N; ++j) { d.bits[j] = static_cast<std::uint8_t>((code >> (N - 1 - j)) & 1u); }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<BorderStrip> enumerate_strips(int boxes)
{
  if (boxes < 1) { throw std::invalid_argument("enumerate_strips: boxes >= 1"); }
  std::vector<BorderStrip> out;
  for (auto const &d : enumerate_motifs(boxes - 1)) { out.push_back(motif_to_strip(d)); }
  return out;
}

std::vector<std::vector<int>> compositions(int total, int parts)
{
  if (parts < 1 || total < 0) { throw std::invalid_argument("compositions: parts >= 1, total >= 0"); }
  std::vector<std::vector<int>> out;
  std::vector<int>              cur(parts, 0);
  auto rec = [&](auto &self, int idx, int rest) -> void {
    if (idx == parts - 1) {
      cur[idx] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[idx] = v;
      self(self, idx + 1, rest - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

} // namespace motifkit
