#pragma once

// Partitions, border strips, motifs and the bijection between motifs and
// border strips.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motifkit {

/// Weakly decreasing sequence of positive integers.
class Partition
{
public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument if the parts
  /// are not weakly decreasing or contain negatives.
  explicit Partition(std::vector<int> parts);

  std::vector<int> const &parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// parts[i] with zero padding beyond the length.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  bool contains(Partition const &inner) const;

  /// "[3,1]".
  std::string to_string() const;
  /// Exponent notation, "[2^2]" or "[2,1^2]".
  std::string to_power_string() const;
  static Partition parse(std::string_view text);

  auto operator<=>(Partition const &) const = default;

private:
  std::vector<int> parts_;
};

Partition conjugate(Partition const &p);

/// All partitions of `weight`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int weight);

/// Border strip <m_1,...,m_r>: column lengths, m_1 is the top-right column.
struct BorderStrip
{
  std::vector<int> cols;

  int boxes() const;
  int columns() const { return static_cast<int>(cols.size()); }
  /// "<2,2>".
  std::string to_string() const;
  static BorderStrip parse(std::string_view text);

  auto operator<=>(BorderStrip const &) const = default;
};

/// Binary word d_1..d_N.
struct Motif
{
  std::vector<std::uint8_t> bits;

  int size() const { return static_cast<int>(bits.size()); }
  /// "(101)"; the empty motif prints as "()".  parse() also accepts "(~)".
  std::string to_string() const;
  static Motif parse(std::string_view text);

  auto operator<=>(Motif const &) const = default;
};

/// Read left to right: a 1 adds a box under the current box, a 0 adds one to
/// its left.
BorderStrip motif_to_strip(Motif const &d);
Motif       strip_to_motif(BorderStrip const &s);

/// Embeds the strip as a skew diagram outer/inner.
std::pair<Partition, Partition> strip_to_skew(BorderStrip const &s);

/// All 2^N motifs of length N in lexicographic order.
std::vector<Motif> enumerate_motifs(int N);

/// All compositions of `boxes` into positive parts, as border strips.
std::vector<BorderStrip> enumerate_strips(int boxes);

/// Weak compositions of `total` into `parts` nonnegative entries, in
/// lexicographic order.
std::vector<std::vector<int>> compositions(int total, int parts);

} // namespace motifkit
