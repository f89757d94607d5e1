#pragma once

// Index-sequence bookkeeping: the sets I^k and I^k_n of strictly increasing
// sequences, weights, Pieri supports P(I,h) and bitstring encodings.

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace schubert {

// A strictly increasing sequence (i_1,...,i_k) of positive integers.  The
// ambient bound n is not stored; call sites check it where it matters, so the
// same sequence can label both basis elements of I^k_n and shifted sequences
// with entries beyond n awaiting reduction.
class IndexSeq {
 public:
  IndexSeq() = default;
  explicit IndexSeq(std::vector<int> entries);
  IndexSeq(std::initializer_list<int> entries);
  static IndexSeq parse(const std::string& text);  // "1,3"

  int k() const { return int(entries_.size()); }
  int at(int j) const { return entries_[j]; }  // 0-based position
  int back() const { return entries_.back(); }
  const std::vector<int>& entries() const { return entries_; }
  bool fits(int n) const { return !entries_.empty() && entries_.back() <= n; }

  std::string to_string() const;

  auto operator<=>(const IndexSeq&) const = default;

 private:
  std::vector<int> entries_;
};

// wt(I) = sum (i_j - j)
int weight(const IndexSeq& I);

IndexSeq shifted(const IndexSeq& I, std::span<const int> h);

// P(I,h): all H = (h_1,...,h_k) with nonnegative entries summing to h such
// that i_j + h_j < i_{j+1} for j < k.  Every I+H is strictly increasing.
std::vector<std::vector<int>> pieri_support(const IndexSeq& I, int h);

// Length-n 0/1 string with zeros exactly at the entries of an index sequence.
struct Bitstring {
  std::vector<std::uint8_t> bits;

  int length() const { return int(bits.size()); }
  int zero_count() const;
  std::string to_string() const;
  static Bitstring parse(const std::string& text);
  bool operator==(const Bitstring&) const = default;
};

Bitstring to_bitstring(const IndexSeq& I, int n);
IndexSeq from_bitstring(const Bitstring& b);

// I^k_n ordered by weight, ties broken lexicographically; this is the wedge
// basis order used everywhere.
std::vector<IndexSeq> index_set(int n, int k);

long binomial(int n, int k);

}  // namespace schubert
