#include "schubert/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

void validate(const std::vector<int>& e) {
  if (e.empty()) throw std::invalid_argument("index sequence must have k >= 1");
  int prev = 0;
  for (int v : e) {
    if (v <= prev)
      throw std::invalid_argument("index sequence must be strictly increasing and positive");
    prev = v;
  }
}

}  // namespace

IndexSeq::IndexSeq(std::vector<int> entries) : entries_(std::move(entries)) { validate(entries_); }

IndexSeq::IndexSeq(std::initializer_list<int> entries) : entries_(entries) { validate(entries_); }

IndexSeq IndexSeq::parse(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    std::size_t p = 0;
    while (p < tok.size() && std::isspace(static_cast<unsigned char>(tok[p]))) ++p;
    std::size_t q = tok.size();
    while (q > p && std::isspace(static_cast<unsigned char>(tok[q - 1]))) --q;
    try {
      std::size_t used = 0;
      int v = std::stoi(tok.substr(p, q - p), &used);
      if (used != q - p) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad index component '" + tok + "'");
    }
  }
  return IndexSeq(std::move(out));
}

std::string IndexSeq::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  return os.str();
}

int weight(const IndexSeq& I) {
  int w = 0;
  for (int j = 0; j < I.k(); ++j) w += I.at(j) - (j + 1);
  return w;
}

IndexSeq shifted(const IndexSeq& I, std::span<const int> h) {
  if (int(h.size()) != I.k()) throw std::invalid_argument("shifted: length mismatch");
  std::vector<int> e(I.entries());
  for (int j = 0; j < I.k(); ++j) e[j] += h[j];
  return IndexSeq(std::move(e));
}

std::vector<std::vector<int>> pieri_support(const IndexSeq& I, int h) {
  if (h < 0) throw std::invalid_argument("pieri_support: negative h");
  int k = I.k();
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  // Digit-by-digit recursion: h_j < i_{j+1} - i_j for j < k, the last digit
  // takes whatever budget remains.
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == k - 1) {
      cur[j] = rem;
      out.push_back(cur);
      return;
    }
    int cap = std::min(rem, I.at(j + 1) - I.at(j) - 1);
    for (int t = 0; t <= cap; ++t) {
      cur[j] = t;
      self(self, j + 1, rem - t);
    }
  };
  rec(rec, 0, h);
  return out;
}

int Bitstring::zero_count() const {
  int z = 0;
  for (auto b : bits) z += (b == 0);
  return z;
}

std::string Bitstring::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bitstring Bitstring::parse(const std::string& text) {
  Bitstring b;
  for (char c : text) {
    if (c == '0')
      b.bits.push_back(0);
    else if (c == '1')
      b.bits.push_back(1);
    else
      throw std::invalid_argument("bad bitstring character");
  }
  return b;
}

Bitstring to_bitstring(const IndexSeq& I, int n) {
  if (!I.fits(n)) throw std::invalid_argument("to_bitstring: index exceeds n");
  Bitstring b;
  b.bits.assign(n, 1);
  for (int v : I.entries()) b.bits[v - 1] = 0;
  return b;
}

IndexSeq from_bitstring(const Bitstring& b) {
  std::vector<int> e;
  for (int j = 0; j < b.length(); ++j)
    if (b.bits[j] == 0) e.push_back(j + 1);
  return IndexSeq(std::move(e));
}

std::vector<IndexSeq> index_set(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("index_set: need 1 <= k <= n");
  std::vector<IndexSeq> out;
  std::vector<int> cur(k);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == k) {
      out.push_back(IndexSeq(cur));
      return;
    }
    for (int v = lo; v <= n - (k - 1 - pos); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  std::stable_sort(out.begin(), out.end(), [](const IndexSeq& a, const IndexSeq& b) {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace schubert
