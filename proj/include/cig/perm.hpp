#ifndef CIG_PERM_HPP
#define CIG_PERM_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cig/error.hpp"

namespace cig {

using Point = std::uint16_t;

constexpr std::size_t kDegreeCap = 10000;

// A permutation of {0, ..., degree-1}, stored as its image array.
// The product p * q means "apply p, then q", i.e. (p*q)[i] = q[p[i]],
// so conjugation is p^x = x^-1 * p * x and points are acted on the right.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    check_degree(degree);
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), Point{0});
    return p;
  }

  static Permutation from_images(std::vector<Point> images) {
    check_degree(images.size());
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x])
        throw MalformedPermutation("image array is not a bijection");
      seen[x] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // smallest non-fixed point, or degree() if identity
  std::size_t first_moved() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return i;
    return img_.size();
  }

  Permutation operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw DegreeMismatch("product of permutations of unequal degree");
    Permutation r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[i] = q.img_[img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
    return r;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // cycle lengths >= 2, sorted descending; identity gives {}
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> type;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len >= 2) type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
  }

  std::uint64_t order() const {
    std::uint64_t ord = 1;
    for (std::size_t len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
    return ord;
  }

  bool is_even() const {
    std::size_t transpositions = 0;
    for (std::size_t len : cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0;
  }

  Permutation power(long long k) const {
    const long long n = static_cast<long long>(order());
    k %= n;
    if (k < 0) k += n;
    Permutation acc = identity(degree());
    Permutation base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  // x^-1 * p * x
  Permutation conjugated_by(const Permutation& x) const {
    if (degree() != x.degree()) throw DegreeMismatch("conjugation across unequal degrees");
    Permutation r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[x.img_[i]] = x.img_[img_[i]];
    return r;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ (degree() * 0x100000001b3ULL);
    for (Point x : img_) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  static void check_degree(std::size_t d) {
    if (d == 0) throw MalformedPermutation("degree must be positive");
    if (d > kDegreeCap) throw CapExceeded("degree exceeds the desk-scale cap of 10^4");
  }

  std::vector<Point> img_;
};

inline Permutation conjugate(const Permutation& p, const Permutation& x) { return p.conjugated_by(x); }

inline std::uint64_t element_order(const Permutation& p) { return p.order(); }

// --- cycle notation --------------------------------------------------------
//
// Human-facing notation is 1-based, e.g. "(1 2 3)(4 5)"; the identity prints
// as "()". Parsing is whitespace-insensitive and accepts commas.

inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

// `degree` must cover every point mentioned.
inline Permutation parse_cycles(const std::string& text, std::size_t degree) {
  if (degree == 0 || degree > kDegreeCap) throw CapExceeded("degree out of range");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});

  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_sep();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<std::size_t> cycle;
    skip_sep();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle notation: " + text);
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (v == 0 || v > degree) throw ParseError("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated: " + text);
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip_sep();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
    ++i;  // ')'
    skip_sep();
    saw_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
  }
  if (!saw_cycle) throw ParseError("empty cycle expression: " + text);
  return Permutation::from_images(std::move(img));
}

}  // namespace cig

#endif
