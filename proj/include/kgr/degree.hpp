#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "kgr/error.hpp"

namespace kgr {

// Element of N^k with the coordinatewise partial order.
class DegreeVector {
 public:
  DegreeVector() = default;

  explicit DegreeVector(std::vector<int> coords) : c_(std::move(coords)) {
    for (int x : c_)
      if (x < 0) throw Error(Errc::bad_argument, "negative degree coordinate");
  }

  static DegreeVector zero(int k) { return DegreeVector(std::vector<int>(k, 0)); }

  // basis vector e_color, colors are 1-based
  static DegreeVector basis(int k, int color) {
    if (color < 1 || color > k) throw Error(Errc::invalid_color, "color out of range");
    std::vector<int> c(k, 0);
    c[color - 1] = 1;
    return DegreeVector(std::move(c));
  }

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }

  bool operator==(const DegreeVector& o) const { return c_ == o.c_; }
  bool operator!=(const DegreeVector& o) const { return c_ != o.c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
  }

  int sum() const { return std::accumulate(c_.begin(), c_.end(), 0); }

  friend bool leq(const DegreeVector& a, const DegreeVector& b) {
    check_rank(a, b);
    for (int i = 0; i < a.size(); ++i)
      if (a.c_[i] > b.c_[i]) return false;
    return true;
  }

  friend DegreeVector join(const DegreeVector& a, const DegreeVector& b) {
    check_rank(a, b);
    std::vector<int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = std::max(a.c_[i], b.c_[i]);
    return DegreeVector(std::move(c));
  }

  friend DegreeVector meet(const DegreeVector& a, const DegreeVector& b) {
    check_rank(a, b);
    std::vector<int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = std::min(a.c_[i], b.c_[i]);
    return DegreeVector(std::move(c));
  }

  friend DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
    check_rank(a, b);
    std::vector<int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return DegreeVector(std::move(c));
  }

  // b - a, requires a <= b
  friend DegreeVector operator-(const DegreeVector& b, const DegreeVector& a) {
    if (!leq(a, b)) throw Error(Errc::degree_out_of_range, "subtraction would be negative");
    std::vector<int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = b.c_[i] - a.c_[i];
    return DegreeVector(std::move(c));
  }

  friend bool lex_less(const DegreeVector& a, const DegreeVector& b) {
    check_rank(a, b);
    return a.c_ < b.c_;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  static void check_rank(const DegreeVector& a, const DegreeVector& b) {
    if (a.size() != b.size()) throw Error(Errc::bad_argument, "rank mismatch between degree vectors");
  }

  std::vector<int> c_;
};

struct DegreeLexLess {
  bool operator()(const DegreeVector& a, const DegreeVector& b) const { return lex_less(a, b); }
};

// All p in N^k with p <= cap, in lexicographic order.
inline std::vector<DegreeVector> degrees_upto(const DegreeVector& cap) {
  std::vector<DegreeVector> out;
  std::vector<int> cur(cap.size(), 0);
  while (true) {
    out.push_back(DegreeVector(cur));
    int i = cap.size() - 1;
    while (i >= 0) {
      if (cur[i] < cap[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

// Parses "a,b,c"; validates length against the expected rank.
inline DegreeVector parse_degree(const std::string& text, int k) {
  std::vector<int> c;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(Errc::parse_error, "empty degree coordinate in '" + text + "'");
    for (char ch : cur)
      if (!isdigit(static_cast<unsigned char>(ch)))
        throw Error(Errc::parse_error, "bad degree literal '" + text + "'");
    c.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (!isspace(static_cast<unsigned char>(ch)))
      cur += ch;
  }
  flush();
  if (static_cast<int>(c.size()) != k)
    throw Error(Errc::bad_argument,
                "degree literal '" + text + "' has rank " + std::to_string(c.size()) +
                    ", graph has rank " + std::to_string(k));
  return DegreeVector(std::move(c));
}

}  // namespace kgr
