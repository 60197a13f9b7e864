#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsym {

/// Permutation of {1..N}, stored 0-based. Acts on the left; (a * b)(x) =
/// a(b(x)), so "(12)(13)" is (132).
template <int N>
class Perm {
 public:
  Perm() {
    for (int k = 0; k < N; ++k) img_[k] = static_cast<std::uint8_t>(k);
  }

  /// From 1-based images, e.g. {2,1,3,4} for (12). Throws on non-bijections.
  static Perm from_images(const std::array<int, N>& images1) {
    Perm p;
    std::array<bool, N> seen{};
    for (int k = 0; k < N; ++k) {
      int v = images1[k] - 1;
      if (v < 0 || v >= N || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
      p.img_[k] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  /// Parses cycle notation on symbols 1..N: "(1324)", "(1 3 2 4)(5 6)", "()"
  /// or "e". Cycles are composed right to left.
  static Perm parse(std::string_view text) {
    const std::string s(text);
    Perm result;
    std::string trimmed;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "e" || trimmed == "()") return result;

    std::vector<Perm> cycles;
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        continue;
      }
      if (s[pos] != '(') throw std::invalid_argument("bad cycle notation: " + s);
      std::size_t close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle: " + s);
      std::string body = s.substr(pos + 1, close - pos - 1);
      std::vector<int> pts;
      bool spaced = body.find_first_of(" ,") != std::string::npos;
      if (spaced) {
        std::string tok;
        for (char c : body + " ") {
          if (c == ' ' || c == ',') {
            if (!tok.empty()) pts.push_back(std::stoi(tok));
            tok.clear();
          } else {
            tok += c;
          }
        }
      } else {
        for (char c : body) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad cycle symbol in: " + s);
          pts.push_back(c - '0');
        }
      }
      Perm cyc;
      std::array<bool, N> seen{};
      for (std::size_t k = 0; k < pts.size(); ++k) {
        int a = pts[k], b = pts[(k + 1) % pts.size()];
        if (a < 1 || a > N || seen[a - 1]) throw std::invalid_argument("bad cycle: " + s);
        seen[a - 1] = true;
        cyc.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
      }
      cycles.push_back(cyc);
      pos = close + 1;
    }
    for (const auto& c : cycles) result = result * c;
    return result;
  }

  /// 0-based image of 0-based point.
  int operator()(int k) const { return img_[k]; }
  const std::array<std::uint8_t, N>& images() const { return img_; }

  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    for (int k = 0; k < N; ++k) r.img_[k] = a.img_[b.img_[k]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    for (int k = 0; k < N; ++k) r.img_[img_[k]] = static_cast<std::uint8_t>(k);
    return r;
  }

  bool is_identity() const { return *this == Perm(); }

  int sign() const {
    int s = 1;
    std::array<bool, N> seen{};
    for (int k = 0; k < N; ++k) {
      if (seen[k]) continue;
      int len = 0;
      for (int j = k; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  int order() const {
    int o = 1;
    Perm p = *this;
    while (!p.is_identity()) {
      p = p * *this;
      ++o;
    }
    return o;
  }

  /// Cycle notation with 1-based symbols, e.g. "(1324)", "e" for the identity.
  std::string str() const {
    std::string out;
    std::array<bool, N> seen{};
    for (int k = 0; k < N; ++k) {
      if (seen[k] || img_[k] == k) continue;
      out += '(';
      for (int j = k; !seen[j]; j = img_[j]) {
        seen[j] = true;
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "e" : out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::array<std::uint8_t, N> img_;
};

using Perm4 = Perm<4>;
using Perm3 = Perm<3>;

}  // namespace tsym
