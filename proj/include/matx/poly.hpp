// Dense exact-integer polynomials: univariate (characteristic, reliability)
// and bivariate (Tutte).

#pragma once

#include <vector>

#include "matx/bigint.hpp"

namespace matx {

struct IntPoly {
  std::vector<BigInt> c;  // c[k] is the coefficient of x^k

  int degree() const {
    for (int k = static_cast<int>(c.size()); k-- > 0;)
      if (!c[k].is_zero()) return k;
    return -1;
  }
  const BigInt& at(int k) const {
    static const BigInt zero{0};
    return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : zero;
  }
  void add_to(int k, const BigInt& v) {
    if (k >= static_cast<int>(c.size())) c.resize(k + 1, BigInt{0});
    c[k] += v;
  }
  BigInt eval(const BigInt& x) const {
    BigInt acc{0};
    for (int k = static_cast<int>(c.size()); k-- > 0;) acc = acc * x + c[k];
    return acc;
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    const int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
      if (a.at(k) != b.at(k)) return false;
    return true;
  }
};

struct BivarPoly {
  std::vector<std::vector<BigInt>> c;  // c[i][j] is the coefficient of x^i y^j

  int xdeg() const { return static_cast<int>(c.size()) - 1; }
  int ydeg() const {
    int d = -1;
    for (const auto& row : c) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }
  const BigInt& at(int i, int j) const {
    static const BigInt zero{0};
    if (i < 0 || j < 0 || i >= static_cast<int>(c.size())) return zero;
    if (j >= static_cast<int>(c[i].size())) return zero;
    return c[i][j];
  }
  void add_to(int i, int j, const BigInt& v) {
    if (i >= static_cast<int>(c.size())) c.resize(i + 1);
    if (j >= static_cast<int>(c[i].size())) c[i].resize(j + 1, BigInt{0});
    c[i][j] += v;
  }
  void trim() {
    for (auto& row : c)
      while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!c.empty() && c.back().empty()) c.pop_back();
  }
  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (int i = 0; i < static_cast<int>(b.c.size()); ++i)
      for (int j = 0; j < static_cast<int>(b.c[i].size()); ++j) r.add_to(i, j, b.c[i][j]);
    r.trim();
    return r;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (int i = 0; i < static_cast<int>(a.c.size()); ++i)
      for (int j = 0; j < static_cast<int>(a.c[i].size()); ++j) {
        if (a.c[i][j].is_zero()) continue;
        for (int k = 0; k < static_cast<int>(b.c.size()); ++k)
          for (int l = 0; l < static_cast<int>(b.c[k].size()); ++l) {
            if (b.c[k][l].is_zero()) continue;
            r.add_to(i + k, j + l, a.c[i][j] * b.c[k][l]);
          }
      }
    r.trim();
    return r;
  }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    const int xi = std::max(a.xdeg(), b.xdeg());
    const int yj = std::max(a.ydeg(), b.ydeg());
    for (int i = 0; i <= xi; ++i)
      for (int j = 0; j <= yj; ++j)
        if (a.at(i, j) != b.at(i, j)) return false;
    return true;
  }
  BigInt eval(const BigInt& x, const BigInt& y) const {
    BigInt acc{0};
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      BigInt row{0};
      for (int j = static_cast<int>(c[i].size()); j-- > 0;) row = row * y + c[i][j];
      BigInt xp{1};
      for (int k = 0; k < i; ++k) xp *= x;
      acc += row * xp;
    }
    return acc;
  }
};

}  // namespace matx
