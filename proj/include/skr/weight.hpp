#pragma once

#include <string>
#include <vector>

namespace skr {

// Parity and sign data of gl(M,N): |i| = 0 for i <= M, 1 otherwise. Indices are 1-based.
inline int parityOf(int M, int i) { return i > M ? 1 : 0; }
inline int dOf(int M, int i) { return i > M ? -1 : 1; }
inline int signOf(int e) { return (e & 1) ? -1 : 1; }

// Element of P = sum Z eps_i, coordinates in the eps basis.
struct Weight {
  int M = 0;
  int N = 0;
  std::vector<int> c;

  Weight() = default;
  Weight(int M, int N) : M(M), N(N), c(M + N, 0) {}
  Weight(int M, int N, std::vector<int> coords) : M(M), N(N), c(std::move(coords)) {}
  static Weight eps(int M, int N, int i) {
    Weight w(M, N);
    w.c[i - 1] = 1;
    return w;
  }
  static Weight alpha(int M, int N, int i) {
    Weight w(M, N);
    w.c[i - 1] = 1;
    w.c[i] = -1;
    return w;
  }
  // k * varpi_r, following the fundamental weight conventions of the module.
  static Weight kVarpi(int M, int N, int r, int k);

  int size() const { return static_cast<int>(c.size()); }
  int operator[](int i) const { return c[i - 1]; }
  int& operator[](int i) { return c[i - 1]; }
  int parity() const;
  int height() const;  // sum of coordinates

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;
  friend bool operator==(const Weight& x, const Weight& y) { return x.c == y.c; }
  friend bool operator!=(const Weight& x, const Weight& y) { return x.c != y.c; }
  friend bool operator<(const Weight& x, const Weight& y) { return x.c < y.c; }

  // (eps_i, eps_j) = delta_ij d_i.
  int form(const Weight& o) const;
  int formWithEps(int i) const { return dOf(M, i) * c[i - 1]; }
  std::string str() const;
};

}  // namespace skr
