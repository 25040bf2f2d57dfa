#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace nisq {

/// Qubit connection layout: a 1D chain, a rows x cols lattice, or all-to-all.
struct Topology {
  enum class Kind { chain, grid, full };

  Kind kind = Kind::chain;
  int n = 0;
  int rows = 0;  // grid only
  int cols = 0;  // grid only

  static Topology chain(int n) {
    if (n < 1) throw std::invalid_argument("chain topology needs n >= 1");
    return Topology{Kind::chain, n, 0, 0};
  }

  static Topology grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid topology needs rows, cols >= 1");
    return Topology{Kind::grid, rows * cols, rows, cols};
  }

  static Topology full(int n) {
    if (n < 1) throw std::invalid_argument("full topology needs n >= 1");
    return Topology{Kind::full, n, 0, 0};
  }

  // chain: |i-j| = 1; grid: Manhattan distance 1; full: any distinct pair
  bool adjacent(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) return false;
    switch (kind) {
      case Kind::chain: return std::abs(i - j) == 1;
      case Kind::grid: {
        const int ri = i / cols, ci = i % cols;
        const int rj = j / cols, cj = j % cols;
        return std::abs(ri - rj) + std::abs(ci - cj) == 1;
      }
      case Kind::full: return true;
    }
    return false;
  }

  std::string kind_name() const {
    switch (kind) {
      case Kind::chain: return "chain";
      case Kind::grid: return "grid";
      case Kind::full: return "full";
    }
    return "?";
  }
};

}  // namespace nisq
