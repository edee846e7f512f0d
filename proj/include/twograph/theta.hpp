#pragma once

#include <array>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace twograph {

// The commutation permutation of a single-vertex 2-graph: a bijection of
// {1..m} x {1..n} onto itself.  theta(i,j) = (i',j') encodes the relation
// under which a blue letter e_i followed by a red letter f_j equals the
// red letter f_{j'} followed by the blue letter e_{i'}.
//
// Indices are 1-based throughout, matching the usual e_1..e_m, f_1..f_n
// labelling of the edges.
class ThetaSpec {
 public:
  // theta(i,j) = (i,j): blue and red letters commute letterwise.
  static ThetaSpec identity(int m, int n);

  // theta(i,j) = (j,i); only defined when m == n.
  static ThetaSpec flip(int m, int n);

  // Explicit mapping: entries are {i, j, i', j'}.  Every (i,j) must appear
  // exactly once and the image must be a bijection.
  static ThetaSpec from_entries(int m, int n,
                                const std::vector<std::array<int, 4>>& entries);

  // Uniformly random permutation of m x n.
  static ThetaSpec random(int m, int n, std::mt19937& rng);

  // Text format: first line "m n", then exactly m*n lines "i j i' j'".
  static ThetaSpec parse(std::istream& in);

  // Resolve a CLI-style source: the builtin names "id" and "flip", or a
  // path to a file in the text format above.  For builtins m and n are
  // required; for files they act as a cross-check when non-zero.
  static ThetaSpec load(const std::string& source, int m = 0, int n = 0);

  int m() const { return m_; }
  int n() const { return n_; }

  // theta(i,j)
  std::pair<int, int> apply(int i, int j) const;
  // theta^{-1}(i',j')
  std::pair<int, int> invert(int i, int j) const;

  bool is_identity() const;

  bool operator==(const ThetaSpec& other) const = default;

 private:
  ThetaSpec(int m, int n) : m_(m), n_(n) {}

  int slot(int i, int j) const { return (i - 1) * n_ + (j - 1); }
  void check_indices(int i, int j) const;

  int m_ = 0;
  int n_ = 0;
  std::vector<std::pair<int, int>> fwd_;
  std::vector<std::pair<int, int>> inv_;
};

}  // namespace twograph
