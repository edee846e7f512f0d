#include "twograph/theta.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "twograph/errors.hpp"

namespace twograph {

namespace {

void check_sizes(int m, int n) {
  if (m < 1 || n < 1)
    throw PreconditionError("theta spec requires m >= 1 and n >= 1");
}

}  // namespace

void ThetaSpec::check_indices(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_)
    throw PreconditionError("letter index out of range: (e" +
                            std::to_string(i) + ", f" + std::to_string(j) +
                            ") with m=" + std::to_string(m_) +
                            ", n=" + std::to_string(n_));
}

std::pair<int, int> ThetaSpec::apply(int i, int j) const {
  check_indices(i, j);
  return fwd_[slot(i, j)];
}

std::pair<int, int> ThetaSpec::invert(int i, int j) const {
  check_indices(i, j);
  return inv_[slot(i, j)];
}

bool ThetaSpec::is_identity() const {
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (fwd_[slot(i, j)] != std::pair{i, j}) return false;
  return true;
}

ThetaSpec ThetaSpec::identity(int m, int n) {
  check_sizes(m, n);
  ThetaSpec t(m, n);
  t.fwd_.resize(m * n);
  t.inv_.resize(m * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      t.fwd_[t.slot(i, j)] = {i, j};
      t.inv_[t.slot(i, j)] = {i, j};
    }
  return t;
}

ThetaSpec ThetaSpec::flip(int m, int n) {
  check_sizes(m, n);
  if (m != n)
    throw PreconditionError("the flip permutation requires m == n");
  ThetaSpec t(m, n);
  t.fwd_.resize(m * n);
  t.inv_.resize(m * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      t.fwd_[t.slot(i, j)] = {j, i};
      t.inv_[t.slot(i, j)] = {j, i};
    }
  return t;
}

ThetaSpec ThetaSpec::from_entries(
    int m, int n, const std::vector<std::array<int, 4>>& entries) {
  check_sizes(m, n);
  ThetaSpec t(m, n);
  t.fwd_.assign(m * n, {0, 0});
  t.inv_.assign(m * n, {0, 0});
  for (const auto& [i, j, ii, jj] : entries) {
    if (i < 1 || i > m || j < 1 || j > n || ii < 1 || ii > m || jj < 1 ||
        jj > n)
      throw PreconditionError("theta entry index out of range");
    if (t.fwd_[t.slot(i, j)] != std::pair{0, 0})
      throw PreconditionError("duplicate theta entry for (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
    if (t.inv_[t.slot(ii, jj)] != std::pair{0, 0})
      throw PreconditionError("theta image (" + std::to_string(ii) + "," +
                              std::to_string(jj) + ") assigned twice");
    t.fwd_[t.slot(i, j)] = {ii, jj};
    t.inv_[t.slot(ii, jj)] = {i, j};
  }
  for (const auto& p : t.fwd_)
    if (p == std::pair{0, 0})
      throw PreconditionError("theta entry missing; the mapping must be total");
  return t;
}

ThetaSpec ThetaSpec::random(int m, int n, std::mt19937& rng) {
  check_sizes(m, n);
  std::vector<std::pair<int, int>> image;
  image.reserve(m * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) image.emplace_back(i, j);
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<std::array<int, 4>> entries;
  entries.reserve(m * n);
  int k = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      entries.push_back({i, j, image[k].first, image[k].second});
      ++k;
    }
  return from_entries(m, n, entries);
}

ThetaSpec ThetaSpec::parse(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty theta spec", lineno + 1, 1);
  int m = 0, n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> m >> n) || m < 1 || n < 1)
      throw ParseError("expected header \"m n\" with positive counts", lineno,
                       1);
    std::string rest;
    if (ls >> rest)
      throw ParseError("trailing junk after header", lineno, 1);
  }

  std::vector<std::array<int, 4>> entries;
  for (int k = 0; k < m * n; ++k) {
    if (!next_line())
      throw ParseError("theta spec truncated: expected " +
                           std::to_string(m * n) + " entries, got " +
                           std::to_string(k),
                       lineno + 1, 1);
    std::istringstream ls(line);
    std::array<int, 4> e{};
    if (!(ls >> e[0] >> e[1] >> e[2] >> e[3]))
      throw ParseError("expected entry \"i j i' j'\"", lineno, 1);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing junk after entry", lineno, 1);
    entries.push_back(e);
  }
  if (next_line())
    throw ParseError("unexpected extra line in theta spec", lineno, 1);

  try {
    return from_entries(m, n, entries);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), lineno, 1);
  }
}

ThetaSpec ThetaSpec::load(const std::string& source, int m, int n) {
  if (source == "id" || source == "flip") {
    if (m < 1 || n < 1)
      throw PreconditionError("builtin theta \"" + source +
                              "\" requires explicit m and n");
    return source == "id" ? identity(m, n) : flip(m, n);
  }
  std::ifstream in(source);
  if (!in)
    throw ParseError("cannot open theta spec file: " + source, 0, 0);
  ThetaSpec t = parse(in);
  if ((m > 0 && m != t.m()) || (n > 0 && n != t.n()))
    throw PreconditionError("theta spec file declares m=" +
                            std::to_string(t.m()) + ", n=" +
                            std::to_string(t.n()) +
                            " which conflicts with the requested sizes");
  return t;
}

}  // namespace twograph
