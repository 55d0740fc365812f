#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "osborn/error.hpp"
#include "osborn/permutation.hpp"

namespace osborn {

/// Validated Latin square: table[x][y] = x.y, with O(1) left and right
/// division through precomputed inverse rows and columns.
class QuasigroupTable {
 public:
  QuasigroupTable() = default;

  std::size_t order() const noexcept { return n_; }
  Element mul(Element x, Element y) const { return cells_[idx(x, y)]; }
  /// The unique y with x.y = z.
  Element ldiv(Element x, Element z) const { return ldiv_[idx(x, z)]; }
  /// The unique x with x.y = z.
  Element rdiv(Element z, Element y) const { return rdiv_[idx(z, y)]; }

  const std::vector<Element>& cells() const noexcept { return cells_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) out[x][y] = cells_[x * n_ + y];
    return out;
  }

  friend bool operator==(const QuasigroupTable& a, const QuasigroupTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

  /// Builds from a flat row-major cell array; throws on non-Latin input.
  static QuasigroupTable from_cells(std::size_t n, std::vector<Element> cells) {
    if (n == 0 || n > kMaxOrder) throw BadDimensions("order must be in [1, 255]");
    if (cells.size() != n * n) throw BadDimensions("cell count does not match order");
    QuasigroupTable q;
    q.n_ = n;
    q.cells_ = std::move(cells);
    q.ldiv_.assign(n * n, kUndefined);
    q.rdiv_.assign(n * n, kUndefined);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Element v = q.cells_[x * n + y];
        if (v >= n) throw BadDimensions("entry " + std::to_string(v) + " out of range");
        if (q.ldiv_[x * n + v] != kUndefined) throw NotLatinSquare(NotLatinSquare::Axis::row, x, v);
        q.ldiv_[x * n + v] = static_cast<Element>(y);
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        Element v = q.cells_[x * n + y];
        if (q.rdiv_[v * n + y] != kUndefined) throw NotLatinSquare(NotLatinSquare::Axis::column, y, v);
        q.rdiv_[v * n + y] = static_cast<Element>(x);
      }
    }
    return q;
  }

 private:
  std::size_t idx(Element a, Element b) const { return static_cast<std::size_t>(a) * n_ + b; }

  std::size_t n_ = 0;
  std::vector<Element> cells_;
  std::vector<Element> ldiv_;  // ldiv_[x*n + z] = x \ z
  std::vector<Element> rdiv_;  // rdiv_[z*n + y] = z / y
};

/// make_table: validates an n x n integer grid.
inline QuasigroupTable make_table(std::size_t n, const std::vector<std::vector<int>>& rows) {
  if (n == 0 || n > kMaxOrder) throw BadDimensions("order must be in [1, 255]");
  if (rows.size() != n) throw BadDimensions("expected " + std::to_string(n) + " rows");
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw BadDimensions("ragged grid");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw BadDimensions("entry " + std::to_string(v) + " out of range");
      cells.push_back(static_cast<Element>(v));
    }
  }
  return QuasigroupTable::from_cells(n, std::move(cells));
}

/// A loop in canonical form: the identity is element 0, so row 0 and column 0
/// are the identity permutation.
class LoopTable {
 public:
  LoopTable() = default;

  static constexpr Element e = 0;

  std::size_t order() const noexcept { return q_.order(); }
  Element identity() const noexcept { return e; }
  Element mul(Element x, Element y) const { return q_.mul(x, y); }
  Element ldiv(Element x, Element z) const { return q_.ldiv(x, z); }
  Element rdiv(Element z, Element y) const { return q_.rdiv(z, y); }
  /// x^lambda: the unique element with x^lambda . x = e.
  Element lam(Element x) const { return lam_[x]; }
  /// x^rho: the unique element with x . x^rho = e.
  Element rho(Element x) const { return rho_[x]; }

  const QuasigroupTable& quasigroup() const noexcept { return q_; }
  const std::vector<Element>& cells() const noexcept { return q_.cells(); }
  std::vector<std::vector<int>> rows() const { return q_.rows(); }

  /// Map from the labels of the table this loop was built from to canonical
  /// labels; identity when the input was already canonical.
  const Permutation& relabeling() const noexcept { return relabeling_; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) { return a.q_ == b.q_; }

  /// Wraps a quasigroup whose element 0 is already a two-sided identity.
  static LoopTable from_canonical(QuasigroupTable q) {
    const std::size_t n = q.order();
    for (std::size_t x = 0; x < n; ++x) {
      if (q.mul(0, static_cast<Element>(x)) != x || q.mul(static_cast<Element>(x), 0) != x) {
        throw NoIdentity();
      }
    }
    LoopTable l;
    l.q_ = std::move(q);
    l.relabeling_ = Permutation::identity(n);
    l.lam_.resize(n);
    l.rho_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      l.lam_[x] = l.q_.rdiv(e, static_cast<Element>(x));
      l.rho_[x] = l.q_.ldiv(static_cast<Element>(x), e);
    }
    return l;
  }

  /// Trusted fast path for enumeration output.
  static LoopTable from_cells(std::size_t n, std::vector<Element> cells) {
    return from_canonical(QuasigroupTable::from_cells(n, std::move(cells)));
  }

 private:
  friend LoopTable as_loop(const QuasigroupTable& q);

  QuasigroupTable q_;
  Permutation relabeling_;
  std::vector<Element> lam_;
  std::vector<Element> rho_;
};

/// Detects the two-sided identity and relabels it to 0 by swapping labels
/// 0 and e. The swap is recorded as the loop's relabeling.
inline LoopTable as_loop(const QuasigroupTable& q) {
  const std::size_t n = q.order();
  std::size_t found = n;
  for (std::size_t c = 0; c < n && found == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = q.mul(static_cast<Element>(c), static_cast<Element>(x)) == x &&
           q.mul(static_cast<Element>(x), static_cast<Element>(c)) == x;
    }
    if (ok) found = c;
  }
  if (found == n) throw NoIdentity();

  std::vector<Element> relabel(n);
  for (std::size_t x = 0; x < n; ++x) relabel[x] = static_cast<Element>(x);
  std::swap(relabel[0], relabel[found]);

  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[relabel[x] * n + relabel[y]] = relabel[q.mul(static_cast<Element>(x), static_cast<Element>(y))];
    }
  }
  LoopTable l = LoopTable::from_cells(n, std::move(cells));
  l.relabeling_ = Permutation::unchecked(std::move(relabel));
  return l;
}

/// Stable 64-bit FNV-1a content hash of a table.
inline std::uint64_t digest(const LoopTable& l) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ULL;
  };
  feed(static_cast<std::uint8_t>(l.order()));
  for (Element v : l.cells()) feed(v);
  return h;
}

inline std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Text format: line 1 holds n, then n lines of n whitespace-separated entries.
// Blank lines and lines starting with '#' are ignored.

inline std::string serialize(const QuasigroupTable& q) {
  std::ostringstream out;
  const std::size_t n = q.order();
  out << n << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << static_cast<int>(q.mul(static_cast<Element>(x), static_cast<Element>(y)));
    }
    out << '\n';
  }
  return out.str();
}

inline std::string serialize(const LoopTable& l) { return serialize(l.quasigroup()); }

inline QuasigroupTable parse_table(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(source, lineno, "missing order line");
  long long n = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || (ls >> extra)) throw ParseError(source, lineno, "first line must be a single integer order");
  }
  if (n <= 0 || n > static_cast<long long>(kMaxOrder)) throw ParseError(source, lineno, "order out of range [1, 255]");
  const auto order = static_cast<std::size_t>(n);

  std::vector<Element> cells;
  cells.reserve(order * order);
  std::vector<std::size_t> row_lines;
  for (std::size_t r = 0; r < order; ++r) {
    if (!next_line()) throw ParseError(source, lineno + 1, "expected " + std::to_string(order) + " rows, got " + std::to_string(r));
    row_lines.push_back(lineno);
    std::istringstream ls(line);
    std::string tok;
    std::size_t count = 0;
    std::vector<bool> seen(order, false);
    while (ls >> tok) {
      long long v = 0;
      try {
        std::size_t pos = 0;
        v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(source, lineno, "column " + std::to_string(count) + ": not an integer '" + tok + "'");
      }
      if (count >= order) throw ParseError(source, lineno, "row has more than " + std::to_string(order) + " entries");
      if (v < 0 || v >= n) throw ParseError(source, lineno, "column " + std::to_string(count) + ": entry " + tok + " out of range");
      if (seen[v]) throw ParseError(source, lineno, "column " + std::to_string(count) + ": row repeats value " + tok);
      seen[v] = true;
      cells.push_back(static_cast<Element>(v));
      ++count;
    }
    if (count != order) throw ParseError(source, lineno, "row has " + std::to_string(count) + " entries, expected " + std::to_string(order));
  }
  if (next_line()) throw ParseError(source, lineno, "trailing content after " + std::to_string(order) + " rows");

  for (std::size_t c = 0; c < order; ++c) {
    std::vector<bool> seen(order, false);
    for (std::size_t r = 0; r < order; ++r) {
      Element v = cells[r * order + c];
      if (seen[v]) {
        throw ParseError(source, row_lines[r], "column " + std::to_string(c) + ": column repeats value " + std::to_string(v));
      }
      seen[v] = true;
    }
  }
  return QuasigroupTable::from_cells(order, std::move(cells));
}

inline QuasigroupTable parse_table(const std::string& text, const std::string& source = "<string>") {
  std::istringstream in(text);
  return parse_table(in, source);
}

inline QuasigroupTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_table(in, path);
}

}  // namespace osborn
