#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <mutex>
#include <thread>
#include <vector>

#include "osborn/error.hpp"
#include "osborn/identities.hpp"
#include "osborn/properties.hpp"
#include "osborn/table.hpp"

namespace osborn {

/// Conjunction of identity tags and negated tags, e.g. "OS2 & !LSIP".
struct Filter {
  std::vector<IdentityId> require;
  std::vector<IdentityId> forbid;

  bool empty() const noexcept { return require.empty() && forbid.empty(); }

  bool matches(const LoopTable& l) const {
    for (IdentityId id : require)
      if (!holds(l, id)) return false;
    for (IdentityId id : forbid)
      if (holds(l, id)) return false;
    return true;
  }

  /// Canonical spelling; the empty filter prints as "*".
  std::string to_string() const {
    std::string s;
    for (IdentityId id : require) s += (s.empty() ? "" : " & ") + std::string(name(id));
    for (IdentityId id : forbid) s += (s.empty() ? "!" : " & !") + std::string(name(id));
    return s.empty() ? "*" : s;
  }
};

/// Terms are separated by '&', ',' or whitespace; '!' negates a tag. No
/// parentheses and no disjunction. "" and "*" denote the empty filter.
inline Filter parse_filter(std::string_view expr) {
  Filter f;
  std::string term;
  auto flush = [&] {
    if (term.empty() || term == "*") {
      term.clear();
      return;
    }
    if (term[0] == '!') {
      f.forbid.push_back(identity_from_name(term.substr(1)));
    } else {
      f.require.push_back(identity_from_name(term));
    }
    term.clear();
  };
  for (char c : expr) {
    if (c == '&' || c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      term += c;
    }
  }
  flush();
  return f;
}

struct SearchOptions {
  /// Prune with partial-table checks of the required identities.
  bool prefilter = true;
  std::optional<std::size_t> limit;
  std::size_t max_unfiltered_order = 7;
  std::size_t max_filtered_order = 12;
  unsigned jobs = 1;
  /// Search one row 1 per class under relabelings fixing e and 1, then expand
  /// each hit over all relabelings fixing e. Output is unchanged.
  bool symmetry = true;
};

/// Loops of one order passing a filter, in enumeration order.
struct Catalog {
  std::size_t order = 0;
  std::string filter = "*";
  std::vector<LoopTable> loops;
  std::uint64_t digest = 0;

  std::size_t size() const noexcept { return loops.size(); }
};

/// Order-sensitive FNV-1a over member digests, so identical member lists in
/// identical order give identical catalog digests.
inline std::uint64_t catalog_digest(const std::vector<LoopTable>& loops) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& l : loops) {
    std::uint64_t d = digest(l);
    for (int i = 0; i < 8; ++i) {
      h ^= (d >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

namespace detail {

/// Backtracking over reduced Latin squares, cells filled row-major with
/// ascending candidates.
class ReducedSquareSearch {
 public:
  using Visitor = std::function<bool(const LoopTable&)>;

  ReducedSquareSearch(std::size_t n, const Filter& filter, bool prefilter)
      : n_(n), filter_(filter), prefilter_(prefilter) {
    if (n == 0 || n > 32) throw OrderTooLarge(n, 32);
    cells_.assign(n * n, kUndefined);
    rowpos_.assign(n * n, kUndefined);
    colpos_.assign(n * n, kUndefined);
    row_used_.assign(n, 0);
    col_used_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      assign(0, i, static_cast<Element>(i));
      if (i) assign(i, 0, static_cast<Element>(i));
    }
    if (prefilter_) {
      for (IdentityId id : filter_.require) {
        if (id == IdentityId::COMM) force_comm_ = true;
        if (id == IdentityId::EXP2) force_exp2_ = true;
      }
    }
  }

  /// Visits every matching loop; the visitor returns false to stop early.
  void run(const Visitor& visit) {
    visit_ = &visit;
    stopped_ = false;
    if (n_ == 1) {
      emit();
      return;
    }
    fill(1, 1);
  }

  /// Completions of row 1 that survive the prefilter, in search order. Each is
  /// an independent partition of the search space.
  std::vector<std::vector<Element>> first_row_partitions() {
    std::vector<std::vector<Element>> parts;
    if (n_ <= 2) return parts;
    partition_sink_ = &parts;
    fill(1, 1);
    partition_sink_ = nullptr;
    return parts;
  }

  /// Searches the subtree below a fixed row 1.
  void run_partition(const std::vector<Element>& row1, const Visitor& visit) {
    visit_ = &visit;
    stopped_ = false;
    for (std::size_t c = 1; c < n_; ++c) assign(1, c, row1[c]);
    fill(2, 1);
    for (std::size_t c = 1; c < n_; ++c) unassign(1, c);
  }

 private:
  void assign(std::size_t r, std::size_t c, Element v) {
    cells_[r * n_ + c] = v;
    rowpos_[r * n_ + v] = static_cast<Element>(c);
    colpos_[c * n_ + v] = static_cast<Element>(r);
    row_used_[r] |= 1ULL << v;
    col_used_[c] |= 1ULL << v;
  }

  void unassign(std::size_t r, std::size_t c) {
    const Element v = cells_[r * n_ + c];
    cells_[r * n_ + c] = kUndefined;
    rowpos_[r * n_ + v] = kUndefined;
    colpos_[c * n_ + v] = kUndefined;
    row_used_[r] &= ~(1ULL << v);
    col_used_[c] &= ~(1ULL << v);
  }

  bool cell_allowed(std::size_t r, std::size_t c, Element v) const {
    if (force_exp2_ && r == c && v != 0) return false;
    if (force_exp2_ && r != c && v == 0) return false;
    if (force_comm_ && c < r && cells_[c * n_ + r] != v) return false;
    return true;
  }

  /// Partial check of every required identity once a row is complete.
  bool row_consistent() const {
    const PartialOps ops{n_, cells_.data(), rowpos_.data(), colpos_.data()};
    for (IdentityId id : filter_.require) {
      const IdentityInfo& inf = info(id);
      const std::size_t ny = inf.arity >= 2 ? n_ : 1;
      const std::size_t nz = inf.arity >= 3 ? n_ : 1;
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < ny; ++y)
          for (std::size_t z = 0; z < nz; ++z)
            if (inf.partial(ops, static_cast<Element>(x), static_cast<Element>(y), static_cast<Element>(z)) ==
                Tri::fails)
              return false;
    }
    return true;
  }

  void fill(std::size_t r, std::size_t c) {
    if (stopped_) return;
    if (c == n_) {
      if (prefilter_ && !row_consistent()) return;
      if (partition_sink_ && r == 1) {
        partition_sink_->emplace_back(cells_.begin() + static_cast<std::ptrdiff_t>(n_),
                                      cells_.begin() + static_cast<std::ptrdiff_t>(2 * n_));
        return;
      }
      if (r + 1 == n_) {
        emit();
      } else {
        fill(r + 1, 1);
      }
      return;
    }
    const std::uint64_t used = row_used_[r] | col_used_[c];
    for (std::size_t v = 0; v < n_; ++v) {
      if (used & (1ULL << v)) continue;
      if (prefilter_ && !cell_allowed(r, c, static_cast<Element>(v))) continue;
      assign(r, c, static_cast<Element>(v));
      fill(r, c + 1);
      unassign(r, c);
      if (stopped_) return;
    }
  }

  void emit() {
    LoopTable l = LoopTable::from_cells(n_, cells_);
    if (!filter_.matches(l)) return;
    if (!(*visit_)(l)) stopped_ = true;
  }

  std::size_t n_;
  const Filter& filter_;
  bool prefilter_;
  bool force_comm_ = false;
  bool force_exp2_ = false;
  std::vector<Element> cells_, rowpos_, colpos_;
  std::vector<std::uint64_t> row_used_, col_used_;
  const Visitor* visit_ = nullptr;
  bool stopped_ = false;
  std::vector<std::vector<Element>>* partition_sink_ = nullptr;
};

inline void check_bound(std::size_t n, const Filter& filter, const SearchOptions& opts) {
  if (n == 0) throw BadDimensions("order must be positive");
  const bool pruned = opts.prefilter && !filter.require.empty();
  const std::size_t bound = pruned ? opts.max_filtered_order : opts.max_unfiltered_order;
  if (n > bound) throw OrderTooLarge(n, bound);
}

}  // namespace detail

/// Streams canonical loops of order n passing `filter` in enumeration order.
/// The visitor returns false to stop.
inline void for_each_loop(std::size_t n, const Filter& filter, const SearchOptions& opts,
                          const std::function<bool(const LoopTable&)>& visit) {
  detail::check_bound(n, filter, opts);
  std::size_t emitted = 0;
  auto limited = [&](const LoopTable& l) {
    if (opts.limit && emitted >= *opts.limit) return false;
    ++emitted;
    if (!visit(l)) return false;
    return !(opts.limit && emitted >= *opts.limit);
  };
  detail::ReducedSquareSearch search(n, filter, opts.prefilter);
  search.run(limited);
}

namespace detail {

/// The table with every label a replaced by perm[a]; perm[0] must be 0.
inline std::vector<Element> relabel_cells(const LoopTable& l, const std::vector<Element>& perm) {
  const std::size_t n = l.order();
  std::vector<Element> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[perm[a] * n + perm[b]] = perm[l.mul(static_cast<Element>(a), static_cast<Element>(b))];
  return out;
}

/// True iff row 1 is the least of its images under relabelings fixing 0 and 1.
inline bool is_class_leader(const std::vector<Element>& row1) {
  const std::size_t n = row1.size();
  std::vector<Element> perm(n), image(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Element>(i);
  do {
    for (std::size_t c = 0; c < n; ++c) image[perm[c]] = perm[row1[c]];
    if (image < row1) return false;
  } while (std::next_permutation(perm.begin() + 2, perm.end()));
  return true;
}

/// Runs the search on each partition, `jobs` at a time, merged in partition order.
inline std::vector<LoopTable> search_partitions(std::size_t n, const Filter& filter, bool prefilter,
                                                const std::vector<std::vector<Element>>& parts, unsigned jobs) {
  std::vector<std::vector<LoopTable>> found(parts.size());
  std::size_t next = 0;
  std::mutex m;
  auto worker = [&] {
    ReducedSquareSearch local(n, filter, prefilter);
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(m);
        if (next == parts.size()) return;
        i = next++;
      }
      local.run_partition(parts[i], [&](const LoopTable& l) {
        found[i].push_back(l);
        return true;
      });
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < std::max(1U, jobs); ++j) pool.emplace_back(worker);
  }
  std::vector<LoopTable> out;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
  return out;
}

/// Every relabeling fixing 0 of every loop, deduplicated, in cell order (which
/// is the order of the plain backtracking search).
inline std::vector<LoopTable> expand_orbits(std::size_t n, const std::vector<LoopTable>& reps) {
  std::vector<std::vector<Element>> tables;
  std::vector<Element> perm(n);
  for (const auto& l : reps) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Element>(i);
    do {
      tables.push_back(relabel_cells(l, perm));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  std::vector<LoopTable> out;
  out.reserve(tables.size());
  for (const auto& t : tables) out.push_back(LoopTable::from_cells(n, t));
  return out;
}

}  // namespace detail

/// Collects a catalog, identical for every job count and symmetry setting.
/// With jobs > 1 the search space is split on the completions of row 1 and
/// merged back in partition order.
inline Catalog enumerate_loops(std::size_t n, const Filter& filter = {}, const SearchOptions& opts = {}) {
  detail::check_bound(n, filter, opts);
  Catalog cat;
  cat.order = n;
  cat.filter = filter.to_string();

  if (opts.limit || n <= 2 || (opts.jobs <= 1 && !opts.symmetry)) {
    for_each_loop(n, filter, opts, [&](const LoopTable& l) {
      cat.loops.push_back(l);
      return true;
    });
  } else {
    auto parts = detail::ReducedSquareSearch(n, filter, opts.prefilter).first_row_partitions();
    if (opts.symmetry) {
      std::erase_if(parts, [](const std::vector<Element>& row1) { return !detail::is_class_leader(row1); });
      cat.loops = detail::expand_orbits(n, detail::search_partitions(n, filter, opts.prefilter, parts, opts.jobs));
    } else {
      cat.loops = detail::search_partitions(n, filter, opts.prefilter, parts, opts.jobs);
    }
  }
  cat.digest = catalog_digest(cat.loops);
  return cat;
}

/// The least relabeling of `l` fixing e, compared cell by cell. Two loops are
/// isomorphic iff their canonical images are equal.
inline LoopTable canonical_image(const LoopTable& l) {
  const std::size_t n = l.order();
  if (n > 10) throw OrderTooLarge(n, 10);
  std::vector<Element> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Element>(i);
  std::vector<Element> best(l.cells().begin(), l.cells().end());
  do {
    auto t = detail::relabel_cells(l, perm);
    if (t < best) best = std::move(t);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return LoopTable::from_cells(n, std::move(best));
}

/// One canonical image per isomorphism class, sorted by cells.
inline std::vector<LoopTable> isomorphism_classes(std::span<const LoopTable> loops) {
  std::vector<std::vector<Element>> seen;
  for (const auto& l : loops) {
    const LoopTable c = canonical_image(l);
    seen.emplace_back(c.cells().begin(), c.cells().end());
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<LoopTable> out;
  for (auto& t : seen) {
    const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(t.size()))));
    out.push_back(LoopTable::from_cells(n, std::move(t)));
  }
  return out;
}

/// First loop over orders 1..n_max, in enumeration order, passing `want`.
inline std::optional<LoopTable> find_example(std::size_t n_max, const Filter& want, SearchOptions opts = {}) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (opts.symmetry && n > 2) {
      SearchOptions full = opts;
      full.limit.reset();
      Catalog cat = enumerate_loops(n, want, full);
      if (!cat.loops.empty()) return cat.loops.front();
      continue;
    }
    std::optional<LoopTable> hit;
    opts.limit = 1;
    for_each_loop(n, want, opts, [&](const LoopTable& l) {
      hit = l;
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace osborn
