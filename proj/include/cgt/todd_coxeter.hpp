#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/group.hpp"
#include "cgt/permutation.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

// Working state of a coset enumeration over the trivial subgroup.
//
// Each coset row has one column per generator and per inverse generator
// (column 2g acts by generator g, column 2g+1 by its inverse). Coset ids are
// never reused; merged cosets are redirected through a union-find whose
// survivor is always the smaller id, which keeps the enumeration
// deterministic. Defined entries are kept mutually consistent: whenever
// row[c][x] = d is written, row[d][inv(x)] = c is written with it.
class CosetTable {
 public:
  static constexpr std::int32_t kUndef = -1;

  CosetTable(std::size_t num_generators, std::size_t max_cosets)
      : ngens_(num_generators), max_cosets_(max_cosets) {
    if (max_cosets_ < 1) throw BadParameter("max_cosets must be >= 1");
    define_root();
  }

  std::size_t num_cosets_defined() const { return parent_.size(); }
  std::size_t live_count() const { return live_count_; }

  std::size_t find(std::size_t c) const {
    while (parent_[c] != c) {
      c = parent_[c];
    }
    return c;
  }

  bool is_live(std::size_t c) const { return parent_[c] == c; }

  // Raw column entry normalized through the union-find; kUndef if unset.
  std::int32_t lookup(std::size_t c, std::size_t col) const {
    std::int32_t t = rows_[c][col];
    return t == kUndef ? kUndef : static_cast<std::int32_t>(find(static_cast<std::size_t>(t)));
  }

  // Scans relator w from coset c, defining cosets to fill gaps (HLT style)
  // and processing any coincidence it uncovers.
  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = find(c);
    std::size_t b = f;
    std::size_t i = 0;
    std::size_t j = w.size() - 1;
    while (true) {
      while (i <= j) {
        std::int32_t t = lookup(f, w[i]);
        if (t == kUndef) break;
        f = static_cast<std::size_t>(t);
        ++i;
      }
      if (i > j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j >= i) {
        std::int32_t t = lookup(b, w[j] ^ 1);
        if (t == kUndef) break;
        b = static_cast<std::size_t>(t);
        if (j == i) {
          // backward crossed the forward position
          coincide(f, b);
          return;
        }
        --j;
      }
      if (i == j) {
        set(f, w[i], b);
        return;
      }
      set(f, w[i], define());
    }
  }

  // Defines a fresh coset; throws once the budget is exhausted.
  std::size_t define() {
    if (parent_.size() >= max_cosets_) throw CosetLimitExceeded(max_cosets_);
    return define_root();
  }

  void set(std::size_t c, std::size_t col, std::size_t d) {
    rows_[c][col] = static_cast<std::int32_t>(d);
    rows_[d][col ^ 1] = static_cast<std::int32_t>(c);
  }

  std::int32_t raw(std::size_t c, std::size_t col) const { return rows_[c][col]; }

  // Merges two cosets and replays the dead coset's row onto the survivor,
  // queueing any further coincidences this uncovers.
  void coincide(std::size_t a, std::size_t b) {
    std::vector<std::size_t> dead_queue;
    merge(a, b, dead_queue);
    while (!dead_queue.empty()) {
      std::size_t dead = dead_queue.back();
      dead_queue.pop_back();
      for (std::size_t col = 0; col < 2 * ngens_; ++col) {
        std::int32_t t = rows_[dead][col];
        if (t == kUndef) continue;
        rows_[dead][col] = kUndef;
        std::size_t d = static_cast<std::size_t>(t);
        if (rows_[d][col ^ 1] == static_cast<std::int32_t>(dead))
          rows_[d][col ^ 1] = kUndef;
        std::size_t mu = find(dead);
        std::size_t nu = find(d);
        std::int32_t existing = rows_[mu][col];
        if (existing != kUndef) {
          merge(nu, static_cast<std::size_t>(existing), dead_queue);
        } else if (rows_[nu][col ^ 1] != kUndef) {
          merge(mu, static_cast<std::size_t>(rows_[nu][col ^ 1]), dead_queue);
        } else {
          set(mu, col, nu);
        }
      }
    }
  }

  bool row_complete(std::size_t c) const {
    for (std::size_t col = 0; col < 2 * ngens_; ++col)
      if (rows_[c][col] == kUndef) return false;
    return true;
  }

  std::vector<std::size_t> live_cosets() const {
    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (is_live(c)) live.push_back(c);
    return live;
  }

 private:
  std::size_t define_root() {
    std::size_t id = parent_.size();
    parent_.push_back(id);
    rows_.emplace_back(2 * ngens_, kUndef);
    ++live_count_;
    return id;
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& dead_queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_count_;
    dead_queue.push_back(b);
  }

  std::size_t ngens_;
  std::size_t max_cosets_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::int32_t>> rows_;
  std::size_t live_count_ = 0;
};

namespace detail {

inline std::size_t letter_column(const Letter& l) {
  return 2 * static_cast<std::size_t>(l.gen) + (l.inverse ? 1 : 0);
}

}  // namespace detail

// Enumerates the cosets of the trivial subgroup of the presented group by
// HLT-style relator scanning: cosets are processed in id order, each relator
// is scanned (defining cosets on demand) in relator order, and any remaining
// undefined generator images are then filled. Passes repeat until a full
// pass changes nothing. Coincidences are processed eagerly.
//
// On completion the generator actions on live cosets are the regular
// permutation representation, so the closure of those permutations has order
// equal to the live coset count; its Cayley table is returned. The
// enumeration never returns a partial group: exceeding max_cosets throws.
inline GroupTable todd_coxeter(const Presentation& p,
                               std::size_t max_cosets = kDefaultMaxCosets) {
  if (p.generators.empty()) throw EmptyGeneratorList("presentation has no generators");

  std::vector<std::vector<std::size_t>> relators;
  relators.reserve(p.relators.size());
  for (const Word& w : p.relators) {
    std::vector<std::size_t> cols;
    cols.reserve(w.size());
    for (const Letter& l : w) cols.push_back(detail::letter_column(l));
    relators.push_back(std::move(cols));
  }

  CosetTable table(p.generators.size(), max_cosets);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < table.num_cosets_defined(); ++c) {
      if (!table.is_live(c)) continue;
      std::size_t defined_before = table.num_cosets_defined();
      std::size_t live_before = table.live_count();
      for (const auto& rel : relators) {
        table.scan_and_fill(c, rel);
        if (!table.is_live(c)) break;
      }
      if (table.is_live(c))
        for (std::size_t col = 0; col < 2 * p.generators.size(); ++col)
          if (table.raw(c, col) == CosetTable::kUndef) table.set(c, col, table.define());
      if (table.num_cosets_defined() != defined_before ||
          table.live_count() != live_before)
        changed = true;
    }
  }

  const auto live = table.live_cosets();
  const std::size_t n = live.size();
  std::vector<std::size_t> dense(table.num_cosets_defined(), 0);
  for (std::size_t i = 0; i < n; ++i) dense[live[i]] = i;

  // Closed and stable; check the table really is a permutation action under
  // which every relator fixes every coset.
  for (std::size_t c : live) {
    if (!table.row_complete(c))
      throw Error("coset enumeration stabilized with an incomplete row");
    for (const auto& rel : relators) {
      std::size_t x = c;
      for (std::size_t col : rel) x = static_cast<std::size_t>(table.lookup(x, col));
      if (x != c) throw Error("coset enumeration produced an inconsistent table");
    }
  }

  std::vector<Permutation> gens;
  gens.reserve(p.generators.size());
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    Permutation perm;
    perm.images.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      perm.images[i] =
          static_cast<std::uint32_t>(dense[static_cast<std::size_t>(table.lookup(live[i], 2 * g))]);
    if (!perm.is_bijection())
      throw Error("coset enumeration produced a non-bijective generator action");
    gens.push_back(std::move(perm));
  }

  std::vector<Permutation> elems;
  try {
    elems = closure_from_generators(gens, n, n + 1);
  } catch (const CapExceeded&) {
    throw Error("generator actions do not form a regular representation");
  }
  if (elems.size() != n)
    throw Error("closure of generator actions has order " +
                std::to_string(elems.size()) + ", expected " + std::to_string(n));
  return cayley_from_elements(elems, to_string(p), n);
}

}  // namespace cgt
