#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

// A permutation of {0..d-1}, stored as the image sequence.
struct Permutation {
  std::vector<std::uint32_t> images;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images[i] = static_cast<std::uint32_t>(i);
    return p;
  }

  // Builds the product of the given cycles on {0..degree-1}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::uint32_t from = cycle[i];
        std::uint32_t to = cycle[(i + 1) % cycle.size()];
        if (from >= degree || to >= degree)
          throw BadParameter("cycle entry " + std::to_string(from) +
                             " outside domain of size " + std::to_string(degree));
        p.images[from] = to;
      }
    }
    if (!p.is_bijection())
      throw BadParameter("cycles do not describe a permutation (repeated point)");
    return p;
  }

  std::size_t degree() const { return images.size(); }

  std::uint32_t operator()(std::uint32_t i) const { return images[i]; }

  bool is_bijection() const {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      p.images[images[i]] = static_cast<std::uint32_t>(i);
    return p;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
};

// Applies p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r;
  r.images.resize(p.images.size());
  for (std::size_t i = 0; i < p.images.size(); ++i) r.images[i] = q.images[p.images[i]];
  return r;
}

namespace detail {
struct ImageHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace detail

// Closure of the generators under composition, by breadth-first search from
// the identity. Element order is the discovery order, so it is deterministic
// for a fixed generator list. Default cap 10^6: exceeding it is an error,
// never a truncated result.
inline std::vector<Permutation> closure_from_generators(
    const std::vector<Permutation>& gens, std::size_t degree,
    std::size_t cap = 1000000) {
  if (degree == 0) throw EmptyDomain("permutation domain must have size >= 1");
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw BadParameter("generator degree " + std::to_string(g.degree()) +
                         " does not match domain size " + std::to_string(degree));
    if (!g.is_bijection()) throw BadParameter("generator is not a bijection");
  }

  std::vector<Permutation> elems;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::ImageHash> index;
  elems.push_back(Permutation::identity(degree));
  index.emplace(elems[0].images, 0);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = compose(elems[i], g);
      if (index.emplace(next.images, static_cast<std::uint32_t>(elems.size())).second) {
        if (elems.size() >= cap)
          throw CapExceeded("permutation closure exceeded cap of " + std::to_string(cap));
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

}  // namespace cgt
