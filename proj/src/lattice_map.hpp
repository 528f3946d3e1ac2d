#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace diam::detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Interns fixed-width int64 tuples and hands out dense slot ids in insertion
// order. Keys live in one flat buffer; the hash set stores slot ids only.
class LatticeMap {
 public:
  LatticeMap(std::size_t width, std::size_t expected)
      : width_(width), set_(expected, Hash{this}, Eq{this}) {
    keys_.reserve(expected * width);
  }

  // Returns (slot, inserted).
  std::pair<std::size_t, bool> insert(std::span<const std::int64_t> key) {
    const std::size_t slot = size();
    keys_.insert(keys_.end(), key.begin(), key.end());
    auto [it, inserted] = set_.insert(slot);
    if (!inserted) keys_.resize(keys_.size() - width_);
    return {*it, inserted};
  }

  std::size_t size() const { return width_ == 0 ? set_.size() : keys_.size() / width_; }

  std::span<const std::int64_t> key(std::size_t slot) const {
    return {keys_.data() + slot * width_, width_};
  }

 private:
  struct Hash {
    const LatticeMap* self;
    std::size_t operator()(std::size_t slot) const {
      std::uint64_t h = 0x84222325cbf29ce4ULL;
      for (std::int64_t v : self->key(slot)) h = mix64(h ^ static_cast<std::uint64_t>(v));
      return static_cast<std::size_t>(h);
    }
  };
  struct Eq {
    const LatticeMap* self;
    bool operator()(std::size_t a, std::size_t b) const {
      const auto ka = self->key(a);
      const auto kb = self->key(b);
      for (std::size_t k = 0; k < ka.size(); ++k)
        if (ka[k] != kb[k]) return false;
      return true;
    }
  };

  std::size_t width_;
  std::vector<std::int64_t> keys_;
  std::unordered_set<std::size_t, Hash, Eq> set_;
};

}  // namespace diam::detail
