#ifndef BENSON_BENSON_RUN_HPP
#define BENSON_BENSON_RUN_HPP

#include <cstring>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "benson/geometry.hpp"

namespace benson {

// The paper-style loops only require picking some unprocessed vertex;
// Fifo follows creation order, Lexmin the lexicographically smallest
// vertex (used to reproduce the worked-example traces).
enum class Selection { Fifo, Lexmin };

struct RunOptions {
  Selection selection = Selection::Fifo;
  int max_cuts = 10000;
};

// One loop turn: the queried vertex, its score (the P2 shift z for the
// primal loop, the coupling value phi for the dual loop), and either the
// generated cut or the confirming support point.
struct TraceRecord {
  Vec vertex;
  double score = 0.0;
  bool cut = false;
  std::optional<Halfspace> cut_hs;
  std::optional<Vec> support;
};

namespace detail {

struct VecBitsHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (double d : v) {
      unsigned long long bits;
      std::memcpy(&bits, &d, sizeof bits);
      h ^= bits;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct VecBitsEq {
  bool operator()(const Vec& a, const Vec& b) const {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
  }
};

// Tracks vertex creation order and confirmations across double
// description updates; vertices keep their coordinates bit-for-bit when
// they survive a cut, so matching is bitwise.
class VertexQueue {
 public:
  void sync(const std::vector<Vec>& vertices);
  // Index into the current vertex list, or -1 when all are confirmed.
  int pick(Selection sel) const;
  void confirm(const Vec& v);
  const std::vector<Vec>& vertices() const { return order_; }

 private:
  std::vector<Vec> order_;  // current vertices in creation order
  std::unordered_set<Vec, VecBitsHash, VecBitsEq> confirmed_;
};

}  // namespace detail

}  // namespace benson

#endif
