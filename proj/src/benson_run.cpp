#include "benson/benson_run.hpp"

namespace benson::detail {

namespace {

using VecSet = std::unordered_set<Vec, VecBitsHash, VecBitsEq>;

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - 1e-12) return true;
    if (a[i] > b[i] + 1e-12) return false;
  }
  return false;
}

}  // namespace

void VertexQueue::sync(const std::vector<Vec>& vertices) {
  VecSet incoming(vertices.begin(), vertices.end());
  std::vector<Vec> next;
  next.reserve(vertices.size());
  VecSet kept;
  for (const Vec& v : order_) {
    if (incoming.count(v)) {
      next.push_back(v);
      kept.insert(v);
    }
  }
  for (const Vec& v : vertices) {
    if (!kept.count(v)) next.push_back(v);
  }
  order_ = std::move(next);
}

int VertexQueue::pick(Selection sel) const {
  int best = -1;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (confirmed_.count(order_[i])) continue;
    if (sel == Selection::Fifo) return static_cast<int>(i);
    if (best < 0 || lex_less(order_[i], order_[best])) best = static_cast<int>(i);
  }
  return best;
}

void VertexQueue::confirm(const Vec& v) { confirmed_.insert(v); }

}  // namespace benson::detail
