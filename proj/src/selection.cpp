#include "maxflow/selection.hpp"

#include <algorithm>

namespace maxflow {

void Selector::reset(int n, int label_limit) {
  const size_t levels = static_cast<size_t>(std::max(label_limit, 0) + 1);
  mset_.assign(levels, {});
  lset_.assign(levels, {});
  nextl_.assign(levels, -1);
  prevl_.assign(levels, -1);
  next_.assign(static_cast<size_t>(n), -1);
  prev_.assign(static_cast<size_t>(n), -1);
  cls_.assign(static_cast<size_t>(n), ExcessClass::None);
  label_.assign(static_cast<size_t>(n), 0);
  maxml_ = -1;
  minl_ = -1;
}

void Selector::ensure(int label) {
  if (label < static_cast<int>(mset_.size())) return;
  size_t levels = static_cast<size_t>(label) + 1;
  mset_.resize(levels);
  lset_.resize(levels);
  nextl_.resize(levels, -1);
  prevl_.resize(levels, -1);
}

void Selector::splice_large_level(int label) {
  // Insert into the sorted chain of non-empty large levels.
  if (minl_ < 0 || label < minl_) {
    nextl_[label] = minl_;
    prevl_[label] = -1;
    if (minl_ >= 0) prevl_[minl_] = label;
    minl_ = label;
    return;
  }
  int p = minl_;
  while (nextl_[p] >= 0 && nextl_[p] < label) {
    p = nextl_[p];
    ++scans_;
  }
  nextl_[label] = nextl_[p];
  prevl_[label] = p;
  if (nextl_[p] >= 0) prevl_[nextl_[p]] = label;
  nextl_[p] = label;
}

void Selector::drop_large_level(int label) {
  int p = prevl_[label], q = nextl_[label];
  if (p >= 0)
    nextl_[p] = q;
  else
    minl_ = q;
  if (q >= 0) prevl_[q] = p;
  nextl_[label] = prevl_[label] = -1;
}

void Selector::unlink(int v) {
  ExcessClass c = cls_[v];
  if (c == ExcessClass::None) return;
  int d = label_[v];
  Level& lv = level(c, d);
  if (prev_[v] >= 0)
    next_[prev_[v]] = next_[v];
  else
    lv.head = next_[v];
  if (next_[v] >= 0)
    prev_[next_[v]] = prev_[v];
  else
    lv.tail = prev_[v];
  next_[v] = prev_[v] = -1;
  cls_[v] = ExcessClass::None;
  if (c == ExcessClass::Large && lv.head < 0) drop_large_level(d);
  if (d == maxml_) {
    while (maxml_ >= 0 && mset_[maxml_].head < 0 && lset_[maxml_].head < 0) {
      --maxml_;
      ++scans_;
    }
  }
}

void Selector::link(int v, ExcessClass c, int label) {
  ensure(label);
  Level& lv = level(c, label);
  bool was_empty = lv.head < 0;
  prev_[v] = lv.tail;
  next_[v] = -1;
  if (lv.tail >= 0)
    next_[lv.tail] = v;
  else
    lv.head = v;
  lv.tail = v;
  cls_[v] = c;
  label_[v] = label;
  if (c == ExcessClass::Large && was_empty) splice_large_level(label);
  maxml_ = std::max(maxml_, label);
}

void Selector::set(int v, ExcessClass cls, int label) {
  if (cls_[v] == cls && (cls == ExcessClass::None || label_[v] == label)) return;
  unlink(v);
  if (cls != ExcessClass::None) link(v, cls, label);
}

int Selector::select() const {
  if (minl_ >= 0) return lset_[minl_].head;
  if (maxml_ >= 0) return mset_[maxml_].head;
  return -1;
}

int Selector::next_l(int label) const {
  if (label >= 0 && label < static_cast<int>(lset_.size()) && lset_[label].head >= 0)
    return std::max(nextl_[label], 0);
  for (int p = minl_; p >= 0; p = nextl_[p])
    if (p > label) return p;
  return 0;
}

std::string Selector::audit(const std::vector<ExcessClass>& cls, const std::vector<int>& label) const {
  const int n = static_cast<int>(cls_.size());
  int maxml = -1, minl = -1;
  for (int v = 0; v < n; ++v) {
    if (cls[v] != cls_[v]) return "class of node " + std::to_string(v) + " differs";
    if (cls[v] == ExcessClass::None) continue;
    if (label[v] != label_[v]) return "label of node " + std::to_string(v) + " differs";
    maxml = std::max(maxml, label[v]);
    if (cls[v] == ExcessClass::Large && (minl < 0 || label[v] < minl)) minl = label[v];
  }
  if (maxml != maxml_) return "MaxML " + std::to_string(maxml_) + " expected " + std::to_string(maxml);
  if (minl != minl_) return "MinL " + std::to_string(minl_) + " expected " + std::to_string(minl);
  // Each list holds exactly its members, linked consistently.
  std::vector<int> seen(static_cast<size_t>(n), 0);
  for (int which = 0; which < 2; ++which) {
    const auto& lists = which == 0 ? mset_ : lset_;
    ExcessClass want = which == 0 ? ExcessClass::Medium : ExcessClass::Large;
    for (int d = 0; d < static_cast<int>(lists.size()); ++d) {
      int prev = -1;
      for (int v = lists[d].head; v >= 0; v = next_[v]) {
        if (cls_[v] != want || label_[v] != d || prev_[v] != prev) return "list corruption at label " + std::to_string(d);
        ++seen[v];
        prev = v;
      }
      if (lists[d].tail != prev) return "tail mismatch at label " + std::to_string(d);
    }
  }
  for (int v = 0; v < n; ++v)
    if (seen[v] != (cls_[v] == ExcessClass::None ? 0 : 1)) return "node " + std::to_string(v) + " listed wrongly";
  std::vector<int> levels;
  for (int d = 0; d < static_cast<int>(lset_.size()); ++d)
    if (lset_[d].head >= 0) levels.push_back(d);
  int p = minl_;
  for (int d : levels) {
    if (p != d) return "NextL chain misses label " + std::to_string(d);
    p = nextl_[p];
  }
  if (p != -1) return "NextL chain runs past the last large level";
  return {};
}

}  // namespace maxflow
