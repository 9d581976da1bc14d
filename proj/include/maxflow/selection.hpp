#pragma once

#include <string>
#include <vector>

namespace maxflow {

enum class ExcessClass : unsigned char { None, Medium, Large };

// Per-label FIFO lists of medium (MSet) and large (LSet) excess nodes with
// MaxML, MinL and the NextL chain over non-empty LSet levels.
class Selector {
 public:
  void reset(int n, int label_limit);

  // Moves v to the list for (cls, label); None removes it.
  void set(int v, ExcessClass cls, int label);
  ExcessClass class_of(int v) const { return cls_[v]; }

  // First node of LSet(MinL), else first node of MSet(MaxML), else -1.
  int select() const;

  // 0 when no node has medium or large excess (MSet(0) may still be non-empty).
  int max_ml() const { return maxml_ < 0 ? 0 : maxml_; }
  // -1 when LargeSet is empty.
  int min_l() const { return minl_; }
  // Least label above `label` with non-empty LSet, or 0.
  int next_l(int label) const;

  bool empty() const { return minl_ < 0 && maxml_ < 0; }
  std::size_t scans() const { return scans_; }

  // Compares every structure with a from-scratch rebuild for the given
  // classes and labels; returns a description of the first mismatch.
  std::string audit(const std::vector<ExcessClass>& cls, const std::vector<int>& label) const;

 private:
  struct Level {
    int head = -1;
    int tail = -1;
  };
  Level& level(ExcessClass c, int label) { return c == ExcessClass::Large ? lset_[label] : mset_[label]; }
  void ensure(int label);
  void unlink(int v);
  void link(int v, ExcessClass c, int label);
  void splice_large_level(int label);
  void drop_large_level(int label);

  std::vector<Level> mset_, lset_;
  std::vector<int> next_, prev_;  // per node, within its level list
  std::vector<ExcessClass> cls_;
  std::vector<int> label_;
  std::vector<int> nextl_, prevl_;  // chain of non-empty LSet levels; -1 ends
  int maxml_ = -1;
  int minl_ = -1;
  std::size_t scans_ = 0;
};

}  // namespace maxflow
