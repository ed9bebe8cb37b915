#pragma once
#include <cstdint>
#include <vector>

namespace skewbrace {

// Bit-set over element indices {0,...,n-1}.  Comparison order is
// (popcount, lexicographic index list), used everywhere a deterministic
// ordering of substructures is needed.
class ElemSet {
public:
    ElemSet() : n_(0) {}
    explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static ElemSet single(int n, int e) {
        ElemSet s(n);
        s.add(e);
        return s;
    }
    static ElemSet full(int n) {
        ElemSet s(n);
        for (int i = 0; i < n; ++i) s.add(i);
        return s;
    }

    int universe() const { return n_; }
    void add(int e) { w_[e >> 6] |= uint64_t(1) << (e & 63); }
    void remove(int e) { w_[e >> 6] &= ~(uint64_t(1) << (e & 63)); }
    bool contains(int e) const { return (w_[e >> 6] >> (e & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool operator==(const ElemSet& o) const { return w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return w_ != o.w_; }

    bool subset_of(const ElemSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool proper_subset_of(const ElemSet& o) const {
        return subset_of(o) && w_ != o.w_;
    }

    ElemSet operator|(const ElemSet& o) const {
        ElemSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    ElemSet operator&(const ElemSet& o) const {
        ElemSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    // size first, then lexicographic on the sorted index list
    bool before(const ElemSet& o) const {
        int a = count(), b = o.count();
        if (a != b) return a < b;
        for (int i = 0; i < n_; ++i) {
            bool x = contains(i), y = o.contains(i);
            if (x != y) return x;
        }
        return false;
    }

private:
    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace skewbrace
