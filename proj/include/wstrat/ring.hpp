#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wstrat/rational.hpp"

namespace wstrat {

// A contiguous group of variables (e.g. the x-block and the dual xi-block of
// a conormal ring).  Blocks partition the variable list.
struct Block {
    std::string name;
    int first = 0;
    int count = 0;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variable names plus block structure.  Rings are immutable and shared;
// structural equality (same names, same blocks) is what operations require.
class Ring {
  public:
    static RingPtr make(std::vector<std::string> vars,
                        std::vector<Block> blocks = {});

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(int i) const { return vars_[i]; }
    const std::vector<Block>& blocks() const { return blocks_; }

    // -1 when the name is not a variable of this ring.
    int index_of(const std::string& name) const;
    const Block* block(const std::string& name) const;

    bool same_as(const Ring& other) const;

    // Ring with extra variables appended as a new block.
    RingPtr extended(const std::vector<std::string>& extra,
                     const std::string& block_name) const;
    // Ring with the masked variables removed (mask indexed by variable);
    // blocks shrink accordingly and empty blocks are dropped.
    RingPtr without(const std::vector<char>& drop_mask) const;

  private:
    std::vector<std::string> vars_;
    std::vector<Block> blocks_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

}  // namespace wstrat
