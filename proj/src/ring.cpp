#include "wstrat/ring.hpp"

#include <algorithm>
#include <set>

namespace wstrat {

RingPtr Ring::make(std::vector<std::string> vars, std::vector<Block> blocks) {
    auto r = std::make_shared<Ring>();
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw structural_error("duplicate variable names in ring");
    if (blocks.empty())
        blocks.push_back({"x", 0, static_cast<int>(vars.size())});
    int at = 0;
    for (const Block& b : blocks) {
        if (b.first != at || b.count <= 0)
            throw structural_error("ring blocks must partition the variables");
        at += b.count;
    }
    if (at != static_cast<int>(vars.size()))
        throw structural_error("ring blocks must partition the variables");
    r->vars_ = std::move(vars);
    r->blocks_ = std::move(blocks);
    return r;
}

int Ring::index_of(const std::string& name) const {
    for (int i = 0; i < arity(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

const Block* Ring::block(const std::string& name) const {
    for (const Block& b : blocks_)
        if (b.name == name) return &b;
    return nullptr;
}

bool Ring::same_as(const Ring& other) const {
    if (this == &other) return true;
    if (vars_ != other.vars_ || blocks_.size() != other.blocks_.size())
        return false;
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].name != other.blocks_[i].name ||
            blocks_[i].first != other.blocks_[i].first ||
            blocks_[i].count != other.blocks_[i].count)
            return false;
    return true;
}

RingPtr Ring::extended(const std::vector<std::string>& extra,
                       const std::string& block_name) const {
    std::vector<std::string> vars = vars_;
    vars.insert(vars.end(), extra.begin(), extra.end());
    std::vector<Block> blocks = blocks_;
    blocks.push_back({block_name, arity(), static_cast<int>(extra.size())});
    return make(std::move(vars), std::move(blocks));
}

RingPtr Ring::without(const std::vector<char>& drop_mask) const {
    std::vector<std::string> vars;
    std::vector<Block> blocks;
    for (const Block& b : blocks_) {
        int first = static_cast<int>(vars.size());
        for (int i = b.first; i < b.first + b.count; ++i)
            if (!drop_mask[i]) vars.push_back(vars_[i]);
        int count = static_cast<int>(vars.size()) - first;
        if (count > 0) blocks.push_back({b.name, first, count});
    }
    if (vars.empty()) throw structural_error("cannot drop every ring variable");
    return make(std::move(vars), std::move(blocks));
}

}  // namespace wstrat
