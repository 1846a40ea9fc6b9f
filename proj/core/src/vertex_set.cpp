#include "chroma/vertex_set.hpp"

namespace chroma {

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : elements()) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    }
    s += '}';
    return s;
}

bool is_strict_chain(const Chain& ch) {
    for (std::size_t i = 1; i < ch.size(); ++i)
        if (!ch[i - 1].proper_subset_of(ch[i])) return false;
    return true;
}

}  // namespace chroma
