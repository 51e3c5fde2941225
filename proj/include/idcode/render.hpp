#pragma once

#include <string>

#include "idcode/code_set.hpp"
#include "idcode/product_graph.hpp"

namespace idcode {

/// Grid with one line per row, row m first and row 1 last; column 1 on the left.
/// `*` marks a codeword, `.` any other vertex.
inline std::string render_ascii(const ProductGraph& p, const CodeSet& c) {
    check_owner(p, c);
    std::string out;
    out.reserve(static_cast<std::size_t>(p.m()) * (2 * static_cast<std::size_t>(p.n())));
    for (int j = p.m(); j >= 1; --j) {
        for (int i = 1; i <= p.n(); ++i) {
            if (i > 1) out += ' ';
            out += c.contains(p.vertex(i, j)) ? '*' : '.';
        }
        out += '\n';
    }
    return out;
}

}  // namespace idcode
