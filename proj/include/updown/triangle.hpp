// de Bruijn-Viennot boustrophedon triangle for counting permutations by
// signature in O(n^2) additions.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "updown/exact.hpp"
#include "updown/signature.hpp"

namespace updown {

struct Triangle {
    // rows[r] has r+1 entries, stored left to right in a fixed frame.
    std::vector<std::vector<Integer>> rows;
    // Sweep side per growth step: +1 appended the new 0 at the right and
    // swept right-to-left, -1 the mirror image. steps[i] corresponds to
    // q_{n-1-i}, the signature being consumed back to front.
    std::vector<int> steps;
    // Additions performed while building; the sweep is quadratic in n.
    std::uint64_t additions = 0;

    const std::vector<Integer>& last_row() const { return rows.back(); }
};

Triangle triangle_rows(const Signature& sig);

/// Sum of the last row: the number of permutations with this signature.
Integer count_by_triangle(const Signature& sig);

/// Centered pyramid layout.
std::string format_triangle(const Triangle& t);

}  // namespace updown
