#include "updown/triangle.hpp"

#include <algorithm>
#include <sstream>

namespace updown {

Triangle triangle_rows(const Signature& sig) {
    const int n = sig.order();
    Triangle t;
    t.rows.reserve(n);
    t.rows.push_back({Integer(1)});
    t.steps.reserve(n - 1);
    for (int step = 1; step < n; ++step) {
        const int q = sig.q(n - step);  // row step+1 consumes q_{n-step}
        const auto& prev = t.rows.back();
        std::vector<Integer> row(static_cast<std::size_t>(step) + 1);
        if (q == 1) {
            // new 0 at the right, sweep right-to-left
            row[step] = 0;
            for (int j = step - 1; j >= 0; --j) {
                row[j] = row[j + 1] + prev[j];
                ++t.additions;
            }
        } else {
            // new 0 at the left, sweep left-to-right
            row[0] = 0;
            for (int j = 1; j <= step; ++j) {
                row[j] = row[j - 1] + prev[j - 1];
                ++t.additions;
            }
        }
        t.steps.push_back(q);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Integer count_by_triangle(const Signature& sig) {
    Triangle t = triangle_rows(sig);
    Integer sum = 0;
    for (const auto& v : t.last_row()) sum += v;
    return sum;
}

std::string format_triangle(const Triangle& t) {
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 1;
    for (const auto& row : t.rows) {
        std::vector<std::string> line;
        line.reserve(row.size());
        for (const auto& v : row) {
            line.push_back(v.get_str());
            width = std::max(width, line.back().size());
        }
        cells.push_back(std::move(line));
    }
    const std::size_t cell = width + 2;
    std::ostringstream out;
    const std::size_t total = cells.back().size();
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line(cell * (total - cells[r].size()) / 2, ' ');
        for (std::size_t j = 0; j < cells[r].size(); ++j) {
            const std::string& s = cells[r][j];
            line += std::string(cell - s.size(), ' ') + s;
        }
        out << line << '\n';
    }
    return out.str();
}

}  // namespace updown
