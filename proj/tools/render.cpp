#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mubcli {

namespace {

using Row = std::pair<std::string, mub::Interval>;

std::vector<Row> sorted_rows(const mub::Representation& rep) {
    std::vector<Row> rows(rep.begin(), rep.end());
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.second.l() != b.second.l())
            return a.second.l() < b.second.l();
        return a.second.r() < b.second.r();
    });
    return rows;
}

double as_double(const mub::Rational& q) { return static_cast<double>(q); }

} // namespace

std::string render_ascii(const mub::Representation& rep, int scale) {
    if (rep.empty())
        return {};
    auto rows = sorted_rows(rep);
    mub::Rational lo = rows.front().second.l();
    std::size_t width = 0;
    for (auto& [label, iv] : rows)
        width = std::max(width, label.size());
    auto col = [&](const mub::Rational& p) {
        return static_cast<std::size_t>(std::llround(as_double((p - lo) * scale)));
    };
    std::ostringstream out;
    for (auto& [label, iv] : rows) {
        std::size_t a = col(iv.l()), b = col(iv.r());
        if (b <= a)
            b = a + 1;
        std::string line(b + 1, ' ');
        line[a] = iv.left_closed() ? '[' : '(';
        std::fill(line.begin() + static_cast<std::ptrdiff_t>(a) + 1, line.begin() + static_cast<std::ptrdiff_t>(b), '=');
        line[b] = iv.right_closed() ? ']' : ')';
        out << label << std::string(width - label.size() + 2, ' ') << line << "  " << mub::to_string(iv) << '\n';
    }
    return out.str();
}

std::string render_svg(const mub::Representation& rep) {
    auto rows = sorted_rows(rep);
    const double unit = 80, gap = 24, margin = 90, radius = 4;
    double lo = rows.empty() ? 0 : as_double(rows.front().second.l());
    double hi = lo;
    for (auto& [label, iv] : rows)
        hi = std::max(hi, as_double(iv.r()));
    double w = margin + (hi - lo) * unit + 30;
    double h = gap * (static_cast<double>(rows.size()) + 1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    double y = gap;
    for (auto& [label, iv] : rows) {
        double x1 = margin + (as_double(iv.l()) - lo) * unit;
        double x2 = margin + (as_double(iv.r()) - lo) * unit;
        out << "  <text x=\"4\" y=\"" << y + 4 << "\" font-size=\"12\">" << label << "</text>\n";
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        for (auto [x, closed] : {std::pair{x1, iv.left_closed()}, std::pair{x2, iv.right_closed()}})
            out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << radius << "\" stroke=\"black\" fill=\""
                << (closed ? "black" : "white") << "\"/>\n";
        y += gap;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace mubcli
