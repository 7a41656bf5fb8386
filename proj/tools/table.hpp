#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace unipotent::cli {

// Display width of UTF-8 text: continuation bytes do not count.
inline std::size_t display_width(const std::string& s)
{
    std::size_t n = 0;
    for (unsigned char ch : s)
        n += (ch & 0xC0) != 0x80;
    return n;
}

// Left-aligned text table or GitHub markdown table.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print_text(std::ostream& out) const
    {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c)
            width[c] = display_width(header[c]);
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], display_width(r[c]));
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                s += cells[c];
                if (c + 1 < cells.size())
                    s += std::string(width[c] - display_width(cells[c]) + 2, ' ');
            }
            out << s << "\n";
        };
        line(header);
        std::vector<std::string> rule;
        for (auto w : width)
            rule.push_back(std::string(w, '-'));
        line(rule);
        for (const auto& r : rows)
            line(r);
    }

    void print_markdown(std::ostream& out) const
    {
        auto line = [&](const std::vector<std::string>& cells) {
            out << "|";
            for (const auto& c : cells)
                out << " " << c << " |";
            out << "\n";
        };
        line(header);
        out << "|";
        for (std::size_t c = 0; c < header.size(); ++c)
            out << "---|";
        out << "\n";
        for (const auto& r : rows)
            line(r);
    }
};

} // namespace unipotent::cli
